#include "hadamard/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hadamard/core.hpp"

namespace hadamard {

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::string fixture_dir() {
  if (const char* e = std::getenv("HADAMARD_FIXTURES"); e && *e) return e;
#ifdef HADAMARD_FIXTURE_DIR
  return HADAMARD_FIXTURE_DIR;
#else
  return "data";
#endif
}

std::string fixture_path(const std::string& relative) { return (fs::path(fixture_dir()) / relative).string(); }

std::optional<std::string> external_data_dir() {
  const char* e = std::getenv("HADAMARD_DATA");
  if (!e || !*e || !fs::is_directory(e)) return std::nullopt;
  return std::string(e);
}

SignMatrix parse_loose_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    std::vector<int> row;
    bool ok = true;
    std::istringstream tok(line);
    std::string t;
    // either one token of +/- characters or a list of 1 / -1 numbers
    std::vector<std::string> toks;
    while (tok >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() == 1 && toks[0].find_first_not_of("+-") == std::string::npos && toks[0].size() > 1) {
      for (char c : toks[0]) row.push_back(c == '+' ? 1 : -1);
    } else {
      for (const auto& s : toks) {
        if (s == "1" || s == "+1" || s == "+") row.push_back(1);
        else if (s == "-1" || s == "-") row.push_back(-1);
        else {
          ok = false;
          break;
        }
      }
    }
    if (!ok || row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.size() != rows.front().size()) throw std::invalid_argument("no square sign matrix found");
  return SignMatrix::from_rows(rows);
}

std::optional<SignMatrix> load_external_matrix(const std::string& name) {
  auto dir = external_data_dir();
  if (!dir) return std::nullopt;
  for (const std::string& cand : {name, name + ".txt"}) {
    fs::path p = fs::path(*dir) / cand;
    if (fs::is_regular_file(p)) return parse_loose_matrix(slurp(p.string()));
  }
  return std::nullopt;
}

SignMatrix fixture_matrix(const std::string& name) {
  fs::path file = fs::path(fixture_dir()) / "matrices" / (name + ".txt");
  if (fs::is_regular_file(file)) return read_matrix_file(file.string());
  std::ifstream in(fixture_path("tables/binary_codes.json"));
  if (!in) throw std::runtime_error("fixture tables missing under " + fixture_dir());
  auto j = nlohmann::json::parse(in);
  const auto& rows = j.at("circulant_rows");
  if (!rows.contains(name)) {
    // H<2^k>: Sylvester
    if (name.size() > 1 && name[0] == 'H' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      int n = std::stoi(name.substr(1));
      if (n >= 2 && n <= kMaxOrder && (n & (n - 1)) == 0) return sylvester(n);
    }
    throw std::invalid_argument("unknown fixture matrix " + name);
  }
  return circulant_bordered(rows.at(name).get<std::string>());
}

BinaryCode seed_code(const std::string& name) {
  fs::path file = fs::path(fixture_dir()) / "codes" / (name + ".gen");
  if (fs::is_regular_file(file)) {
    BinaryCode g = read_code_file(file.string());
    return span(g.length(), g.words());
  }
  return code_of_hadamard(normalize(fixture_matrix(name)));
}

BinaryCode fixture_binary_code(const std::string& name) {
  std::ifstream in(fixture_path("tables/binary_codes.json"));
  if (!in) throw std::runtime_error("fixture tables missing under " + fixture_dir());
  auto j = nlohmann::json::parse(in);
  auto supports = [](const std::string& file) {
    return parse_support_list(slurp(fixture_path("tables/" + file)));
  };
  for (const char* fam : {"length8", "length16"}) {
    const auto& f = j.at(fam);
    for (const auto& c : f.at("codes")) {
      if (c.at("name") != name) continue;
      std::string seed = f.at("seed");
      std::vector<Word> reps = supports(f.at("reps")), us;
      for (int k : c.at("X")) us.push_back(reps.at(k - 1));
      return union_of_translates(seed_code(seed.substr(0, seed.find('.'))), us);
    }
  }
  if (name == "C24") {
    const auto& c = j.at("c24");
    return union_of_translates(seed_code("H24_2"), supports(c.at("translates")));
  }
  for (const auto& w : j.at("weak"))
    if (w.at("name") == name) {
      Word u = word_from_support(w.at("u").get<std::vector<int>>());
      return union_of_translates(seed_code(w.at("seed")), {0, u});
    }
  throw std::invalid_argument("unknown fixture code " + name);
}

Z4LinearCode fixture_z4(const std::string& file) { return read_z4_code_file(fixture_path("z4/" + file)); }

SignMatrix resolve_matrix(const std::string& spec) {
  if (fs::is_regular_file(spec)) return parse_loose_matrix(slurp(spec));
  if (spec.rfind("had.", 0) == 0) {
    if (auto m = load_external_matrix(spec)) return *m;
    throw std::runtime_error("external data absent: " + spec + " (set HADAMARD_DATA)");
  }
  if (spec.rfind("fixtures/", 0) == 0) return fixture_matrix(spec.substr(9));
  return fixture_matrix(spec);
}

}  // namespace hadamard
