#include "hadamard/audit.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "hadamard/canonical.hpp"
#include "hadamard/classify.hpp"
#include "hadamard/core.hpp"
#include "hadamard/fixtures.hpp"

namespace hadamard {

using nlohmann::json;

bool AuditReport::ok() const { return failures() == 0; }

std::size_t AuditReport::failures() const {
  std::size_t k = 0;
  for (const auto& i : items) k += !i.ok;
  return k;
}

std::string AuditReport::to_text() const {
  std::ostringstream s;
  for (const auto& i : items) s << (i.ok ? "ok   " : "FAIL ") << i.table << "  " << i.name << "  " << i.detail << "\n";
  s << items.size() - failures() << "/" << items.size() << " checks passed\n";
  return s.str();
}

namespace {

json load_json(const std::string& rel) {
  std::ifstream in(fixture_path(rel));
  if (!in) throw std::runtime_error("missing fixture " + rel);
  return json::parse(in);
}

std::vector<Word> load_supports(const std::string& rel, int* n) {
  std::ifstream in(fixture_path(rel));
  if (!in) throw std::runtime_error("missing fixture " + rel);
  std::stringstream s;
  s << in.rdbuf();
  return parse_support_list(s.str(), n);
}

std::string distr(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::int64_t> integer_distribution(const BinaryCode& c) {
  std::vector<std::int64_t> out;
  for (const auto& a : distance_distribution(c).counts) {
    if (denominator(a) != 1) return {};
    out.push_back(static_cast<std::int64_t>(numerator(a)));
  }
  return out;
}

// blocks are the translates u + C1 themselves
BlockPartition translate_blocks(const BinaryCode& code, const BinaryCode& c1, const std::vector<Word>& us) {
  std::unordered_map<Word, std::size_t> idx;
  for (std::size_t i = 0; i < code.size(); ++i) idx[code.words()[i]] = i;
  BlockPartition p;
  for (Word u : us) {
    std::vector<std::size_t> b;
    for (Word c : c1.words()) b.push_back(idx.at(u ^ c));
    p.push_back(std::move(b));
  }
  return p;
}

void audit_binary_family(AuditReport& r, const std::string& table, const json& fam) {
  BinaryCode seed = seed_code(fam["seed"].get<std::string>().substr(0, 4));
  int n = 0;
  std::vector<Word> reps = load_supports("tables/" + fam["reps"].get<std::string>(), &n);
  {
    std::vector<Word> cosets;
    std::vector<Word> ech = echelon_basis(seed.words(), n);
    for (Word x : reps) {
      Word v = x;
      for (Word b : ech)
        if (v & b & (~b + 1)) v ^= b;
      cosets.push_back(v);
    }
    std::sort(cosets.begin(), cosets.end());
    bool distinct = std::adjacent_find(cosets.begin(), cosets.end()) == cosets.end();
    bool complete = (reps.size() << ech.size()) == (std::size_t{1} << n);
    r.items.push_back({table, "transversal", distinct,
                       std::to_string(reps.size()) + " representatives in distinct cosets of the seed" +
                           (complete ? ", all cosets" : "")});
  }
  std::map<int, std::vector<std::string>> by_f;
  for (const auto& cj : fam["codes"]) {
    std::string name = cj["name"];
    std::vector<Word> us;
    for (int k : cj["X"]) us.push_back(reps.at(k - 1));
    BinaryCode code = union_of_translates(seed, us);
    int f = static_cast<int>(us.size());
    int dh = cj["dH"];
    int alpha = n / 2 - dh;
    bool cond = check_F2(code, alpha, f);
    int d = min_distance(code);
    r.items.push_back({table, name, cond && d == dh,
                       "F2 with alpha " + std::to_string(alpha) + " f " + std::to_string(f) + ": " + (cond ? "yes" : "no") +
                           ", d_H " + std::to_string(d) + " (table " + std::to_string(dh) + ")"});
    by_f[f].push_back(code_certificate(code));
  }
  // the tabled codes are exactly the classes found by the extension search
  BinaryClassification cls = classify_binary_extensions(seed, {});
  bool same = true;
  std::string detail;
  for (auto& [f, certs] : by_f) {
    std::vector<std::string> mine;
    for (int ff = 0; ff < static_cast<int>(cls.levels.size()); ++ff)
      if (cls.levels[ff].f == f)
        for (const auto& c : cls.levels[ff].classes) mine.push_back(c.certificate);
    std::sort(mine.begin(), mine.end());
    std::sort(certs.begin(), certs.end());
    bool eq = mine == certs;
    same = same && eq;
    detail += "f" + std::to_string(f) + ":" + std::to_string(certs.size()) + (eq ? "" : "!=" + std::to_string(mine.size())) + " ";
  }
  r.items.push_back({table, "classes", same, "tabled codes equal the search's classes " + detail});
}

void audit_c24(AuditReport& r, const json& j) {
  BinaryCode c1 = seed_code("H24_2");
  int n = 0;
  std::vector<Word> us = load_supports("tables/" + j["translates"].get<std::string>(), &n);
  BinaryCode code = union_of_translates(c1, us);
  int alpha = j["alpha"], f = j["f"], dh = j["dH"];
  bool cond = check_F2(code, alpha, f);
  int d = min_distance(code);
  r.items.push_back({"C24", "C24", cond && d == dh && static_cast<int>(code.size()) == 2 * f * n,
                     "(" + std::to_string(n) + "," + std::to_string(code.size()) + "," + std::to_string(d) + ") F2 alpha " +
                         std::to_string(alpha) + ": " + (cond ? "yes" : "no")});
  std::vector<SignMatrix> ms = psi_matrices(code, translate_blocks(code, c1, us));
  bool mutual = check_mutual(ms, PairClassification::quasi_unbiased(j["l"], j["a"]));
  r.items.push_back({"C24", "psi", mutual && static_cast<int>(ms.size()) == f,
                     std::to_string(ms.size()) + " matrices mutually QU(" + std::to_string(j["l"].get<int>()) + "," +
                         std::to_string(j["a"].get<int>()) + ")"});
}

void audit_weak(AuditReport& r, const json& rows) {
  for (const auto& w : rows) {
    std::string name = w["name"];
    std::string seed = w["seed"];
    BinaryCode c1 = seed_code(seed);
    int n = c1.length();
    Word u = word_from_support(w["u"].get<std::vector<int>>());
    BinaryCode code = union_of_translates(c1, {0, u});
    std::vector<std::int64_t> want = w["dist"].get<std::vector<std::int64_t>>();
    std::vector<std::int64_t> got = integer_distribution(code);
    std::vector<int> offs;
    for (int d : distance_distribution(code).support())
      if (d != n && d != n / 2) {
        int o = std::abs(d - n / 2);
        if (std::find(offs.begin(), offs.end(), o) == offs.end()) offs.push_back(o);
      }
    std::sort(offs.begin(), offs.end());
    bool cond = offs.size() == 2 && check_weakF2(code, offs[0], offs[1]);
    bool pair = false;
    if (cond) {
      auto ms = psi_matrices(code, translate_blocks(code, c1, {0, u}));
      pair = classify_pair(ms[0], ms[1]).matches(PairClassification::weakly_unbiased(2 * offs[0], 2 * offs[1]));
    }
    r.items.push_back({"Table 10", name, got == want && cond && pair,
                       "distribution " + distr(got) + (got == want ? "" : " expected " + distr(want)) + ", sigma {" +
                           (offs.size() == 2 ? std::to_string(2 * offs[0]) + "," + std::to_string(2 * offs[1]) : "?") +
                           "}, pair " + (pair ? "weakly unbiased" : "not weak")});
  }
}

// no x outside C with <C, x> still quasi-unbiased for the same beta
bool z4_maximal(const Z4LinearCode& c, int beta) {
  int n = c.length();
  for (Z4Word x : half_transversal(c)) {
    bool ok = true;
    for (Z4Word w : c.words()) {
      int b = std::abs(z4_balance(w + x, n));
      if (b != 0 && b != beta) {
        ok = false;
        break;
      }
    }
    if (ok) return false;
  }
  return true;
}

void audit_z4(AuditReport& r, const json& j) {
  for (const auto& cj : j["maximal"]) {
    std::string name = cj["name"];
    Z4LinearCode c = fixture_z4(cj["file"]);
    int beta2 = cj["beta2"], dh = cj["dH"], dl = cj["dL"];
    auto beta = check_z4_qub(c);
    int k = std::stoi(name.substr(name.find(',') + 1));
    bool size_ok = c.log2_size() == 6 + k;
    int gh = min_hamming_distance(c), gl = min_lee_distance(c);
    bool ok = beta && *beta * *beta == beta2 && gh == dh && gl == dl && size_ok;
    bool maximal = ok && z4_maximal(c, *beta);
    r.items.push_back({"Table 16-2", name, ok && maximal,
                       "beta^2 " + (beta ? std::to_string(*beta * *beta) : std::string("none")) + " d_H " +
                           std::to_string(gh) + " d_L " + std::to_string(gl) + " |C| 2^" +
                           std::to_string(c.log2_size()) + (maximal ? " maximal" : " extendable")});
  }
  for (const auto& cj : j["type2"]) {
    std::string name = cj["name"];
    Z4LinearCode c = fixture_z4(cj["file"]);
    int a2 = cj["a2"], b2 = cj["b2"], dh = cj["dH"], dl = cj["dL"], f = cj["f"];
    auto ab = check_z4_weak(c, Parity::Even);
    int gh = min_hamming_distance(c), gl = min_lee_distance(c);
    bool ok = ab && ab->first * ab->first == a2 && ab->second * ab->second == b2 && gh == dh && gl == dl &&
              c.size() == static_cast<std::size_t>(4 * f * c.length());
    r.items.push_back({"Table 16-2'", name, ok,
                       "values " + (ab ? std::to_string(ab->first) + "," + std::to_string(ab->second) : std::string("none")) +
                           " d_H " + std::to_string(gh) + " d_L " + std::to_string(gl)});
  }
}

}  // namespace

AuditReport verify_fixture_tables() {
  AuditReport r;
  json b = load_json("tables/binary_codes.json");
  audit_binary_family(r, "Table 3", b["length8"]);
  audit_binary_family(r, "Table 4", b["length16"]);
  audit_c24(r, b["c24"]);
  audit_weak(r, b["weak"]);
  audit_z4(r, load_json("tables/z4_codes.json"));
  return r;
}

}  // namespace hadamard
