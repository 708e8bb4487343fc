#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadamard/audit.hpp"
#include "hadamard/bounds.hpp"
#include "hadamard/classify.hpp"
#include "hadamard/clique.hpp"
#include "hadamard/core.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/fixtures.hpp"
#include "hadamard/tables.hpp"

using namespace hadamard;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadArgs = 2, kBudget = 3 };

bool g_json = false;

// every command builds one record; text output is rendered from it
int emit(const json& rec, const std::function<std::string(const json&)>& text, int code) {
  if (g_json)
    std::cout << rec.dump() << "\n";
  else
    std::cout << text(rec);
  return code;
}

void progress(const std::string& s) { std::cerr << s << std::endl; }

std::array<int, 2> parse_two(const std::string& s, const char* what) {
  std::array<int, 2> v{};
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> v[0] >> comma >> v[1]) || comma != ',') throw CLI::ValidationError(what, "expected two integers a,b");
  return v;
}

PairCondition parse_condition(const std::string& s) {
  if (s == "qub") return PairCondition::Qub;
  if (s == "weak") return PairCondition::Weak;
  if (s == "weakII") return PairCondition::WeakII;
  throw CLI::ValidationError("--condition", "one of qub, weak, weakII");
}

json pair_record(const PairClassification& p) {
  json r = {{"kind", to_string(p.kind)}};
  if (p.kind == PairKind::QuasiUnbiased) {
    r["l"] = p.l;
    r["a"] = p.a;
  } else if (p.kind == PairKind::WeaklyUnbiased || p.kind == PairKind::TypeIIWeaklyUnbiased) {
    r["sigma"] = {p.sigma[0], p.sigma[1]};
    r["n_a"] = p.n_a;
  }
  return r;
}

BinaryCode load_seed(const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(spec)) {
    BinaryCode c = read_code_file(spec);
    return spec.size() > 4 && spec.substr(spec.size() - 4) == ".gen" ? span(c.length(), c.words()) : c;
  }
  if (spec.rfind("had.", 0) == 0) return code_of_hadamard(normalize(resolve_matrix(spec)));
  if (spec.find(',') != std::string::npos || spec == "C24") return fixture_binary_code(spec);
  return seed_code(spec);
}

int cmd_verify(const std::string& hs, const std::string& ks) {
  SignMatrix h = resolve_matrix(hs), k = resolve_matrix(ks);
  PairClassification p = classify_pair(h, k);
  bool ok = p.kind != PairKind::NotHadamardPair && p.kind != PairKind::Irregular;
  return emit(pair_record(p), [&](const json&) { return p.describe() + "\n"; }, ok ? kOk : kFailed);
}

int cmd_params(const std::string& kind, int n) {
  json rows = json::array();
  if (kind == "qub") {
    for (const QubParams& p : feasible_qub_params(n))
      rows.push_back({{"l", p.l}, {"a", p.a}, {"alpha", p.alpha},
                      {"status", p.status == ParamStatus::Open ? "open" : "ruled out"},
                      {"reason", p.status == ParamStatus::Open ? json(nullptr) : json(to_string(p.reason))}});
  } else {
    for (const WeakParams& w : feasible_weak_params(n, kind == "weak" ? 2 : 0))
      rows.push_back({{"a", w.a}, {"b", w.b}, {"n_a", w.n_a}, {"existence", nullptr}});
  }
  json rec = {{"n", n}, {"kind", kind}, {"params", rows}};
  return emit(rec, [&](const json& r) {
    std::string s;
    for (const auto& p : r["params"]) {
      if (kind == "qub")
        s += "(" + std::to_string(p["l"].get<long>()) + "," + std::to_string(p["a"].get<long>()) + ")  alpha " +
             std::to_string(p["alpha"].get<long>()) + "  " + p["status"].get<std::string>() +
             (p["reason"].is_null() ? "" : " (" + p["reason"].get<std::string>() + ")") + "\n";
      else
        s += "(" + std::to_string(p["a"].get<long>()) + "," + std::to_string(p["b"].get<long>()) + "," +
             std::to_string(p["n_a"].get<long>()) + ")\n";
    }
    return s.empty() ? std::string("none\n") : s;
  }, kOk);
}

std::string lp_text(const json& v) { return v.is_null() ? "*" : std::to_string(v.get<long>()); }

int cmd_bounds_qub(int n, int alpha) {
  QubBounds b = qub_bounds(n, alpha);
  json rec = {{"n", n}, {"alpha", alpha}, {"absolute", b.absolute}, {"absolute_refined", b.absolute_refined},
              {"table_absolute", b.table_absolute()}, {"lp", b.lp ? json(*b.lp) : json(nullptr)}};
  return emit(rec, [](const json& r) {
    return "absolute " + std::to_string(r["absolute"].get<long>()) + " (refined " +
           std::to_string(r["absolute_refined"].get<long>()) + ")  LP " + lp_text(r["lp"]) + "\n";
  }, kOk);
}

int cmd_bounds_weakII(int n, int a, int b) {
  WeakIIBounds w = weakII_bounds(n, a, b);
  json rec = {{"n", n}, {"a", a}, {"b", b}, {"absolute", w.absolute}, {"lp", w.lp ? json(*w.lp) : json(nullptr)}};
  return emit(rec, [](const json& r) {
    return "absolute " + std::to_string(r["absolute"].get<long>()) + "  LP " + lp_text(r["lp"]) + "\n";
  }, kOk);
}

int cmd_table(const std::string& which) {
  auto id = parse_table_id(which);
  if (!id) throw CLI::ValidationError("table", "one of 1, 2, 8, 9, weakIIUB");
  json recs = table_records(*id);
  return emit(recs, [&](const json& r) { return render_table(*id, r); }, kOk);
}

int cmd_mate(const std::string& hs, const std::string& sigma, const std::string& qub, bool count) {
  SignMatrix h = resolve_matrix(hs);
  auto t0 = std::chrono::steady_clock::now();
  json rec = {{"n", h.order()}};
  std::optional<SignMatrix> mate;
  if (!qub.empty()) {
    auto [l, a] = parse_two(qub, "--qub");
    rec["target"] = {{"kind", "QuasiUnbiased"}, {"l", l}, {"a", a}};
    if (count) {
      progress("enumerating all mates");
      std::vector<SignMatrix> all = enumerate_qub_mates(h, l, a);
      rec["mates"] = all.size();
      progress("testing pairs among " + std::to_string(all.size()) + " mates");
      rec["mutual_pair"] = any_mutual_pair(all, l, a);
      if (!all.empty()) mate = all.front();
    } else {
      mate = find_qub_mate(h, l, a);
    }
  } else if (!sigma.empty()) {
    auto s = parse_two(sigma, "--sigma");
    rec["target"] = {{"sigma", {s[0], s[1]}}};
    mate = find_mate(h, s);
  } else {
    throw CLI::ValidationError("search mate", "give --sigma a,b or --qub l,a");
  }
  rec["found"] = mate.has_value();
  if (mate) {
    rec["pair"] = pair_record(classify_pair(h, *mate));
    rec["matrix"] = format_matrix(*mate);
  }
  rec["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return emit(rec, [](const json& r) {
    std::string s;
    if (r.contains("mates"))
      s += "mates " + std::to_string(r["mates"].get<long>()) + ", mutually related pair " +
           (r["mutual_pair"].get<bool>() ? "exists" : "none") + "\n";
    if (!r["found"].get<bool>()) return s + "no mate\n";
    return s + r["matrix"].get<std::string>();
  }, mate ? kOk : kFailed);
}

int cmd_clique(const std::string& hs, const std::string& sigma, bool pre, std::uint64_t budget) {
  SignMatrix h = resolve_matrix(hs);
  auto s = parse_two(sigma, "--sigma");
  MateGraph g = build_mate_graph(h, s);
  json rec = {{"n", h.order()}, {"sigma", {s[0], s[1]}}, {"vertices", g.size()}};
  progress("mate graph with " + std::to_string(g.size()) + " vertices");
  if (pre) {
    Prescreen p = prescreen(g);
    rec["prescreen"] = {p.part_ok[0], p.part_ok[1], p.part_ok[2], p.part_ok[3]};
    if (!p.passed()) {
      rec["max_clique"] = nullptr;
      return emit(rec, [](const json&) { return std::string("pre-screen failed\n"); }, kOk);
    }
  }
  CliqueResult c = max_clique(g.adj, budget);
  rec["max_clique"] = c.size;
  rec["exhausted"] = c.exhausted;
  rec["nodes"] = c.nodes;
  return emit(rec, [](const json& r) {
    return "max clique " + std::to_string(r["max_clique"].get<int>()) +
           (r["exhausted"].get<bool>() ? " (lower bound, budget exhausted)" : "") + "\n";
  }, c.exhausted ? kBudget : kOk);
}

ClassifyOptions classify_options(const std::string& manifest, bool resume, std::uint64_t shuffle) {
  ClassifyOptions o;
  o.manifest_dir = manifest;
  o.resume = resume;
  o.shuffle_seed = shuffle;
  o.log = progress;
  return o;
}

int cmd_classify_binary(const std::string& seed, const std::string& cond, const std::string& offsets, int f_max,
                        const ClassifyOptions& o) {
  BinaryClassSpec spec;
  spec.condition = parse_condition(cond);
  spec.f_max = f_max;
  if (!offsets.empty()) {
    std::istringstream in(offsets);
    std::string t;
    while (std::getline(in, t, ',')) spec.offsets.push_back(std::stoi(t));
  }
  BinaryClassification res = classify_binary_extensions(load_seed(seed), spec, o);
  json levels = json::array();
  for (const auto& lv : res.levels) {
    json cls = json::array();
    for (const auto& c : lv.classes) {
      json us = json::array();
      for (Word u : c.translates) us.push_back(support_of(u, c.code.length()));
      cls.push_back({{"translates", us}, {"offsets", c.offsets}, {"min_distance", min_distance(c.code)}});
    }
    levels.push_back({{"f", lv.f}, {"count", lv.classes.size()}, {"classes", cls}, {"seconds", lv.seconds}});
  }
  json rec = {{"seed", seed}, {"condition", cond}, {"levels", levels}};
  return emit(rec, [](const json& r) {
    std::string s;
    for (const auto& lv : r["levels"])
      s += "f=" + std::to_string(lv["f"].get<int>()) + "  N=" + std::to_string(lv["count"].get<long>()) + "\n";
    return s;
  }, kOk);
}

int cmd_classify_z4(int m, const std::string& cond, int k_max, const ClassifyOptions& o) {
  Z4Classification res = classify_z4_extensions(m, parse_condition(cond), k_max, o);
  json levels = json::array();
  for (const auto& lv : res.levels) {
    json cls = json::array();
    for (const auto& c : lv.classes) {
      json gens = json::array();
      for (Z4Word g : c.code.standard_form()) gens.push_back(z4_to_string(g, c.code.length()));
      cls.push_back({{"generators", gens}, {"values", c.values}, {"exact", c.exact}});
    }
    levels.push_back({{"k", lv.k}, {"count", lv.exact_count()}, {"classes_any", lv.classes.size()},
                      {"classes", cls}, {"seconds", lv.seconds}});
  }
  json rec = {{"m", m}, {"condition", cond}, {"levels", levels}};
  return emit(rec, [](const json& r) {
    std::string s;
    for (const auto& lv : r["levels"])
      s += "k=" + std::to_string(lv["k"].get<int>()) + "  N=" + std::to_string(lv["count"].get<long>()) + "\n";
    return s;
  }, kOk);
}

int cmd_fixtures() {
  AuditReport r = verify_fixture_tables();
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"table", i.table}, {"name", i.name}, {"ok", i.ok}, {"detail", i.detail}});
  return emit({{"ok", r.ok()}, {"items", items}}, [&](const json&) { return r.to_text(); }, r.ok() ? kOk : kFailed);
}

int cmd_scheme(const std::string& spec) {
  SchemeReport s = verify_association_scheme(load_seed(spec));
  json rec = {{"ok", s.ok}, {"distances", s.distances}, {"p", s.p}};
  if (!s.ok) rec["failure"] = s.failure;
  return emit(rec, [](const json& r) {
    if (!r["ok"].get<bool>()) return "not an association scheme: " + r["failure"].get<std::string>() + "\n";
    std::string s = "association scheme on distances";
    for (int d : r["distances"]) s += " " + std::to_string(d);
    return s + "\n";
  }, s.ok ? kOk : kFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-unbiased and weakly unbiased Hadamard matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file for data paths and budgets");
  int threads = 0;
  std::string data;
  app.add_flag("--json", g_json, "machine-readable output");
  app.add_option("--threads", threads, "cap on worker threads");
  app.add_option("--data", data, "external matrix library directory")->envname("HADAMARD_DATA");
  std::uint64_t budget = kDefaultCliqueBudget;
  app.add_option("--budget", budget, "search node budget");

  std::function<int()> run;

  auto* verify = app.add_subcommand("verify", "verify a pair of matrices");
  auto* vpair = verify->add_subcommand("pair", "classify the pair (H, K)");
  std::string h, k;
  vpair->add_option("H", h)->required();
  vpair->add_option("K", k)->required();
  vpair->callback([&] { run = [&] { return cmd_verify(h, k); }; });
  verify->require_subcommand(1);

  auto* params = app.add_subcommand("params", "feasible parameters for order n");
  std::string pkind;
  int n = 0;
  params->add_option("kind", pkind)->required()->check(CLI::IsMember({"qub", "weak", "weakII"}));
  params->add_option("n", n)->required()->check(CLI::PositiveNumber);
  params->callback([&] { run = [&] { return cmd_params(pkind, n); }; });

  auto* bounds = app.add_subcommand("bounds", "upper bounds on the number of matrices");
  bounds->require_subcommand(1);
  int ba = 0, bb = 0;
  auto* bq = bounds->add_subcommand("qub", "bounds qub <n> <alpha>");
  bq->add_option("n", n)->required();
  bq->add_option("alpha", ba)->required();
  bq->callback([&] { run = [&] { return cmd_bounds_qub(n, ba); }; });
  auto* bw = bounds->add_subcommand("weakII", "bounds weakII <n> <a> <b>, a and b half the entry values");
  bw->add_option("n", n)->required();
  bw->add_option("a", ba)->required();
  bw->add_option("b", bb)->required();
  bw->callback([&] { run = [&] { return cmd_bounds_weakII(n, ba, bb); }; });

  auto* table = app.add_subcommand("table", "print a parameter or bounds table for n = 4..48");
  std::string tid;
  table->add_option("id", tid, "1, 2, 8, 9 or weakIIUB")->required();
  table->callback([&] { run = [&] { return cmd_table(tid); }; });

  auto* search = app.add_subcommand("search", "mate search");
  search->require_subcommand(1);
  auto* mate = search->add_subcommand("mate", "find K with HK^T of the given kind");
  std::string sigma, qub;
  bool count = false;
  mate->add_option("H", h)->required();
  mate->add_option("--sigma", sigma, "weak or Type II values a,b");
  mate->add_option("--qub", qub, "quasi-unbiased parameters l,a");
  mate->add_flag("--all", count, "enumerate every mate and test for a mutual pair");
  mate->callback([&] { run = [&] { return cmd_mate(h, sigma, qub, count); }; });

  auto* clique = app.add_subcommand("clique", "maximum clique of the mate graph");
  bool pre = false;
  clique->add_option("H", h)->required();
  clique->add_option("--sigma", sigma)->required();
  clique->add_flag("--prescreen", pre, "require a quarter-size clique in each part first");
  clique->callback([&] { run = [&] { return cmd_clique(h, sigma, pre, budget); }; });

  auto* classify = app.add_subcommand("classify", "classify codes by augmentation");
  classify->require_subcommand(1);
  std::string manifest, cond = "qub", seed, offsets;
  bool resume = false;
  std::uint64_t shuffle = 0;
  int f_max = 0, m = 4, k_max = 0;
  auto* cb = classify->add_subcommand("binary", "union-of-translates codes");
  cb->add_option("--seed", seed, "rm13, rm14, rm15, a matrix name or a code file")->required();
  cb->add_option("--condition", cond)->check(CLI::IsMember({"qub", "weak", "weakII"}));
  cb->add_option("--offsets", offsets, "alpha, or a,b");
  cb->add_option("--fmax", f_max);
  auto* cz = classify->add_subcommand("z4", "linear Z4 codes containing ZRM(1,m)");
  cz->add_option("--m", m)->check(CLI::Range(3, 4));
  cz->add_option("--condition", cond)->check(CLI::IsMember({"qub", "weak", "weakII"}));
  cz->add_option("--kmax", k_max);
  for (auto* c : {cb, cz}) {
    c->add_option("--manifest", manifest, "directory for the manifest and representatives");
    c->add_flag("--resume", resume);
    c->add_option("--shuffle", shuffle, "randomize candidate order with this seed");
  }
  cb->callback([&] { run = [&] { return cmd_classify_binary(seed, cond, offsets, f_max, classify_options(manifest, resume, shuffle)); }; });
  cz->callback([&] { run = [&] { return cmd_classify_z4(m, cond, k_max, classify_options(manifest, resume, shuffle)); }; });

  auto* fixtures = app.add_subcommand("fixtures", "bundled fixture data");
  fixtures->require_subcommand(1);
  fixtures->add_subcommand("verify", "rebuild and check every tabled code")->callback([&] { run = cmd_fixtures; });

  auto* scheme = app.add_subcommand("scheme", "association schemes");
  scheme->require_subcommand(1);
  std::string code;
  auto* sc = scheme->add_subcommand("check", "check the scheme axioms on a code's distance classes");
  sc->add_option("code", code)->required();
  sc->callback([&] { run = [&] { return cmd_scheme(code); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }
  if (threads > 0) omp_set_num_threads(threads);
  if (!data.empty()) setenv("HADAMARD_DATA", data.c_str(), 1);
  try {
    return run();
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad argument: " << e.what() << "\n";
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kBadArgs;
  }
}
