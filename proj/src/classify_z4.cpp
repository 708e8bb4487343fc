#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "hadamard/canonical.hpp"
#include "hadamard/classify.hpp"

namespace hadamard {

namespace fs = std::filesystem;
using nlohmann::json;

std::size_t Z4Level::exact_count() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const Z4Class& c) { return c.exact; }));
}

std::size_t Z4Classification::count(int k) const {
  for (const auto& l : levels)
    if (l.k == k) return l.exact_count();
  return 0;
}

namespace {

std::vector<Word> span_words(const std::vector<Word>& basis) {
  std::vector<Word> out{0};
  for (Word b : basis) {
    std::size_t s = out.size();
    for (std::size_t i = 0; i < s; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

// reduces x modulo C: lo by lifts of the residue basis, then hi by the torsion basis
class CosetKey {
 public:
  explicit CosetKey(const Z4LinearCode& c) {
    res_ = c.residue_basis();
    tor_ = c.torsion_basis();
    for (Word r : res_) {
      auto it = std::find_if(c.words().begin(), c.words().end(), [&](Z4Word w) { return w.lo == r; });
      lifts_.push_back(*it);
    }
  }
  std::uint64_t operator()(Z4Word x) const {
    for (std::size_t i = 0; i < res_.size(); ++i)
      if (x.lo & lowest(res_[i])) x = x - lifts_[i];
    Word h = x.hi;
    for (Word t : tor_)
      if (h & lowest(t)) h ^= t;
    x.hi = static_cast<std::uint32_t>(h);
    return x.key();
  }

 private:
  static Word lowest(Word b) { return b & (~b + 1); }
  std::vector<Word> res_, tor_;
  std::vector<Z4Word> lifts_;
};

struct Profile {
  bool ok = false;
  std::vector<int> values;
};

// balances of C + x merged into the values already present
Profile coset_profile(const Z4LinearCode& c, Z4Word x, PairCondition cond, const std::vector<int>& have) {
  int n = c.length();
  Profile p;
  p.values = have;
  std::size_t cap = cond == PairCondition::Qub ? 1 : 2;
  for (Z4Word w : c.words()) {
    int b = std::abs(z4_balance(w + x, n));
    if (b == n) return p;
    if (b == 0) {
      if (cond != PairCondition::Qub) return p;
      continue;
    }
    if (std::find(p.values.begin(), p.values.end(), b) != p.values.end()) continue;
    if (cond == PairCondition::Weak && b % 2 == 0) return p;
    if (cond == PairCondition::WeakII && b % 2 == 1) return p;
    p.values.push_back(b);
    if (p.values.size() > cap) return p;
  }
  std::sort(p.values.begin(), p.values.end());
  p.ok = true;
  return p;
}

// monomial map read off an automorphism of the gamma digraph
Z4Word apply_monomial(const std::vector<int>& g, int words, int n, Z4Word x) {
  Z4Word y;
  for (int j = 0; j < n; ++j) {
    int img = g[words + 3 * j] - words;
    int jj = img / 3;
    int v = x.at(j);
    if (img % 3 == 2) v = (4 - v) % 4;
    y.set(jj, v);
  }
  return y;
}

struct Uf {
  std::vector<std::size_t> p;
  explicit Uf(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

std::string condition_name(PairCondition c) {
  switch (c) {
    case PairCondition::Qub: return "qub";
    case PairCondition::Weak: return "weak";
    case PairCondition::WeakII: return "weakII";
  }
  return "?";
}

bool exact_for(PairCondition cond, const std::vector<int>& values) {
  return values.size() == (cond == PairCondition::Qub ? 1u : 2u);
}

std::vector<std::string> generator_strings(const Z4LinearCode& c) {
  std::vector<std::string> g;
  for (Z4Word w : c.standard_form()) g.push_back(z4_to_string(w, c.length()));
  return g;
}

void write_json(const fs::path& p, const json& j) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump(1) << "\n";
  }
  fs::rename(tmp, p);
}

}  // namespace

std::vector<Z4Word> half_transversal(const Z4LinearCode& c) {
  int n = c.length();
  std::vector<Word> res = c.residue_basis(), tor = c.torsion_basis();
  std::vector<Word> units;
  for (int j = 0; j < n; ++j) units.push_back(Word{1} << j);
  std::vector<Word> ls = span_words(complement_basis(res, tor, n));
  std::vector<Word> hs = span_words(complement_basis(tor, units, n));
  std::vector<Z4Word> out;
  out.reserve(ls.size() * hs.size());
  for (Word l : ls)
    for (Word h : hs)
      if (l | h) out.push_back(Z4Word{static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(h)});
  return out;
}

Z4Classification classify_z4_extensions(int m, PairCondition condition, int k_max, const ClassifyOptions& opts) {
  Z4LinearCode seed = zrm_fixture(m);
  int n = seed.length();
  Z4Classification out;
  out.m = m;
  std::vector<std::vector<std::vector<int>>> autos;
  std::mt19937_64 rng(opts.shuffle_seed);
  auto say = [&](const std::string& s) {
    if (opts.log) opts.log(s);
  };
  auto finish = [&](Z4Class& c) {
    CanonicalResult r = canonical_labeling(gamma_digraph(c.code));
    c.certificate = std::move(r.form);
    return std::move(r.generators);
  };

  json manifest;
  manifest["kind"] = "z4";
  manifest["m"] = m;
  manifest["condition"] = condition_name(condition);
  manifest["levels"] = json::array();
  fs::path mpath;
  if (!opts.manifest_dir.empty()) {
    fs::create_directories(opts.manifest_dir);
    mpath = fs::path(opts.manifest_dir) / "manifest.json";
  }

  if (opts.resume && !mpath.empty() && fs::exists(mpath)) {
    std::ifstream in(mpath);
    json old = json::parse(in);
    for (const char* k : {"kind", "m", "condition"})
      if (old[k] != manifest[k]) throw std::runtime_error(std::string("manifest does not match this run: ") + k);
    manifest["levels"] = old["levels"];
    for (const auto& lj : old["levels"]) {
      Z4Level lv;
      lv.k = lj["k"];
      lv.candidates = lj["candidates"];
      lv.orbits = lj["orbits"];
      lv.seconds = lj["seconds"];
      for (const auto& cj : lj["classes"]) {
        Z4Class c;
        std::vector<Z4Word> g;
        for (const auto& s : cj["generators"]) g.push_back(z4_from_string(s.get<std::string>()));
        c.code = Z4LinearCode(n, std::move(g));
        c.values = cj["values"].get<std::vector<int>>();
        c.exact = cj["exact"];
        lv.classes.push_back(std::move(c));
      }
      out.levels.push_back(std::move(lv));
    }
    if (!out.levels.empty()) {
      for (auto& c : out.levels.back().classes) autos.push_back(finish(c));
      for (std::size_t i = 0; i + 1 < out.levels.size(); ++i)
        for (auto& c : out.levels[i].classes) finish(c);
      say("resumed at k = " + std::to_string(out.levels.back().k));
    }
  }

  auto record = [&](const Z4Level& lv) {
    if (mpath.empty()) return;
    json lj;
    lj["k"] = lv.k;
    lj["count"] = lv.exact_count();
    lj["classes_total"] = lv.classes.size();
    lj["candidates"] = lv.candidates;
    lj["orbits"] = lv.orbits;
    lj["seconds"] = lv.seconds;
    lj["classes"] = json::array();
    for (std::size_t i = 0; i < lv.classes.size(); ++i) {
      const auto& c = lv.classes[i];
      lj["classes"].push_back({{"generators", generator_strings(c.code)}, {"values", c.values}, {"exact", c.exact}});
      std::ofstream(fs::path(opts.manifest_dir) / ("k" + std::to_string(lv.k) + "_" + std::to_string(i + 1) + ".z4"))
          << format_z4_code(c.code);
    }
    manifest["levels"].push_back(lj);
    write_json(mpath, manifest);
  };

  if (out.levels.empty()) {
    Z4Level lv;
    lv.k = seed.log2_size();
    Z4Class c;
    c.code = seed;
    autos.push_back(finish(c));
    lv.classes.push_back(std::move(c));
    record(lv);
    out.levels.push_back(std::move(lv));
  }

  while (!out.levels.back().classes.empty() && (k_max == 0 || out.levels.back().k < k_max)) {
    auto t0 = std::chrono::steady_clock::now();
    const Z4Level& prev = out.levels.back();
    Z4Level lv;
    lv.k = prev.k + 1;

    struct Cand {
      std::size_t parent;
      Z4Word x;
      std::vector<int> values;
    };
    std::vector<Cand> found;
    for (std::size_t p = 0; p < prev.classes.size(); ++p) {
      const Z4Class& par = prev.classes[p];
      std::vector<Z4Word> xs = half_transversal(par.code);
      std::vector<Profile> prof(xs.size());
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(xs.size()); ++i)
        prof[i] = coset_profile(par.code, xs[i], condition, par.values);
      std::vector<std::size_t> valid;
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (prof[i].ok) valid.push_back(i);
      lv.candidates += valid.size();

      // automorphisms of the parent permute its extensions
      CosetKey key(par.code);
      std::unordered_map<std::uint64_t, std::size_t> where;
      for (std::size_t k = 0; k < valid.size(); ++k) where[key(xs[valid[k]])] = k;
      Uf uf(valid.size());
      int words = static_cast<int>(par.code.size()) - 1;
      for (const auto& g : autos[p])
        for (std::size_t k = 0; k < valid.size(); ++k) {
          auto it = where.find(key(apply_monomial(g, words, n, xs[valid[k]])));
          if (it != where.end()) uf.join(k, it->second);
        }
      for (std::size_t k = 0; k < valid.size(); ++k)
        if (uf.find(k) == k) found.push_back({p, xs[valid[k]], prof[valid[k]].values});
    }
    lv.orbits = found.size();
    if (opts.shuffle_seed) std::shuffle(found.begin(), found.end(), rng);

    std::vector<Z4Class> cands(found.size());
    std::vector<std::vector<std::vector<int>>> cand_autos(found.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(found.size()); ++k) {
      Z4Class& c = cands[k];
      c.code = prev.classes[found[k].parent].code.extend(found[k].x);
      c.values = found[k].values;
      c.exact = exact_for(condition, c.values);
      cand_autos[k] = finish(c);
    }
    std::map<std::string, std::size_t> first;
    for (std::size_t k = 0; k < cands.size(); ++k) first.emplace(cands[k].certificate, k);
    autos.clear();
    for (auto& [cert, k] : first) {
      lv.classes.push_back(std::move(cands[k]));
      autos.push_back(std::move(cand_autos[k]));
    }
    lv.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    say("k = " + std::to_string(lv.k) + ": " + std::to_string(lv.exact_count()) + " codes (" +
        std::to_string(lv.classes.size()) + " kept) from " + std::to_string(lv.orbits) + " orbits of " +
        std::to_string(lv.candidates) + " cosets");
    record(lv);
    out.levels.push_back(std::move(lv));
  }
  return out;
}

}  // namespace hadamard
