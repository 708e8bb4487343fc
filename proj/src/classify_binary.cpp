#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>
#include <omp.h>

#include "hadamard/canonical.hpp"
#include "hadamard/classify.hpp"

namespace hadamard {

namespace fs = std::filesystem;
using nlohmann::json;

std::size_t BinaryClassification::count(int f) const {
  for (const auto& l : levels)
    if (l.f == f) return l.classes.size();
  return 0;
}

namespace {

// distinct c + c' over the seed; for a linear seed this is the seed itself
std::vector<Word> difference_set(const BinaryCode& c1) {
  std::vector<Word> d;
  for (Word a : c1.words())
    for (Word b : c1.words()) d.push_back(a ^ b);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

std::uint64_t offsets_mask(const std::vector<Word>& diff, int n, Word w) {
  int half = n / 2;
  std::uint64_t mask = 0;
  for (Word d : diff) mask |= std::uint64_t{1} << std::abs(std::popcount(w ^ d) - half);
  return mask;
}

// bits that rule a pair out at once, and how many nonzero offsets may appear
struct Limits {
  std::uint64_t forbidden = 0;
  int max_nonzero = 0;
};

Limits limits_for(int n, PairCondition cond, const std::vector<int>& want) {
  int half = n / 2;
  Limits l;
  l.forbidden = std::uint64_t{1} << half;
  l.max_nonzero = cond == PairCondition::Qub ? 1 : 2;
  if (cond != PairCondition::Qub) {
    l.forbidden |= 1;
    int par = cond == PairCondition::Weak ? 1 : 0;
    for (int k = 1; k < half; ++k)
      if (k % 2 != par) l.forbidden |= std::uint64_t{1} << k;
  }
  if (!want.empty()) {
    std::uint64_t ok = 1;
    for (int k : want) ok |= std::uint64_t{1} << k;
    l.forbidden |= ~ok;
  }
  return l;
}

// 0 when the pair already fails the limits
std::uint64_t bounded_mask(const std::vector<Word>& diff, int n, Word w, const Limits& l) {
  int half = n / 2;
  std::uint64_t mask = 0;
  for (Word d : diff) {
    std::uint64_t bit = std::uint64_t{1} << std::abs(std::popcount(w ^ d) - half);
    if (mask & bit) continue;
    if (bit & l.forbidden) return 0;
    mask |= bit;
    if (std::popcount(mask & ~std::uint64_t{1}) > l.max_nonzero) return 0;
  }
  return mask;
}

std::string condition_name(PairCondition c) {
  switch (c) {
    case PairCondition::Qub: return "qub";
    case PairCondition::Weak: return "weak";
    case PairCondition::WeakII: return "weakII";
  }
  return "?";
}

// offsets allowed by one cross pair, or empty when it breaks the condition
std::vector<int> pair_offsets(std::uint64_t mask, int n, PairCondition cond, const std::vector<int>& want) {
  int half = n / 2;
  if ((mask >> half) & 1) return {};
  std::vector<int> nz;
  for (int k = 1; k < half; ++k)
    if ((mask >> k) & 1) nz.push_back(k);
  switch (cond) {
    case PairCondition::Qub:
      if (nz.size() != 1) return {};
      break;
    case PairCondition::Weak:
    case PairCondition::WeakII: {
      if ((mask & 1) || nz.size() != 2) return {};
      int par = cond == PairCondition::Weak ? 1 : 0;
      if (nz[0] % 2 != par || nz[1] % 2 != par) return {};
      break;
    }
  }
  if (!want.empty() && want != nz) return {};
  return nz;
}

class Reducer {
 public:
  Reducer() = default;
  explicit Reducer(std::vector<Word> basis) : basis_(std::move(basis)) {
    for (Word b : basis_) pivots_.push_back(b & (~b + 1));
  }
  Word operator()(Word v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (v & pivots_[i]) v ^= basis_[i];
    return v;
  }

 private:
  std::vector<Word> basis_, pivots_;
};

struct Engine {
  const BinaryCode& c1;
  BinaryClassSpec spec;
  const ClassifyOptions& opts;
  int n;
  bool linear;
  std::vector<Word> diff;
  Reducer reduce;
  std::vector<Word> comp;  // coset transversal generators when linear
  int pool_bits;

  Engine(const BinaryCode& c, const BinaryClassSpec& s, const ClassifyOptions& o) : c1(c), spec(s), opts(o) {
    n = c1.length();
    if (n % 2) throw std::invalid_argument("seed length must be even");
    DistanceDistribution dd = distance_distribution(c1);
    if (!is_self_complementary(c1) || dd.support() != std::vector<int>{n / 2, n})
      throw std::invalid_argument("seed must be a self-complementary code with distances n/2 and n");
    linear = span(n, c1.words()).size() == c1.size();
    diff = difference_set(c1);
    if (linear) {
      std::vector<Word> ech = echelon_basis(c1.words(), n);
      reduce = Reducer(ech);
      std::vector<Word> units;
      for (int j = 0; j < n; ++j) units.push_back(Word{1} << j);
      comp = complement_basis(ech, units, n);
      pool_bits = static_cast<int>(comp.size());
    } else {
      // complementary seed: u and its complement give the same translate
      pool_bits = n - 1;
    }
    if (pool_bits > 40) throw std::invalid_argument("candidate space too large");
  }

  // candidate at position i: transversal element for the Gray code of i
  Word raw(std::uint64_t i) const {
    if (!linear) return static_cast<Word>(i) << 1;
    i ^= i >> 1;
    Word u = 0;
    for (int b = 0; i; ++b, i >>= 1)
      if (i & 1) u ^= comp[b];
    return u;
  }
  // candidate at position i given the one at i - 1
  Word step(Word u, std::uint64_t i) const {
    if (!linear) return static_cast<Word>(i) << 1;
    return u ^ comp[std::countr_zero(i)];
  }

  Word canon(Word u) const {
    if (linear) return reduce(u);
    return (u & 1) ? (u ^ low_mask(n)) : u;
  }

  void say(const std::string& s) const {
    if (opts.log) opts.log(s);
  }
};

constexpr std::uint64_t kChunk = 1 << 14;

struct Found {
  std::size_t parent;
  std::uint64_t idx;
  Word u;
  std::vector<int> offsets;
};

// translate map (sigma, x) read off an automorphism of the translation graph
struct CoordMap {
  std::vector<int> perm;
  Word flips = 0;
  Word permute(Word w, int n) const {
    Word r = 0;
    for (int j = 0; j < n; ++j)
      if ((w >> j) & 1) r |= Word{1} << perm[j];
    return r;
  }
  Word apply(Word w, int n) const { return permute(w, n) ^ flips; }
};

CoordMap coord_map(const std::vector<int>& g, int n) {
  CoordMap m;
  m.perm.resize(n);
  for (int j = 0; j < n; ++j) {
    int img = g[2 * j];
    m.perm[j] = img / 2;
    if (img % 2) m.flips |= Word{1} << (img / 2);
  }
  return m;
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

json manifest_header(const Engine& e) {
  json j;
  j["kind"] = "binary";
  j["n"] = e.n;
  std::vector<std::string> seed;
  for (Word w : e.c1.words()) seed.push_back(word_to_string(w, e.n));
  std::sort(seed.begin(), seed.end());
  j["seed"] = seed;
  j["condition"] = condition_name(e.spec.condition);
  j["offsets"] = e.spec.offsets;
  j["levels"] = json::array();
  return j;
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

std::uint64_t translate_offsets(const BinaryCode& c1, bool linear, Word u, Word v) {
  std::vector<Word> d = linear ? c1.words() : difference_set(c1);
  return offsets_mask(d, c1.length(), u ^ v);
}

BinaryClassification classify_binary_extensions(const BinaryCode& c1, const BinaryClassSpec& spec,
                                                const ClassifyOptions& opts) {
  Engine e(c1, spec, opts);
  int n = e.n;
  BinaryClassification out;
  std::vector<std::vector<std::vector<int>>> autos;  // generators per class of the last level
  std::mt19937_64 rng(opts.shuffle_seed);

  auto finish = [&](BinaryClass& c) {
    c.code = union_of_translates(c1, c.translates);
    CanonicalResult r = canonical_labeling(translation_graph(c.code));
    c.certificate = std::move(r.form);
    return std::move(r.generators);
  };

  json manifest = manifest_header(e);
  fs::path mpath;
  if (!opts.manifest_dir.empty()) {
    fs::create_directories(opts.manifest_dir);
    mpath = fs::path(opts.manifest_dir) / "manifest.json";
  }

  if (opts.resume && !mpath.empty() && fs::exists(mpath)) {
    std::ifstream in(mpath);
    json old = json::parse(in);
    for (const char* k : {"kind", "n", "seed", "condition", "offsets"})
      if (old[k] != manifest[k]) throw std::runtime_error(std::string("manifest does not match this run: ") + k);
    manifest["levels"] = old["levels"];
    for (const auto& lj : old["levels"]) {
      BinaryLevel lv;
      lv.f = lj["f"];
      lv.candidates = lj["candidates"];
      lv.forms = lj["forms"];
      lv.seconds = lj["seconds"];
      for (const auto& cj : lj["classes"]) {
        BinaryClass c;
        for (const auto& t : cj["translates"]) c.translates.push_back(word_from_string(t.get<std::string>()));
        c.offsets = cj["offsets"].get<std::vector<int>>();
        lv.classes.push_back(std::move(c));
      }
      out.levels.push_back(std::move(lv));
    }
    autos.clear();
    if (!out.levels.empty()) {
      for (auto& c : out.levels.back().classes) autos.push_back(finish(c));
      for (std::size_t i = 0; i + 1 < out.levels.size(); ++i)
        for (auto& c : out.levels[i].classes) finish(c);
      e.say("resumed at f = " + std::to_string(out.levels.back().f));
    }
  }

  auto record = [&](const BinaryLevel& lv) {
    if (mpath.empty()) return;
    json lj;
    lj["f"] = lv.f;
    lj["count"] = lv.classes.size();
    lj["candidates"] = lv.candidates;
    lj["forms"] = lv.forms;
    lj["seconds"] = lv.seconds;
    lj["classes"] = json::array();
    for (std::size_t i = 0; i < lv.classes.size(); ++i) {
      const auto& c = lv.classes[i];
      std::vector<std::string> ts;
      for (Word t : c.translates) ts.push_back(word_to_string(t, n));
      lj["classes"].push_back({{"translates", ts}, {"offsets", c.offsets}});
      std::ofstream(fs::path(opts.manifest_dir) / ("f" + std::to_string(lv.f) + "_" + std::to_string(i + 1) + ".code"))
          << format_code(c.code);
    }
    manifest["levels"].push_back(lj);
    write_json(mpath, manifest);
  };

  if (out.levels.empty()) {
    BinaryLevel lv;
    lv.f = 1;
    BinaryClass c;
    c.translates = {0};
    c.offsets = spec.offsets;
    autos.push_back(finish(c));
    lv.classes.push_back(std::move(c));
    lv.forms = 1;
    record(lv);
    out.levels.push_back(std::move(lv));
  }

  while (!out.levels.back().classes.empty() && (spec.f_max == 0 || out.levels.back().f < spec.f_max)) {
    auto t0 = std::chrono::steady_clock::now();
    const BinaryLevel& prev = out.levels.back();
    BinaryLevel lv;
    lv.f = prev.f + 1;

    std::vector<Found> found;
    std::uint64_t pool_size = std::uint64_t{1} << e.pool_bits;
    for (std::size_t p = 0; p < prev.classes.size(); ++p) {
      const BinaryClass& par = prev.classes[p];
      std::vector<std::vector<Found>> local;
#pragma omp parallel
      {
#pragma omp single
        local.resize(omp_get_num_threads());
        std::vector<Found>& mine = local[omp_get_thread_num()];
        const std::int64_t chunks = static_cast<std::int64_t>((pool_size + kChunk - 1) / kChunk);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t ch = 0; ch < chunks; ++ch) {
          std::uint64_t base = static_cast<std::uint64_t>(ch) * kChunk;
          std::uint64_t stop = std::min(pool_size, base + kChunk);
          Word u = e.raw(base);
          for (std::uint64_t i = base; i < stop; ++i) {
            if (i > base) u = e.step(u, i);
            if (i == 0) continue;
            std::vector<int> want = par.offsets;
            bool ok = true;
            for (Word t : par.translates) {
              std::uint64_t mask = bounded_mask(e.diff, n, u ^ t, limits_for(n, spec.condition, want));
              std::vector<int> got = mask ? pair_offsets(mask, n, spec.condition, want) : std::vector<int>{};
              if (got.empty()) {
                ok = false;
                break;
              }
              want = std::move(got);
            }
            if (ok) mine.push_back({p, i, e.canon(u), std::move(want)});
          }
        }
      }
      std::vector<Found> level_found;
      for (auto& v : local) level_found.insert(level_found.end(), v.begin(), v.end());
      std::sort(level_found.begin(), level_found.end(), [](const Found& a, const Found& b) { return a.idx < b.idx; });
      lv.candidates += level_found.size();

      // extensions in one orbit of the parent's automorphisms (those fixing the
      // seed translates) give equivalent codes
      std::vector<std::size_t> keep(level_found.size());
      std::iota(keep.begin(), keep.end(), 0);
      if (e.linear && !level_found.empty()) {
        std::unordered_map<Word, std::size_t> where;
        for (std::size_t k = 0; k < level_found.size(); ++k) where[e.canon(level_found[k].u)] = k;
        Uf uf(level_found.size());
        for (const auto& g : autos[p]) {
          CoordMap cm = coord_map(g, n);
          // sigma must carry the seed onto itself
          bool fixes = true;
          for (Word w : c1.words())
            if (!c1.contains(cm.permute(w, n))) {
              fixes = false;
              break;
            }
          if (!fixes) continue;
          for (std::size_t k = 0; k < level_found.size(); ++k) {
            auto it = where.find(e.canon(cm.apply(level_found[k].u, n)));
            if (it != where.end()) uf.join(k, it->second);
          }
        }
        keep.clear();
        for (std::size_t k = 0; k < level_found.size(); ++k)
          if (uf.find(k) == k) keep.push_back(k);
      }
      for (std::size_t k : keep) found.push_back(std::move(level_found[k]));
    }
    if (opts.shuffle_seed) std::shuffle(found.begin(), found.end(), rng);

    // identical word sets first
    std::vector<BinaryClass> cands;
    {
      std::map<std::vector<Word>, bool> seen;
      for (const Found& f : found) {
        BinaryClass c;
        c.translates = prev.classes[f.parent].translates;
        c.translates.push_back(f.u);
        c.offsets = f.offsets;
        std::vector<Word> key;
        if (e.linear) {
          for (Word t : c.translates) key.push_back(e.canon(t));
        } else {
          key = union_of_translates(c1, c.translates).words();
        }
        std::sort(key.begin(), key.end());
        if (seen.emplace(std::move(key), true).second) cands.push_back(std::move(c));
      }
    }

    std::vector<std::vector<std::vector<int>>> cand_autos(cands.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(cands.size()); ++k) cand_autos[k] = finish(cands[k]);
    lv.forms = cands.size();

    std::map<std::string, std::size_t> first;
    for (std::size_t k = 0; k < cands.size(); ++k) first.emplace(cands[k].certificate, k);
    autos.clear();
    for (auto& [cert, k] : first) {
      lv.classes.push_back(std::move(cands[k]));
      autos.push_back(std::move(cand_autos[k]));
    }
    lv.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    e.say("f = " + std::to_string(lv.f) + ": " + std::to_string(lv.classes.size()) + " classes from " +
          std::to_string(lv.candidates) + " translates, " + std::to_string(lv.forms) + " forms");
    record(lv);
    out.levels.push_back(std::move(lv));
  }
  return out;
}

}  // namespace hadamard
