#include "hadamard/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <tuple>

#include "hadamard/bounds.hpp"
#include "hadamard/core.hpp"

namespace hadamard {

using nlohmann::json;

namespace {

// parameters with a bound formula but no pair, found by exhaustive search rather than arithmetic
const std::set<std::tuple<int, int, int>> kNoTypeIIPair = {{28, 4, 8}};

std::string pair_str(std::int64_t x, std::int64_t y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }

std::string triple_str(const json& r) {
  return "(" + std::to_string(r["a"].get<int>()) + "," + std::to_string(r["b"].get<int>()) + "," +
         std::to_string(r["n_a"].get<int>()) + ")";
}

std::string opt_str(const json& v) { return v.is_null() ? "*" : std::to_string(v.get<long>()); }

std::string line(const char* fmt, int n, const std::string& a, const std::string& b, const std::string& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, n, a.c_str(), b.c_str(), c.c_str());
  std::string s = buf;
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s + "\n";
}

}  // namespace

std::optional<TableId> parse_table_id(std::string_view s) {
  if (s == "1") return TableId::QubParams;
  if (s == "2") return TableId::QubBounds;
  if (s == "8") return TableId::WeakParams;
  if (s == "9") return TableId::WeakIIParams;
  if (s == "weakIIUB" || s == "9b") return TableId::WeakIIBounds;
  return std::nullopt;
}

std::string table_title(TableId id) {
  switch (id) {
    case TableId::QubParams: return "Quasi-unbiased Hadamard matrices: feasible (l,a)";
    case TableId::QubBounds: return "Absolute and linear programming bounds, quasi-unbiased";
    case TableId::WeakParams: return "Weakly unbiased Hadamard matrices: feasible (a,b,n(a))";
    case TableId::WeakIIParams: return "Type II weakly unbiased Hadamard matrices: feasible (a,b,n(a))";
    case TableId::WeakIIBounds: return "Absolute and linear programming bounds, Type II weakly unbiased";
  }
  return "";
}

json table_records(TableId id, int n_min, int n_max) {
  json out = json::array();
  for (int n = n_min; n <= n_max; n += 4) {
    switch (id) {
      case TableId::QubParams:
      case TableId::QubBounds: {
        auto params = feasible_qub_params(n);
        std::reverse(params.begin(), params.end());  // increasing l
        for (const QubParams& p : params) {
          if (p.l == 1) continue;
          bool open = p.status == ParamStatus::Open;
          if (id == TableId::QubParams) {
            out.push_back({{"n", n}, {"l", p.l}, {"a", p.a}, {"alpha", p.alpha}, {"ruled_out", !open},
                           {"reason", open ? json(nullptr) : json(to_string(p.reason))}});
          } else if (open) {
            QubBounds b = qub_bounds(n, static_cast<int>(p.alpha));
            out.push_back({{"n", n}, {"l", p.l}, {"a", p.a}, {"absolute", b.table_absolute()},
                           {"absolute_raw", b.absolute}, {"lp", b.lp ? json(*b.lp) : json(nullptr)}});
          }
        }
        break;
      }
      case TableId::WeakParams:
      case TableId::WeakIIParams:
        for (const WeakParams& w : feasible_weak_params(n, id == TableId::WeakParams ? 2 : 0))
          out.push_back({{"n", n}, {"a", w.a}, {"b", w.b}, {"n_a", w.n_a}, {"existence", nullptr}});
        break;
      case TableId::WeakIIBounds:
        for (const WeakParams& w : feasible_weak_params(n, 0)) {
          if (kNoTypeIIPair.count({n, static_cast<int>(w.a), static_cast<int>(w.b)})) continue;
          WeakIIBounds b = weakII_bounds(n, static_cast<int>(w.a / 2), static_cast<int>(w.b / 2));
          out.push_back({{"n", n}, {"a", w.a}, {"b", w.b}, {"n_a", w.n_a}, {"absolute", b.absolute},
                         {"lp", b.lp ? json(*b.lp) : json(nullptr)}});
        }
        break;
    }
  }
  return out;
}

std::string render_table(TableId id, const json& records) {
  std::string s;
  switch (id) {
    case TableId::QubParams:
      s = line("%3d  %-10s %-4s %s", 0, "(l,a)", "", "ruled out by").replace(0, 3, "  n");
      for (const auto& r : records)
        s += line("%3d  %-10s %-4s %s", r["n"], pair_str(r["l"], r["a"]), r["ruled_out"].get<bool>() ? "-" : "",
                  r["reason"].is_null() ? "" : r["reason"].get<std::string>());
      break;
    case TableId::QubBounds:
      s = line("%3d  %-10s %9s  %s", 0, "(l,a)", "absolute", "LP").replace(0, 3, "  n");
      for (const auto& r : records)
        s += line("%3d  %-10s %9s  %s", r["n"], pair_str(r["l"], r["a"]), std::to_string(r["absolute"].get<long>()),
                  opt_str(r["lp"]));
      break;
    case TableId::WeakParams:
    case TableId::WeakIIParams:
      s = line("%3d  %-12s %s%s", 0, "(a,b,n(a))", "existence", "").replace(0, 3, "  n");
      for (const auto& r : records) s += line("%3d  %-12s %s%s", r["n"], triple_str(r), "", "");
      break;
    case TableId::WeakIIBounds:
      s = line("%3d  %-12s %9s  %s", 0, "(a,b,n(a))", "absolute", "LP").replace(0, 3, "  n");
      for (const auto& r : records)
        s += line("%3d  %-12s %9s  %s", r["n"], triple_str(r), std::to_string(r["absolute"].get<long>()),
                  opt_str(r["lp"]));
      break;
  }
  return s;
}

}  // namespace hadamard
