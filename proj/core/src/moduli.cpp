#include "polystab/moduli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

namespace polystab {

ComponentDatum plane(int d1, int d2, std::vector<std::int64_t> cls) {
  ComponentDatum c;
  c.d1 = d1;
  c.d2 = d2;
  c.end = OrbitClass::torus(std::move(cls));
  return c;
}

std::int64_t plane_index(const ComponentDatum& c) {
  return 4 * static_cast<std::int64_t>(c.d1 + c.d2) - 2 * (c.end.k() + c.end.l());
}

PR parent_area(const Regime& reg) { return reg.budget() - PR(2 * reg.d + 1) * (reg.eps - reg.delta1()); }

// The plane's negative end sits on the smoothed boundary, so its area is the
// bidegree pairing minus the integral of the standard primitive over the end:
// the torus coordinates of L times (k, l), plus the Reeb action of the end.
PR curve_area(const ComponentDatum& c, const Regime& reg) {
  if (!c.end.m_zero()) throw Error(ErrorCode::NonzeroM, "area of a plane with m != 0");
  const PR two_d1(2 * reg.d + 1);
  return PR(c.d1) * reg.a + PR(c.d2) * reg.b - PR(c.end.k()) * (PR(1) - reg.eps / PR(2)) -
         PR(c.end.l()) * (reg.x - two_d1 * reg.eps / PR(2)) - torus_orbit_action(c.end, reg);
}

PR special_curve_area(std::int64_t abs_k_sum, const Regime& reg) {
  if (abs_k_sum < 0) throw Error(ErrorCode::DomainError, "sum of |k| must be non-negative");
  return reg.eps / PR(2) * PR(abs_k_sum) - PR(2 * reg.d + 1) * (reg.eps - reg.delta1());
}

PR special_curve_area(const Configuration& cfg, const Regime& reg) {
  PR total = -PR(2 * reg.d + 1) * (reg.eps - reg.delta1());
  for (const auto& p : cfg.planes) total += torus_orbit_action(p.end, reg);
  return total;
}

ClassificationResult classify_component(const ComponentDatum& c, const Regime& reg) {
  ClassificationResult r;
  r.index = plane_index(c);
  auto reject = [&](std::string why) {
    r.admissible = false;
    r.reasons.push_back(std::move(why));
  };
  if (!c.end.m_zero()) {
    reject("m != 0");
    return r;
  }
  const auto k = c.end.k();
  const auto l = c.end.l();
  if (r.index != 0 && r.index != 2) reject("index not in {0,2}");
  PR main = PR(c.d1) * (reg.a - PR(2)) + PR(c.d2) * (reg.b - PR(2)) - PR(l) * (reg.x - PR(1));
  if (main < PR(-1)) reject("main inequality d1(a-2)+d2(b-2)-l(x-1) >= -1 fails");
  if (l == 0 && k < 0 && !(k == -1 && r.index == 2 && c.d1 == 0 && c.d2 == 0))
    reject("l = 0, k < 0 forces k = -1, index 2, bidegree (0,0)");
  if (l == 0 && k > 0 && c.d1 == 0 && c.d2 == 0) reject("l = 0, k > 0 forces nonzero bidegree");
  if (reg.a < PR(2) && reg.x > PR(2) && reg.b < reg.x && l > 0) reject("b < x forces l <= 0");
  return r;
}

namespace {

std::vector<std::int64_t> torus_vec(int n, std::int64_t k, std::int64_t l) {
  std::vector<std::int64_t> v(n, 0);
  v[0] = k;
  v[1] = l;
  return v;
}

void require_slope(const Regime& reg) {
  if (!(reg.x - PR(2 * reg.d + 1) * reg.eps > PR(1)))
    throw Error(ErrorCode::DomainError, "plane areas are not monotone in l: need x - (2d+1)eps > 1");
}

}  // namespace

std::vector<ComponentDatum> admissible_planes(const Regime& reg) {
  require_slope(reg);
  const PR P = parent_area(reg);
  std::vector<ComponentDatum> out;
  for (int d1 = 0; d1 <= reg.d; ++d1)
    for (int d2 = 0; d2 <= 1; ++d2) {
      const std::int64_t s = d1 + d2;
      for (std::int64_t c : {2 * s, 2 * s - 1}) {
        auto area_at = [&](std::int64_t l) { return curve_area(plane(d1, d2, torus_vec(reg.n, c - l, l)), reg); };
        auto take = [&](std::int64_t l) {
          if (c - l == 0 && l == 0) return;
          PR ar = area_at(l);
          if (ar.sign() >= 0 && ar <= P) out.push_back(plane(d1, d2, torus_vec(reg.n, c - l, l)));
        };
        // area is strictly decreasing in l
        for (std::int64_t l = 0;; ++l) {
          if (!(c - l == 0 && l == 0) && area_at(l).sign() < 0) break;
          take(l);
        }
        for (std::int64_t l = -1;; --l) {
          if (area_at(l) > P) break;
          take(l);
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

SearchBounds default_bounds(const Regime& reg) {
  auto planes = admissible_planes(reg);
  SearchBounds b;
  PR min_free_area;  // least area of an index-0 plane of bidegree (0,0)
  bool have_free = false;
  for (const auto& p : planes) {
    b.k_max = std::max<int>(b.k_max, static_cast<int>(std::llabs(p.end.k())));
    b.l_max = std::max<int>(b.l_max, static_cast<int>(std::llabs(p.end.l())));
    if (p.d1 == 0 && p.d2 == 0 && plane_index(p) == 0) {
      PR ar = curve_area(p, reg);
      if (!have_free || ar < min_free_area) min_free_area = ar;
      have_free = true;
    }
  }
  // indices sum to 4d+4, so exactly 2d+2 planes have index 2; at most d+1
  // index-0 planes carry bidegree; the rest share the parent area
  std::int64_t m = 2 * static_cast<std::int64_t>(reg.d) + 2 + reg.d + 1;
  if (have_free) {
    if (min_free_area.sign() <= 0) throw Error(ErrorCode::BoundsTooSmall, "zero-area index-0 plane: M unbounded");
    m += to_int64(floor_generic(parent_area(reg) / min_free_area + PR::eta(1)));
  }
  b.M_max = static_cast<int>(m);
  return b;
}

void check_bounds(const Regime& reg, const SearchBounds& bounds) {
  if (bounds.M_max < 2 * reg.d + 2)
    throw Error(ErrorCode::BoundsTooSmall, "M bound below 2d+2, the least M with a non-negative special curve");
  auto need = default_bounds(reg);
  if (bounds.k_max < need.k_max || bounds.l_max < need.l_max)
    throw Error(ErrorCode::BoundsTooSmall, "area budget admits planes with |k| up to " + std::to_string(need.k_max) +
                                               " and |l| up to " + std::to_string(need.l_max));
  if (bounds.M_max < need.M_max)
    throw Error(ErrorCode::BoundsTooSmall, "area budget admits up to " + std::to_string(need.M_max) + " planes");
}

namespace {

struct Cand {
  ComponentDatum datum;
  int d1, d2;
  std::int64_t k, l, idx;
  PR area;
};

struct State {
  int d1 = 0, d2 = 0, count = 0;
  std::int64_t k = 0, l = 0, idx = 0;
  PR area;
};

// Depth-first over multisets (non-decreasing candidate index) with monotone
// pruning on bidegree, index total, area total and count.
class Dfs {
 public:
  Dfs(const Regime& reg, const SearchBounds& bounds, std::vector<Cand> cands,
      std::function<bool(const std::vector<int>&)> leaf)
      : reg_(reg), bounds_(bounds), cands_(std::move(cands)), leaf_(std::move(leaf)), P_(parent_area(reg)) {}

  void run_from(std::size_t first) {
    State s;
    pick_.clear();
    push(s, first);
  }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::vector<int>>& found() { return found_; }
  std::size_t size() const { return cands_.size(); }

 private:
  void push(State s, std::size_t i) {
    const auto& c = cands_[i];
    s.d1 += c.d1;
    s.d2 += c.d2;
    s.k += c.k;
    s.l += c.l;
    s.idx += c.idx;
    s.area += c.area;
    s.count += 1;
    if (s.d1 > reg_.d || s.d2 > 1 || s.count > bounds_.M_max || s.idx > 4 * static_cast<std::int64_t>(reg_.d) + 4 ||
        s.area > P_)
      return;
    ++nodes_;
    pick_.push_back(static_cast<int>(i));
    if (s.d1 == reg_.d && s.d2 == 1 && s.k == 0 && s.l == 0 && leaf_(pick_)) found_.push_back(pick_);
    for (std::size_t j = i; j < cands_.size(); ++j) push(s, j);
    pick_.pop_back();
  }

  const Regime& reg_;
  SearchBounds bounds_;
  std::vector<Cand> cands_;
  std::function<bool(const std::vector<int>&)> leaf_;
  PR P_;
  std::vector<int> pick_;
  std::vector<std::vector<int>> found_;
  std::uint64_t nodes_ = 0;
};

Cand make_cand(const ComponentDatum& p, const Regime& reg) {
  return Cand{p, p.d1, p.d2, p.end.k(), p.end.l(), plane_index(p), curve_area(p, reg)};
}

Configuration to_config(const std::vector<Cand>& cands, const std::vector<int>& pick) {
  Configuration cfg;
  for (int i : pick) cfg.planes.push_back(cands[i].datum);
  std::sort(cfg.planes.begin(), cfg.planes.end());
  return cfg;
}

std::vector<Configuration> run_parallel(const Regime& reg, const SearchBounds& bounds, const std::vector<Cand>& cands,
                                        const std::function<bool(const std::vector<int>&)>& leaf, int workers,
                                        EnumerationStats* stats) {
  workers = std::max(1, workers);
  std::vector<Configuration> all;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  auto work = [&] {
    Dfs dfs(reg, bounds, cands, leaf);
    for (std::size_t i = next++; i < cands.size(); i = next++) dfs.run_from(i);
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& p : dfs.found()) all.push_back(to_config(cands, p));
    nodes += dfs.nodes();
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (stats) {
    stats->nodes = nodes;
    stats->candidates = cands.size();
  }
  return all;
}

}  // namespace

std::vector<Configuration> enumerate_configurations(const Regime& reg, const SearchBounds& bounds, int workers,
                                                    EnumerationStats* stats) {
  check_regime(reg);
  check_bounds(reg, bounds);
  std::vector<Cand> cands;
  for (const auto& p : admissible_planes(reg))
    if (classify_component(p, reg).admissible) cands.push_back(make_cand(p, reg));
  auto leaf = [&reg, &cands](const std::vector<int>& pick) {
    PR special = -PR(2 * reg.d + 1) * (reg.eps - reg.delta1());
    for (int i : pick) special += torus_orbit_action(cands[i].datum.end, reg);
    return special.sign() >= 0;
  };
  return run_parallel(reg, bounds, cands, leaf, workers, stats);
}

std::vector<Configuration> enumerate_unpruned(const Regime& reg, const SearchBounds& bounds,
                                              EnumerationStats* stats) {
  check_regime(reg);
  std::vector<Cand> cands;
  const PR budget = reg.budget();
  std::vector<std::vector<std::int64_t>> ms;  // m-vectors with sum |m_j| <= 1
  ms.push_back(std::vector<std::int64_t>(reg.n - 2, 0));
  for (int j = 0; j < reg.n - 2; ++j)
    for (int s : {-1, 1}) {
      std::vector<std::int64_t> m(reg.n - 2, 0);
      m[j] = s;
      ms.push_back(m);
    }
  for (int d1 = 0; d1 <= reg.d; ++d1)
    for (int d2 = 0; d2 <= 1; ++d2)
      for (int k = -bounds.k_max; k <= bounds.k_max; ++k)
        for (int l = -bounds.l_max; l <= bounds.l_max; ++l)
          for (const auto& m : ms) {
            std::vector<std::int64_t> v{k, l};
            v.insert(v.end(), m.begin(), m.end());
            if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
            ComponentDatum p = plane(d1, d2, v);
            if (!torus_m_vanishing(p.end, budget, reg)) continue;
            if (!p.end.m_zero()) continue;
            CurveSpec u;
            u.n = 3;
            u.d1 = d1;
            u.d2 = d2;
            u.negative_ends.push_back(OrbitClass::torus({k, l, 0}));
            const auto idx = fredholm_index(u);
            if (idx != HalfInt(0) && idx != HalfInt(2)) continue;
            if (curve_area(p, reg).sign() < 0) continue;
            cands.push_back(Cand{p, d1, d2, k, l, idx.to_int(), curve_area(p, reg)});
          }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.datum < b.datum; });
  auto leaf = [&reg, &cands](const std::vector<int>& pick) {
    Configuration cfg = to_config(cands, pick);
    if (special_curve_area(cfg, reg).sign() < 0) return false;
    return building_index(assemble_building(cfg, reg)) == HalfInt(0);
  };
  return run_parallel(reg, bounds, cands, leaf, 1, stats);
}

Configuration reference_family(const Regime& reg) {
  Configuration cfg;
  cfg.planes.push_back(plane(reg.d, 1, torus_vec(reg.n, 2 * reg.d + 1, 0)));
  for (int j = 0; j < 2 * reg.d + 1; ++j) cfg.planes.push_back(plane(0, 0, torus_vec(reg.n, -1, 0)));
  std::sort(cfg.planes.begin(), cfg.planes.end());
  return cfg;
}

bool is_reference_family(const Configuration& cfg, const Regime& reg) { return cfg == reference_family(reg); }

BuildingSpec assemble_building(const Configuration& cfg, const Regime& reg) {
  BuildingSpec b;
  CurveSpec v0;
  v0.n = reg.n;
  v0.ellipsoid = skinny_ellipsoid(reg);
  v0.negative_ends.push_back(OrbitClass::ellipsoid(1, 2 * reg.d + 1));
  for (const auto& p : cfg.planes) v0.positive_ends.push_back(p.end);
  b.components.push_back(v0);
  for (std::size_t j = 0; j < cfg.planes.size(); ++j) {
    CurveSpec u;
    u.n = reg.n;
    u.d1 = cfg.planes[j].d1;
    u.d2 = cfg.planes[j].d2;
    u.negative_ends.push_back(cfg.planes[j].end);
    b.components.push_back(u);
    b.matchings.push_back({EndRef{0, true, static_cast<int>(j)}, EndRef{static_cast<int>(j) + 1, false, 0}});
  }
  return b;
}

ContradictionReport contradiction_check(const Regime& reg, const std::vector<Configuration>& configs) {
  if (!(reg.a < PR(2) && reg.x > PR(2) && reg.b < reg.x))
    throw Error(ErrorCode::PreconditionFailed, "uniqueness needs a < 2 < x and b < x");
  ContradictionReport r;
  r.configurations = configs.size();
  r.family = reference_family(reg);
  for (const auto& p : r.family.planes) r.family_areas.push_back(curve_area(p, reg));
  r.family_special_area = special_curve_area(r.family, reg);
  r.parent_area = parent_area(reg);
  r.required_area = PR(2 * reg.d + 1) * curve_area(plane(0, 0, torus_vec(reg.n, -1, 0)), reg);
  r.margin = r.parent_area - r.required_area;
  if (configs.empty()) {
    r.basis = "empty";
    r.contradiction = true;
  } else if (configs.size() == 1 && is_reference_family(configs.front(), reg)) {
    r.basis = "unique-family";
    r.contradiction = r.margin.sign() < 0;
  } else {
    throw Error(ErrorCode::PreconditionFailed,
                "enumeration is not the unique family (" + std::to_string(configs.size()) + " configurations)");
  }
  return r;
}

ContradictionReport contradiction_check(const Regime& reg) {
  return contradiction_check(reg, enumerate_configurations(reg, default_bounds(reg)));
}

}  // namespace polystab
