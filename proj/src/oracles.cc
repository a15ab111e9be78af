// Copyright 2026 The GLDP Reformulation Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gldp/oracles.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gldp::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = 1e-9;

}  // namespace

std::vector<double> EarliestStarts(const SchedulingInstance& inst,
                                   const std::vector<int>& sequence) {
  std::vector<double> start(inst.jobs.size(), 0.0);
  double free_at = -kInf;
  for (int job : sequence) {
    const Job& j = inst.jobs.at(job);
    start[job] = std::max(free_at, j.r);
    free_at = start[job] + j.p;
  }
  return start;
}

SchedOracleResult SchedOracle(const SchedulingInstance& inst) {
  const int n = static_cast<int>(inst.jobs.size());
  if (n > kMaxSchedJobs) {
    throw std::invalid_argument("scheduling oracle limited to " +
                                std::to_string(kMaxSchedJobs) + " jobs, got " +
                                std::to_string(n));
  }
  SchedOracleResult best;
  best.optimum = kInf;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    const std::vector<double> start = EarliestStarts(inst, order);
    double makespan = 0.0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Job& j = inst.jobs[i];
      ok = start[i] + j.p <= j.d + kEps;
      makespan = std::max(makespan, start[i] + j.p);
    }
    if (ok && makespan < best.optimum) {
      best.feasible = true;
      best.optimum = makespan;
      best.witness = {order, start};
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!best.feasible) best.optimum = kInf;
  return best;
}

namespace {

// Smallest solution of v_i >= base_i, v_j >= v_i + w for each arc (i, j, w),
// or nullopt-like empty vector on a positive cycle.
std::vector<double> LongestPaths(
    const std::vector<double>& base,
    const std::vector<std::array<double, 3>>& arcs) {
  std::vector<double> v = base;
  const int n = static_cast<int>(base.size());
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const auto& arc : arcs) {
      const int i = static_cast<int>(arc[0]);
      const int j = static_cast<int>(arc[1]);
      if (v[i] + arc[2] > v[j] + kEps) {
        v[j] = v[i] + arc[2];
        changed = true;
      }
    }
    if (!changed) return v;
  }
  return {};
}

}  // namespace

StripOracleResult StripOracle(const StripInstance& inst) {
  const int n = static_cast<int>(inst.rects.size());
  if (n > kMaxStripRects) {
    throw std::invalid_argument("strip oracle limited to " +
                                std::to_string(kMaxStripRects) +
                                " rectangles, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const int p = static_cast<int>(pairs.size());
  std::vector<double> x_base(n, 0.0), y_base(n);
  for (int i = 0; i < n; ++i) y_base[i] = inst.rects[i].H;

  StripOracleResult best;
  best.optimum = kInf;
  std::vector<Relation> rel(p, Relation::kLeftOf);
  std::int64_t total = 1;
  for (int k = 0; k < p; ++k) total *= 4;
  std::vector<std::array<double, 3>> x_arcs, y_arcs;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    x_arcs.clear();
    y_arcs.clear();
    for (int k = 0; k < p; ++k) {
      rel[k] = static_cast<Relation>(c % 4);
      c /= 4;
      const auto [i, j] = pairs[k];
      switch (rel[k]) {
        case Relation::kLeftOf:
          x_arcs.push_back({double(i), double(j), inst.rects[i].L});
          break;
        case Relation::kRightOf:
          x_arcs.push_back({double(j), double(i), inst.rects[j].L});
          break;
        case Relation::kAbove:
          y_arcs.push_back({double(j), double(i), inst.rects[i].H});
          break;
        case Relation::kBelow:
          y_arcs.push_back({double(i), double(j), inst.rects[j].H});
          break;
      }
    }
    const std::vector<double> y = LongestPaths(y_base, y_arcs);
    if (y.empty()) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = y[i] <= inst.W + kEps;
    if (!ok) continue;
    const std::vector<double> x = LongestPaths(x_base, x_arcs);
    if (x.empty()) continue;
    double length = 0.0;
    for (int i = 0; i < n && ok; ++i) {
      ok = x[i] + inst.rects[i].L <= inst.UB + kEps;
      length = std::max(length, x[i] + inst.rects[i].L);
    }
    if (ok && length < best.optimum) {
      best.feasible = true;
      best.optimum = length;
      best.witness = {x, y, rel};
    }
  }
  return best;
}

bool SatisfiesGdp(const GdpModel& model, const std::vector<double>& point,
                  double tol) {
  for (int v = 0; v < model.num_vars(); ++v) {
    const ContinuousVar& var = model.vars()[v];
    if (point.at(v) < var.lower - tol || point.at(v) > var.upper + tol) {
      return false;
    }
  }
  for (const LinRow& row : model.globals()) {
    if (!IsSatisfied(row, point, tol)) return false;
  }
  for (const Disjunction& disjunction : model.disjunctions()) {
    const bool any = std::any_of(
        disjunction.disjuncts.begin(), disjunction.disjuncts.end(),
        [&](const Disjunct& d) {
          return std::all_of(d.rows.begin(), d.rows.end(), [&](const LinRow& r) {
            return IsSatisfied(r, point, tol);
          });
        });
    if (!any) return false;
  }
  return true;
}

std::vector<double> SchedulePoint(const SchedulingInstance& inst,
                                  const Schedule& schedule) {
  std::vector<double> point = schedule.start;
  double makespan = 0.0;
  for (size_t i = 0; i < inst.jobs.size(); ++i) {
    makespan = std::max(makespan, schedule.start[i] + inst.jobs[i].p);
  }
  point.push_back(makespan);
  return point;
}

std::vector<double> PackingPoint(const StripInstance& inst,
                                 const Packing& packing) {
  std::vector<double> point = packing.x;
  point.insert(point.end(), packing.y.begin(), packing.y.end());
  double length = 0.0;
  for (size_t i = 0; i < inst.rects.size(); ++i) {
    length = std::max(length, packing.x[i] + inst.rects[i].L);
  }
  point.push_back(length);
  return point;
}

std::vector<double> Grid::Point(int index) const {
  if (dim == 1) return {Coord(0, index)};
  return {Coord(0, index / samples()), Coord(1, index % samples())};
}

namespace {

struct Pt {
  double x, y;
};

double Cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Half-plane a0*u + a1*v <= b.
struct HalfPlane {
  double a0, a1, b;
};

std::vector<HalfPlane> Restrict(const Disjunct& disjunct, const VarId u,
                                const VarId v) {
  std::vector<HalfPlane> planes;
  for (const LinRow& row : disjunct.rows) {
    double a0 = 0.0, a1 = 0.0;
    for (const LinTerm& t : row.terms) {
      if (t.var == u) a0 += t.coef;
      if (t.var == v) a1 += t.coef;
    }
    if (row.sense != Sense::kGe) planes.push_back({a0, a1, row.rhs});
    if (row.sense != Sense::kLe) planes.push_back({-a0, -a1, -row.rhs});
  }
  return planes;
}

std::vector<Pt> PolygonVertices(const std::vector<HalfPlane>& planes) {
  std::vector<Pt> vertices;
  for (size_t i = 0; i < planes.size(); ++i) {
    for (size_t j = i + 1; j < planes.size(); ++j) {
      const HalfPlane& p = planes[i];
      const HalfPlane& q = planes[j];
      const double det = p.a0 * q.a1 - p.a1 * q.a0;
      if (std::abs(det) < 1e-12) continue;
      const Pt pt{(p.b * q.a1 - p.a1 * q.b) / det,
                  (p.a0 * q.b - p.b * q.a0) / det};
      const bool inside = std::all_of(
          planes.begin(), planes.end(), [&](const HalfPlane& h) {
            const double scale = 1.0 + std::abs(h.b);
            return h.a0 * pt.x + h.a1 * pt.y <= h.b + 1e-9 * scale;
          });
      if (inside) vertices.push_back(pt);
    }
  }
  return vertices;
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
std::vector<Pt> ConvexHull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  if (pts.size() < 3) return pts;
  std::vector<Pt> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], pts[i]) <= 1e-12) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && Cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 1e-12) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

double SegmentDistance(const Pt& p, const Pt& a, const Pt& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

bool InHull(const std::vector<Pt>& hull, const Pt& p, double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::hypot(p.x - hull[0].x, p.y - hull[0].y) <= tol;
  if (hull.size() == 2) return SegmentDistance(p, hull[0], hull[1]) <= tol;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % hull.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (Cross(a, b, p) < -tol * len) return false;
  }
  return true;
}

}  // namespace

HullMask HullOracle(const Disjunction& disjunction,
                    const std::vector<ContinuousVar>& boxes, int cells) {
  std::vector<VarId> vars;
  for (const Disjunct& d : disjunction.disjuncts) {
    for (const LinRow& row : d.rows) {
      for (const LinTerm& t : row.terms) vars.push_back(t.var);
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty() || vars.size() > 2) {
    throw std::invalid_argument("hull oracle needs 1 or 2 variables, got " +
                                std::to_string(vars.size()));
  }
  HullMask mask;
  mask.vars = vars;
  mask.grid.dim = static_cast<int>(vars.size());
  mask.grid.cells = cells;
  for (int a = 0; a < mask.grid.dim; ++a) {
    mask.grid.lo[a] = boxes.at(vars[a].value).lower;
    mask.grid.hi[a] = boxes.at(vars[a].value).upper;
  }
  const double width = std::max(mask.grid.hi[0] - mask.grid.lo[0],
                                mask.grid.hi[1] - mask.grid.lo[1]);
  const double tol = 1e-9 * (1.0 + width);
  mask.in.assign(mask.grid.size(), 0);

  if (mask.grid.dim == 1) {
    double lo = kInf, hi = -kInf;
    for (const Disjunct& d : disjunction.disjuncts) {
      double l = mask.grid.lo[0], u = mask.grid.hi[0];
      // a * x <= b
      auto apply = [&](double a, double b) {
        if (a > 0) u = std::min(u, b / a);
        if (a < 0) l = std::max(l, b / a);
      };
      for (const LinRow& row : d.rows) {
        const double a = row.terms.front().coef;
        if (row.sense != Sense::kGe) apply(a, row.rhs);
        if (row.sense != Sense::kLe) apply(-a, -row.rhs);
      }
      if (l <= u + tol) {
        lo = std::min(lo, l);
        hi = std::max(hi, u);
      }
    }
    for (int k = 0; k < mask.grid.size(); ++k) {
      const double x = mask.grid.Coord(0, k);
      mask.in[k] = x >= lo - tol && x <= hi + tol;
    }
    return mask;
  }

  std::vector<Pt> all;
  for (const Disjunct& d : disjunction.disjuncts) {
    std::vector<HalfPlane> planes = Restrict(d, vars[0], vars[1]);
    planes.push_back({-1, 0, -mask.grid.lo[0]});
    planes.push_back({1, 0, mask.grid.hi[0]});
    planes.push_back({0, -1, -mask.grid.lo[1]});
    planes.push_back({0, 1, mask.grid.hi[1]});
    const std::vector<Pt> v = PolygonVertices(planes);
    all.insert(all.end(), v.begin(), v.end());
  }
  const std::vector<Pt> hull = ConvexHull(all);
  for (int k = 0; k < mask.grid.size(); ++k) {
    const std::vector<double> p = mask.grid.Point(k);
    mask.in[k] = InHull(hull, {p[0], p[1]}, tol);
  }
  return mask;
}

int MaskMismatchesOutsideBand(const HullMask& reference,
                              const std::vector<std::uint8_t>& other,
                              int band_cells) {
  const Grid& g = reference.grid;
  const int s = g.samples();
  auto at = [&](int i, int j) {
    return reference.in[g.dim == 1 ? i : i * s + j];
  };
  int mismatches = 0;
  for (int k = 0; k < g.size(); ++k) {
    if (reference.in[k] == other.at(k)) continue;
    const int i = g.dim == 1 ? k : k / s;
    const int j = g.dim == 1 ? 0 : k % s;
    bool near_boundary = false;
    for (int di = -band_cells; di <= band_cells && !near_boundary; ++di) {
      for (int dj = g.dim == 1 ? 0 : -band_cells;
           dj <= (g.dim == 1 ? 0 : band_cells) && !near_boundary; ++dj) {
        const int ii = i + di, jj = j + dj;
        if (ii < 0 || jj < 0 || ii >= s || jj >= (g.dim == 1 ? 1 : s)) continue;
        near_boundary = at(ii, jj) != reference.in[k];
      }
    }
    if (!near_boundary) ++mismatches;
  }
  return mismatches;
}

}  // namespace gldp::oracle
