#include "mop/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mop/errors.hpp"

namespace mop::oracle {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// ---------------------------------------------------------------------------
// Dense simplex on  max c.y  s.t.  A y = d, y >= 0.

class Tableau {
 public:
  Tableau(Matrix rows, std::vector<Rational> rhs, std::size_t columns)
      : m_(rows.size()), n_(columns), a_(std::move(rows)), basis_(m_, columns) {
    for (std::size_t i = 0; i < m_; ++i) a_[i].push_back(std::move(rhs[i]));
    obj_.assign(n_ + 1, Rational(0));
  }

  std::size_t rows() const { return m_; }
  std::size_t columns() const { return n_; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Rational& rhs(std::size_t i) const { return a_[i][n_]; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  void set_basic(std::size_t i, std::size_t j) { basis_[i] = j; }
  const Rational& value() const { return obj_[n_]; }

  // Reduced-cost row for maximizing cost . y under the current basis.
  void set_objective(const std::vector<Rational>& cost) {
    for (std::size_t j = 0; j <= n_; ++j) {
      Rational acc = j < n_ ? Rational(-cost[j]) : Rational(0);
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& cb = cost[basis_[i]];
        if (cb != 0 && a_[i][j] != 0) acc += cb * a_[i][j];
      }
      obj_[j] = std::move(acc);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational piv = a_[r][c];
    for (std::size_t j = 0; j <= n_; ++j)
      if (a_[r][j] != 0) a_[r][j] /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      for (std::size_t j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) obj_[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  // Bland's rule; returns false when unbounded.
  bool optimize(const std::vector<bool>& may_enter) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (may_enter[j] && obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == n_) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!(a_[i][enter] > 0)) continue;
        Rational ratio = a_[i][n_] / a_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> y(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = a_[i][n_];
    return y;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  Matrix a_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> obj_;
};

// max c.y over { R y >= r } where the first `free_count` variables are free
// and the remaining ones are non-negative.
struct InequalityLp {
  std::size_t free_count = 0;
  std::size_t nonneg_count = 0;
  Matrix rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> y;
  Rational value;
};

LpSolution solve(const InequalityLp& lp) {
  const std::size_t nf = lp.free_count, nn = lp.nonneg_count, m = lp.rows.size();
  // Standard-form columns: y+ (nf), y- (nf), nonneg (nn), slack (m), artificials.
  const std::size_t slack0 = 2 * nf + nn;
  const std::size_t structural = slack0 + m;

  Matrix A(m, std::vector<Rational>(structural, Rational(0)));
  std::vector<Rational> d(m);
  std::vector<bool> needs_artificial(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    // R y - slack = r. With r <= 0 the row is negated so the slack can start
    // in the basis; rows with r > 0 keep their sign and get an artificial.
    const bool positive = lp.rhs[i] > 0;
    const int sign = positive ? 1 : -1;
    for (std::size_t j = 0; j < nf; ++j) {
      A[i][j] = sign * lp.rows[i][j];
      A[i][nf + j] = -sign * lp.rows[i][j];
    }
    for (std::size_t j = 0; j < nn; ++j) A[i][2 * nf + j] = sign * lp.rows[i][nf + j];
    A[i][slack0 + i] = -sign;
    d[i] = sign * lp.rhs[i];
    needs_artificial[i] = positive;
  }
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (needs_artificial[i]) ++artificials;
  const std::size_t total = structural + artificials;
  for (auto& row : A) row.resize(total, Rational(0));
  std::vector<std::size_t> start(m);
  {
    std::size_t next = structural;
    for (std::size_t i = 0; i < m; ++i) {
      if (needs_artificial[i]) {
        A[i][next] = 1;
        start[i] = next++;
      } else {
        start[i] = slack0 + i;
      }
    }
  }

  Tableau T(std::move(A), std::move(d), total);
  for (std::size_t i = 0; i < m; ++i) T.set_basic(i, start[i]);

  std::vector<bool> may_enter(total, true);
  if (artificials > 0) {
    std::vector<Rational> phase1(total, Rational(0));
    for (std::size_t j = structural; j < total; ++j) phase1[j] = -1;
    T.set_objective(phase1);
    T.optimize(may_enter);
    if (T.value() < 0) return {};
    for (std::size_t i = 0; i < m; ++i) {
      if (T.basic(i) < structural) continue;
      for (std::size_t j = 0; j < structural; ++j)
        if (T.at(i, j) != 0) {
          T.pivot(i, j);
          break;
        }
    }
    for (std::size_t j = structural; j < total; ++j) may_enter[j] = false;
  }

  std::vector<Rational> cost(total, Rational(0));
  for (std::size_t j = 0; j < nf; ++j) {
    cost[j] = lp.objective[j];
    cost[nf + j] = -lp.objective[j];
  }
  for (std::size_t j = 0; j < nn; ++j) cost[2 * nf + j] = lp.objective[nf + j];
  T.set_objective(cost);
  const bool bounded = T.optimize(may_enter);

  LpSolution out;
  const auto y = T.solution();
  out.y.resize(nf + nn);
  for (std::size_t j = 0; j < nf; ++j) out.y[j] = y[j] - y[nf + j];
  for (std::size_t j = 0; j < nn; ++j) out.y[nf + j] = y[2 * nf + j];
  out.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  out.value = T.value();
  return out;
}

// ---------------------------------------------------------------------------
// Affine reduction: solutions of E x = f are x0 + N z.

struct AffineChart {
  bool consistent = true;
  std::vector<Rational> origin;  // x0
  Matrix basis;                  // columns of N stored as vectors (k x n)
};

AffineChart solve_equations(std::size_t n, const std::vector<LinearRow>& equations) {
  Matrix M;
  for (const auto& e : equations) {
    auto row = e.coeffs;
    row.push_back(e.rhs);
    M.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    const Rational piv = M[r][c];
    for (auto& v : M[r]) v /= piv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Rational f = M[i][c];
      for (std::size_t j = 0; j <= n; ++j) M[i][j] -= f * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  AffineChart chart;
  for (std::size_t i = r; i < M.size(); ++i)
    if (M[i][n] != 0) {
      chart.consistent = false;
      return chart;
    }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  chart.origin.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) chart.origin[pivot_col[i]] = M[i][n];
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -M[i][f];
    chart.basis.push_back(std::move(v));
  }
  return chart;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Inequalities G z >= h in chart coordinates.
struct ReducedSystem {
  std::size_t k = 0;
  Matrix G;
  std::vector<Rational> h;
};

ReducedSystem reduce(const AffineChart& chart, const std::vector<LinearRow>& rows) {
  ReducedSystem sys;
  sys.k = chart.basis.size();
  for (const auto& row : rows) {
    std::vector<Rational> g(sys.k);
    for (std::size_t j = 0; j < sys.k; ++j) g[j] = dot(row.coeffs, chart.basis[j]);
    sys.G.push_back(std::move(g));
    sys.h.push_back(row.rhs - dot(row.coeffs, chart.origin));
  }
  return sys;
}

std::vector<Rational> lift(const AffineChart& chart, const std::vector<Rational>& z) {
  std::vector<Rational> x = chart.origin;
  for (std::size_t j = 0; j < z.size(); ++j)
    if (z[j] != 0)
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += z[j] * chart.basis[j][i];
  return x;
}

struct InteriorResult {
  bool feasible = false;
  std::vector<bool> implicit;  // per row of the reduced system
  std::vector<Rational> z;     // relative interior point
};

// Finds the implicit equalities of G z >= h together with a point strictly
// inside every other row: repeatedly maximize the capped slacks of the rows
// not yet known to be strict, and average the points found.
InteriorResult relative_interior_reduced(const ReducedSystem& sys) {
  const std::size_t m = sys.G.size(), k = sys.k;
  InteriorResult res;
  std::vector<bool> unknown(m, true);
  std::vector<std::vector<Rational>> points;
  for (;;) {
    std::vector<std::size_t> U;
    for (std::size_t i = 0; i < m; ++i)
      if (unknown[i]) U.push_back(i);
    InequalityLp lp;
    lp.free_count = k;
    lp.nonneg_count = U.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> row(k + U.size(), Rational(0));
      for (std::size_t j = 0; j < k; ++j) row[j] = sys.G[i][j];
      auto pos = std::find(U.begin(), U.end(), i);
      if (pos != U.end()) row[k + (pos - U.begin())] = -1;
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(sys.h[i]);
    }
    for (std::size_t u = 0; u < U.size(); ++u) {
      std::vector<Rational> row(k + U.size(), Rational(0));
      row[k + u] = -1;
      lp.rows.push_back(std::move(row));
      lp.rhs.push_back(Rational(-1));
    }
    lp.objective.assign(k + U.size(), Rational(0));
    for (std::size_t u = 0; u < U.size(); ++u) lp.objective[k + u] = 1;
    const LpSolution sol = solve(lp);
    if (sol.status == LpStatus::Infeasible) return res;
    std::vector<Rational> z(sol.y.begin(), sol.y.begin() + static_cast<std::ptrdiff_t>(k));
    bool progress = false;
    for (std::size_t i : U)
      if (dot(sys.G[i], z) > sys.h[i]) {
        unknown[i] = false;
        progress = true;
      }
    points.push_back(std::move(z));
    if (!progress || U.empty()) break;
  }
  res.feasible = true;
  res.implicit = unknown;
  res.z.assign(k, Rational(0));
  for (const auto& p : points)
    for (std::size_t j = 0; j < k; ++j) res.z[j] += p[j];
  for (auto& v : res.z) v /= static_cast<long>(points.size());
  return res;
}

// The face of H on which the inequality rows in `tight` hold with equality.
std::optional<ActiveSetFace> analyze(const HPolyhedron& H, const std::vector<std::size_t>& tight) {
  const std::size_t n = H.dimension_of_space();
  std::vector<bool> in_tight(H.inequalities.size(), false);
  for (std::size_t i : tight) in_tight[i] = true;
  std::vector<LinearRow> equations = H.equations;
  std::vector<LinearRow> rest;
  std::vector<std::size_t> rest_index;
  for (std::size_t i = 0; i < H.inequalities.size(); ++i) {
    if (in_tight[i]) {
      equations.push_back(H.inequalities[i]);
    } else {
      rest.push_back(H.inequalities[i]);
      rest_index.push_back(i);
    }
  }
  const AffineChart chart = solve_equations(n, equations);
  if (!chart.consistent) return std::nullopt;
  const ReducedSystem sys = reduce(chart, rest);
  const InteriorResult interior = relative_interior_reduced(sys);
  if (!interior.feasible) return std::nullopt;

  ActiveSetFace face;
  face.active = tight;
  Matrix implicit_rows;
  for (std::size_t r = 0; r < rest.size(); ++r)
    if (interior.implicit[r]) {
      face.active.push_back(rest_index[r]);
      implicit_rows.push_back(sys.G[r]);
    }
  std::sort(face.active.begin(), face.active.end());
  face.affine_dim = static_cast<int>(sys.k) - static_cast<int>(rank(std::move(implicit_rows)));
  face.witness.coords = lift(chart, interior.z);
  return face;
}

void check_size(const HPolyhedron& H, std::size_t max_rows) {
  if (H.row_count() > max_rows)
    throw SizeLimitError("oracle enumeration limited to " + std::to_string(max_rows) +
                         " rows, system has " + std::to_string(H.row_count()));
}

Matrix nullspace(const Matrix& rows, std::size_t n) {
  std::vector<LinearRow> eqs;
  for (const auto& r : rows) eqs.push_back({r, Rational(0)});
  return solve_equations(n, eqs).basis;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Rational>> M) {
  if (M.empty()) return 0;
  const std::size_t n = M.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    for (std::size_t i = r + 1; i < M.size(); ++i) {
      if (M[i][c] == 0) continue;
      const Rational f = M[i][c] / M[r][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return r;
}

RationalPoint primitive_direction(const RationalPoint& v) {
  Integer lcm_den = 1;
  for (const auto& x : v.coords)
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v.coords) {
    Integer i = boost::multiprecision::numerator(x) * (lcm_den / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, i);
    ints.push_back(std::move(i));
  }
  RationalPoint out;
  for (auto& i : ints) out.coords.emplace_back(g == 0 ? i : Integer(i / g));
  return out;
}

LpResult maximize(const HPolyhedron& H, const std::vector<Rational>& objective) {
  const AffineChart chart = solve_equations(H.dimension_of_space(), H.equations);
  LpResult result;
  if (!chart.consistent) return result;
  const ReducedSystem sys = reduce(chart, H.inequalities);
  InequalityLp lp;
  lp.free_count = sys.k;
  lp.rows = sys.G;
  lp.rhs = sys.h;
  for (std::size_t j = 0; j < sys.k; ++j) lp.objective.push_back(dot(objective, chart.basis[j]));
  const LpSolution sol = solve(lp);
  result.status = sol.status;
  if (sol.status == LpStatus::Infeasible) return result;
  result.point.coords = lift(chart, sol.y);
  result.value = dot(objective, result.point.coords);
  return result;
}

std::optional<RationalPoint> lp_feasible(const HPolyhedron& H,
                                         const std::vector<std::size_t>& strict_rows) {
  const AffineChart chart = solve_equations(H.dimension_of_space(), H.equations);
  if (!chart.consistent) return std::nullopt;
  const ReducedSystem sys = reduce(chart, H.inequalities);
  std::vector<bool> strict(sys.G.size(), false);
  for (std::size_t i : strict_rows) strict.at(i) = true;

  // max t  s.t.  G z - t [row strict] >= h,  t <= 1,  t >= 0.
  const bool any_strict = !strict_rows.empty();
  InequalityLp lp;
  lp.free_count = sys.k;
  lp.nonneg_count = any_strict ? 1 : 0;
  for (std::size_t i = 0; i < sys.G.size(); ++i) {
    auto row = sys.G[i];
    if (any_strict) row.push_back(strict[i] ? Rational(-1) : Rational(0));
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(sys.h[i]);
  }
  lp.objective.assign(sys.k + lp.nonneg_count, Rational(0));
  if (any_strict) {
    std::vector<Rational> cap(sys.k + 1, Rational(0));
    cap[sys.k] = -1;
    lp.rows.push_back(std::move(cap));
    lp.rhs.push_back(Rational(-1));
    lp.objective[sys.k] = 1;
  }
  const LpSolution sol = solve(lp);
  if (sol.status == LpStatus::Infeasible) return std::nullopt;
  if (any_strict && !(sol.value > 0)) return std::nullopt;
  std::vector<Rational> z(sol.y.begin(), sol.y.begin() + static_cast<std::ptrdiff_t>(sys.k));
  return RationalPoint{lift(chart, z)};
}

std::optional<ActiveSetFace> relative_interior(const HPolyhedron& H) { return analyze(H, {}); }

int affine_dimension(const HPolyhedron& H) {
  const auto face = analyze(H, {});
  return face ? face->affine_dim : -1;
}

std::vector<ActiveSetFace> enumerate_faces(const HPolyhedron& H, std::size_t max_rows) {
  check_size(H, max_rows);
  std::vector<ActiveSetFace> faces;
  auto top = analyze(H, {});
  if (!top) return faces;

  std::set<std::vector<std::size_t>> tried;
  std::map<std::vector<std::size_t>, ActiveSetFace> found;
  std::vector<std::vector<std::size_t>> stack{top->active};
  found.emplace(top->active, std::move(*top));
  while (!stack.empty()) {
    const auto active = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < H.inequalities.size(); ++i) {
      if (std::binary_search(active.begin(), active.end(), i)) continue;
      auto candidate = active;
      candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), i), i);
      if (!tried.insert(candidate).second) continue;
      auto face = analyze(H, candidate);
      if (!face || found.count(face->active)) continue;
      stack.push_back(face->active);
      found.emplace(face->active, std::move(*face));
    }
  }
  for (auto& [key, face] : found) faces.push_back(std::move(face));
  return faces;
}

std::vector<ActiveSetFace> facets(const HPolyhedron& H) {
  std::vector<ActiveSetFace> result;
  const auto top = analyze(H, {});
  if (!top) return result;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < H.inequalities.size(); ++i) {
    if (std::binary_search(top->active.begin(), top->active.end(), i)) continue;
    auto candidate = top->active;
    candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), i), i);
    auto face = analyze(H, candidate);
    if (face && face->affine_dim == top->affine_dim - 1 && seen.insert(face->active).second)
      result.push_back(std::move(*face));
  }
  return result;
}

VRepresentation enumerate_vertices_and_rays(const HPolyhedron& H, std::size_t max_rows) {
  const std::size_t n = H.dimension_of_space();
  Matrix all_rows;
  for (const auto& r : H.inequalities) all_rows.push_back(r.coeffs);
  for (const auto& r : H.equations) all_rows.push_back(r.coeffs);
  const Matrix lineality = nullspace(all_rows, n);

  VRepresentation rep;
  rep.pointed = lineality.empty();
  for (const auto& l : lineality) rep.lineality.push_back(primitive_direction(RationalPoint{l}));

  HPolyhedron section = H;
  for (const auto& l : lineality) section.equations.push_back({l, Rational(0)});
  check_size(section, max_rows + lineality.size());

  for (const auto& face : enumerate_faces(section, max_rows + lineality.size()))
    if (face.affine_dim == 0) rep.section_points.push_back(face.witness);
  std::sort(rep.section_points.begin(), rep.section_points.end());

  HPolyhedron cone = section;
  for (auto& r : cone.inequalities) r.rhs = 0;
  for (auto& r : cone.equations) r.rhs = 0;
  for (const auto& face : enumerate_faces(cone, max_rows + lineality.size()))
    if (face.affine_dim == 1) rep.rays.push_back(primitive_direction(face.witness));
  std::sort(rep.rays.begin(), rep.rays.end());

  if (rep.pointed) rep.vertices = rep.section_points;
  return rep;
}

int minimal_face_dimension(const HPolyhedron& H, const RationalPoint& x) {
  if (!H.contains(x)) throw NotInPolyhedronError("point is not in the polyhedron");
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < H.inequalities.size(); ++i)
    if (H.inequalities[i].evaluate(x.coords) == H.inequalities[i].rhs) tight.push_back(i);
  return analyze(H, tight)->affine_dim;
}

bool in_convex_hull(const std::vector<RationalPoint>& points, const RationalPoint& x) {
  if (points.empty()) return false;
  const std::size_t k = points.size(), n = x.size();
  HPolyhedron H;
  for (std::size_t j = 0; j < k; ++j) H.coordinates.push_back("mu" + std::to_string(j));
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(k, Rational(0));
    row[j] = 1;
    H.inequalities.push_back({std::move(row), Rational(0)});
  }
  H.equations.push_back({std::vector<Rational>(k, Rational(1)), Rational(1)});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = points[j][i];
    H.equations.push_back({std::move(row), x[i]});
  }
  return lp_feasible(H).has_value();
}

std::vector<RationalPoint> extreme_points(const std::vector<RationalPoint>& points) {
  std::vector<RationalPoint> unique = points;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<RationalPoint> result;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<RationalPoint> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i) others.push_back(unique[j]);
    if (!in_convex_hull(others, unique[i])) result.push_back(unique[i]);
  }
  return result;
}

}  // namespace mop::oracle
