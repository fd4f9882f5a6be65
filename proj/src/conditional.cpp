#include "mop/conditional.hpp"

#include <stdexcept>

#include "mop/errors.hpp"
#include "mop/face_partition.hpp"
#include "mop/geometry.hpp"

namespace mop {

void validate_conditions(const MarkedPoset& M, const LinearConditions& S) {
  for (const auto& row : S.rows)
    for (const auto& [id, c] : row.coeffs) M.poset().index_of(id);
}

HPolyhedron conditional_system(const MarkedPoset& M, const LinearConditions& S) {
  HPolyhedron H = h_representation(M);
  for (const auto& row : S.rows) {
    LinearRow eq{std::vector<Rational>(M.size(), Rational(0)), row.rhs};
    for (const auto& [id, c] : row.coeffs) eq.coeffs[M.poset().index_of(id)] += c;
    H.equations.push_back(std::move(eq));
  }
  return H;
}

bool conditional_membership(const MarkedPoset& M, const LinearConditions& S,
                            const RationalPoint& x) {
  if (!membership(M, x)) return false;
  for (const auto& row : S.rows) {
    Rational value(0);
    for (const auto& [id, c] : row.coeffs) value += c * x[M.poset().index_of(id)];
    if (value != row.rhs) return false;
  }
  return true;
}

std::size_t TilingMap::kernel_dimension() const { return columns.size() - bareiss_rank(matrix); }

TilingMap tiling_map(const MarkedPoset& M, const LinearConditions& S, const Partition& pi) {
  if (pi.element_count() != M.size()) throw std::invalid_argument("partition size does not match poset");
  TilingMap T;
  std::vector<std::size_t> column_of(pi.block_count(), 0);
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    if (!pi.is_free(b)) continue;
    column_of[b] = T.columns.size();
    T.columns.push_back(block_name(M.poset(), pi.block(b)));
    T.blocks.push_back(pi.block(b));
  }
  for (const auto& row : S.rows) {
    std::vector<Rational> entries(T.columns.size(), Rational(0));
    for (const auto& [id, c] : row.coeffs) {
      const std::size_t b = pi.block_of(M.poset().index_of(id));
      if (pi.is_free(b)) entries[column_of[b]] += c;
    }
    T.matrix.push_back(std::move(entries));
  }
  return T;
}

std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.front().size();
  std::vector<std::vector<Integer>> a;
  for (const auto& row : rows) {
    Integer scale = 1;
    for (const auto& v : row) scale = boost::multiprecision::lcm(scale, Integer(denominator(v)));
    std::vector<Integer> ints;
    for (const auto& v : row) ints.push_back(Integer(numerator(v)) * (scale / Integer(denominator(v))));
    a.push_back(std::move(ints));
  }
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    // Each update is exactly divisible by the previous pivot.
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / previous;
      a[i][col] = 0;
    }
    previous = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t minimal_face_dimension(const MarkedPoset& M, const LinearConditions& S,
                                   const RationalPoint& x) {
  if (!conditional_membership(M, S, x))
    throw NotInPolyhedronError("point violates the order, the marking or a condition");
  return tiling_map(M, S, partition_from_point(M, x)).kernel_dimension();
}

LinearConditions conditions_quotient(const MarkedPoset& M, const LinearConditions& S,
                                     const Partition& pi) {
  const Quotient q = quotient(M, pi);
  const Poset& target = q.poset.poset();
  LinearConditions result;
  for (const auto& row : S.rows) {
    ConditionRow collapsed{{}, row.rhs};
    for (const auto& [id, c] : row.coeffs) {
      const std::size_t p = M.poset().index_of(id);
      collapsed.coeffs[target.element(q.map.assignment[p])] += c;
    }
    for (auto it = collapsed.coeffs.begin(); it != collapsed.coeffs.end();)
      it = it->second == 0 ? collapsed.coeffs.erase(it) : std::next(it);
    result.rows.push_back(std::move(collapsed));
  }
  return result;
}

RationalPoint Embedding::project(const RationalPoint& x) const {
  RationalPoint y;
  for (std::size_t p : projection) y.coords.push_back(x[p]);
  return y;
}

Embedding embed_polyhedron(const std::vector<LinearRow>& inequalities,
                           const std::vector<LinearRow>& equations, std::size_t n) {
  for (const auto* rows : {&inequalities, &equations})
    for (const auto& row : *rows)
      if (row.coeffs.size() != n) throw std::invalid_argument("row length differs from n");

  const std::size_t t = inequalities.size();
  std::vector<ElementId> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  for (std::size_t l = 1; l <= t; ++l) names.push_back("q" + std::to_string(l));
  names.push_back("r");
  std::vector<std::pair<ElementId, ElementId>> relations;
  for (std::size_t l = 1; l <= t; ++l) relations.emplace_back("q" + std::to_string(l), "r");

  Embedding E;
  E.poset = make_marked_poset(Poset::build(names, relations), Marking{{"r", Rational(0)}});
  for (std::size_t i = 0; i < n; ++i) E.projection.push_back(i);

  const auto variable_row = [&](const LinearRow& row, const Rational& sign) {
    ConditionRow c{{}, sign * row.rhs};
    for (std::size_t i = 0; i < n; ++i)
      if (row.coeffs[i] != 0) c.coeffs[names[i]] = sign * row.coeffs[i];
    return c;
  };
  for (const auto& row : equations) E.conditions.rows.push_back(variable_row(row, Rational(1)));
  // a.x >= c  <=>  -a.x - x_q == -c with x_q <= x_r == 0.
  for (std::size_t l = 0; l < t; ++l) {
    ConditionRow c = variable_row(inequalities[l], Rational(-1));
    c.coeffs[names[n + l]] = -1;
    E.conditions.rows.push_back(std::move(c));
  }
  return E;
}

}  // namespace mop
