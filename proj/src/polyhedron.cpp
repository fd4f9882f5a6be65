#include "mop/polyhedron.hpp"

namespace mop {

Rational LinearRow::evaluate(const std::vector<Rational>& x) const {
  Rational sum(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) sum += coeffs[i] * x[i];
  return sum;
}

bool HPolyhedron::contains(const RationalPoint& x) const {
  if (x.size() != coordinates.size()) return false;
  for (const auto& row : inequalities)
    if (row.evaluate(x.coords) < row.rhs) return false;
  for (const auto& row : equations)
    if (row.evaluate(x.coords) != row.rhs) return false;
  return true;
}

}  // namespace mop
