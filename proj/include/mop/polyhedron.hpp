#pragma once

#include <string>
#include <vector>

#include "mop/rational.hpp"

namespace mop {

/// Exact coordinates, aligned with an element or variable order kept by the
/// caller (a poset's element order, or an HPolyhedron's coordinate list).
struct RationalPoint {
  std::vector<Rational> coords;

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return a.coords < b.coords;
  }
};

/// coeffs . x >= rhs for inequalities, coeffs . x == rhs for equations.
struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;

  Rational evaluate(const std::vector<Rational>& x) const;
  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

struct HPolyhedron {
  std::vector<std::string> coordinates;
  std::vector<LinearRow> inequalities;
  std::vector<LinearRow> equations;

  std::size_t dimension_of_space() const { return coordinates.size(); }
  std::size_t row_count() const { return inequalities.size() + equations.size(); }

  /// Exact check of every row.
  bool contains(const RationalPoint& x) const;
};

}  // namespace mop
