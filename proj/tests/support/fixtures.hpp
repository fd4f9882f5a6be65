#pragma once

#include <string>
#include <vector>

#include "mop/conditional.hpp"
#include "mop/marked_poset.hpp"
#include "mop/polyhedron.hpp"

namespace mop::testing {

// Free p < q; marks m0=0 below p, m1=1 below q, m3=3 above p, m4=4 above q.
MarkedPoset pentagon();

// Same shape with m1 = 1 + t.
MarkedPoset pentagon_family(const Rational& t);

// Strict, no marked covers, single marked neighbours, yet p<q is redundant via m2 <= q, p <= m1.
MarkedPoset redundant_square();

// Chain m0 < p < q < r < s < m5 marked 0 and 5.
MarkedPoset chain05();
LinearConditions chain05_conditions();  // p + r = 4, q + s = 6

// p < a, p < b with a and b both marked 1.
MarkedPoset two_equal_tops();

RationalPoint point(std::initializer_list<Rational> coords);
Rational q(long num, long den = 1);

std::vector<RationalPoint> sorted(std::vector<RationalPoint> points);

// (x_p, x_q) for the two free coordinates of the pentagon shapes.
RationalPoint pq(const MarkedPoset& M, const RationalPoint& x);

}  // namespace mop::testing
