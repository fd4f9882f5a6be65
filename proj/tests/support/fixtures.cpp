#include "fixtures.hpp"

#include <algorithm>

namespace mop::testing {

MarkedPoset pentagon() { return pentagon_family(Rational(0)); }

MarkedPoset pentagon_family(const Rational& t) {
  const Poset P = Poset::build({"m0", "p", "q", "m4", "m1", "m3"},
                               {{"m0", "p"}, {"p", "q"}, {"q", "m4"}, {"m1", "q"}, {"p", "m3"}});
  return make_marked_poset(P, Marking{{"m0", 0}, {"m4", 4}, {"m1", 1 + t}, {"m3", 3}});
}

MarkedPoset redundant_square() {
  const Poset P = Poset::build({"m0", "p", "q", "m3", "m2", "m1"},
                               {{"m0", "p"}, {"p", "q"}, {"q", "m3"}, {"m2", "q"}, {"p", "m1"}});
  return make_marked_poset(P, Marking{{"m0", 0}, {"m1", 1}, {"m2", 2}, {"m3", 3}});
}

MarkedPoset chain05() {
  const Poset P = Poset::build({"m0", "p", "q", "r", "s", "m5"},
                               {{"m0", "p"}, {"p", "q"}, {"q", "r"}, {"r", "s"}, {"s", "m5"}});
  return make_marked_poset(P, Marking{{"m0", 0}, {"m5", 5}});
}

LinearConditions chain05_conditions() {
  return LinearConditions{{ConditionRow{{{"p", 1}, {"r", 1}}, 4}, ConditionRow{{{"q", 1}, {"s", 1}}, 6}}};
}

MarkedPoset two_equal_tops() {
  const Poset P = Poset::build({"p", "a", "b"}, {{"p", "a"}, {"p", "b"}});
  return make_marked_poset(P, Marking{{"a", 1}, {"b", 1}});
}

RationalPoint point(std::initializer_list<Rational> coords) { return RationalPoint{coords}; }

Rational q(long num, long den) { return Rational(Integer(num), Integer(den)); }

std::vector<RationalPoint> sorted(std::vector<RationalPoint> points) {
  std::sort(points.begin(), points.end());
  return points;
}

RationalPoint pq(const MarkedPoset& M, const RationalPoint& x) {
  const Poset& P = M.poset();
  return RationalPoint{{x[P.index_of("p")], x[P.index_of("q")]}};
}

}  // namespace mop::testing
