#include "properties.hpp"

#include <algorithm>
#include <sstream>

#include "mop/face_partition.hpp"
#include "mop/geometry.hpp"
#include "mop/oracle.hpp"

namespace mop::testing {

namespace {

std::string show(const RationalPoint& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + to_string(x[i]);
  return out + ")";
}

std::string show(const MarkedPoset& M) {
  std::string out = "elements:";
  for (const auto& e : M.poset().elements()) out += " " + e;
  out += " covers:";
  for (const auto& [p, q] : M.poset().covers()) out += " " + M.poset().element(p) + "<" + M.poset().element(q);
  out += " marks:";
  for (std::size_t a : M.marked_indices()) out += " " + M.poset().element(a) + "=" + to_string(M.mark(a));
  return out;
}

RationalPoint concat(const RationalPoint& a, const RationalPoint& b) {
  RationalPoint out = a;
  out.coords.insert(out.coords.end(), b.coords.begin(), b.coords.end());
  return out;
}

RationalPoint plus(const RationalPoint& a, const RationalPoint& b, const Rational& scale = 1) {
  RationalPoint out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale * b[i];
  return out;
}

std::vector<RationalPoint> oracle_vertices(const MarkedPoset& M) {
  return oracle::enumerate_vertices_and_rays(h_representation(M)).vertices;
}

// Order-preserving marking on M's marked set: a |-> sum of random weights of
// the marked elements below or equal to a.
std::vector<std::optional<Rational>> down_set_marking(const MarkedPoset& M, Rng& rng) {
  std::vector<long> weight(M.size());
  for (auto& w : weight) w = static_cast<long>(rng() % 3);
  std::vector<std::optional<Rational>> marks(M.size());
  for (std::size_t a : M.marked_indices()) {
    long total = 0;
    for (std::size_t b : M.marked_indices())
      if (M.poset().less_or_equal(b, a)) total += weight[b];
    marks[a] = Rational(total);
  }
  return marks;
}

}  // namespace

MarkedPoset with_prefix(const MarkedPoset& M, const std::string& prefix) {
  std::vector<ElementId> names;
  for (const auto& e : M.poset().elements()) names.push_back(prefix + e);
  return make_marked_poset(Poset::from_indices(names, M.poset().covers()), M.marks());
}

std::string nonempty_case(Rng& rng) {
  const MarkedPoset M = random_marked_poset(rng, {0, 7, 40}, {50, 4, false});
  const RationalPoint x = generic_point(M);
  if (!membership(M, x)) return "generic point " + show(x) + " outside O(M) for " + show(M);
  if (!oracle::lp_feasible(h_representation(M))) return "oracle finds O(M) empty for " + show(M);
  return {};
}

std::string strict_generic_point_case(Rng& rng) {
  const MarkedPoset M = random_marked_poset(rng, {1, 7, 45}, {50, 4, true});
  if (!is_strict(M)) return "generator produced a non-strict marking " + show(M);
  const RationalPoint x = generic_point(M);
  if (!membership(M, x)) return "generic point outside O(M) for " + show(M);
  for (std::size_t p = 0; p < M.size(); ++p)
    for (std::size_t q = 0; q < M.size(); ++q)
      if (M.poset().less(p, q) && !(x[p] < x[q]))
        return "x_" + M.poset().element(p) + " = x_" + M.poset().element(q) + " at " + show(x) + " for " + show(M);
  return {};
}

std::string minkowski_containment_case(Rng& rng) {
  const MarkedPoset M1 = pointed_part(random_marked_poset(rng, {1, 6, 45}, {50, 3, false}));
  const MarkedPoset M2 = make_marked_poset(M1.poset(), down_set_marking(M1, rng));
  std::vector<std::optional<Rational>> sum(M1.size());
  for (std::size_t a : M1.marked_indices()) sum[a] = M1.mark(a) + M2.mark(a);
  const MarkedPoset M12 = make_marked_poset(M1.poset(), sum);
  for (const auto& v : oracle_vertices(M1))
    for (const auto& w : oracle_vertices(M2))
      if (!membership(M12, plus(v, w)))
        return show(v) + " + " + show(w) + " outside O(P, l1 + l2) for " + show(M1);
  return {};
}

std::string product_case(Rng& rng) {
  const MarkedPoset A = random_marked_poset(rng, {0, 4, 45}, {60, 3, false});
  const MarkedPoset B = with_prefix(random_marked_poset(rng, {0, 4, 45}, {60, 3, false}), "b");
  const MarkedPoset U = disjoint_union(A, B);
  if (dimension(U) != dimension(A) + dimension(B)) return "dimension is not additive for " + show(U);
  if (is_pointed(U) != (is_pointed(A) && is_pointed(B))) return "pointedness is not a conjunction for " + show(U);
  if (recession_cone(U) != disjoint_union(recession_cone(A), recession_cone(B)))
    return "recession cone does not commute with the union for " + show(U);
  if (!is_pointed(U)) {
    const RationalPoint x = concat(random_point(A, rng), random_point(B, rng));
    return membership(U, x) ? std::string() : "product point " + show(x) + " outside " + show(U);
  }
  std::vector<RationalPoint> expected;
  for (const auto& a : vertices(A))
    for (const auto& b : vertices(B)) expected.push_back(concat(a, b));
  std::sort(expected.begin(), expected.end());
  if (vertices(U) != expected) return "vertices are not the product for " + show(U);
  if (oracle_vertices(U) != expected) return "oracle vertices are not the product for " + show(U);
  return {};
}

std::string recession_cone_case(Rng& rng) {
  const MarkedPoset M = random_marked_poset(rng, {1, 6, 40}, {40, 3, false});
  const MarkedPoset R = recession_cone(M);
  if (R.marked_indices() != M.marked_indices()) return "marked set changed for " + show(M);
  for (std::size_t a : R.marked_indices())
    if (R.mark(a) != 0) return "nonzero mark in recession cone of " + show(M);
  const RationalPoint x = random_point(M, rng);
  const RationalPoint y = random_point(R, rng);
  for (const Rational t : {Rational(1), Rational(7, 2)})
    if (!membership(M, plus(x, y, t))) return show(x) + " + t*" + show(y) + " outside " + show(M);
  // Same rows up to right-hand side, so the oracle's rays and lineality agree.
  const auto vm = oracle::enumerate_vertices_and_rays(h_representation(M));
  const auto vr = oracle::enumerate_vertices_and_rays(h_representation(R));
  if (vm.rays != vr.rays || vm.lineality != vr.lineality) return "oracle cones differ for " + show(M);
  if (vr.section_points != std::vector<RationalPoint>{RationalPoint{std::vector<Rational>(M.size())}})
    return "recession cone is not anchored at the origin for " + show(M);
  return {};
}

std::string pull_back_injective_case(Rng& rng) {
  const MarkedPoset M = random_marked_poset(rng, {1, 6, 45}, {45, 3, false});
  const Partition pi = partition_from_point(M, random_point(M, rng));
  const Quotient Q = quotient(M, pi);
  if (!Q.map.is_surjective()) return "quotient map is not surjective for " + show(M);
  const auto V = oracle::enumerate_vertices_and_rays(h_representation(Q.poset));
  std::vector<RationalPoint> sources = V.section_points;
  for (const auto& s : V.section_points)
    for (const auto& r : V.rays) sources.push_back(plus(s, r));
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  const HPolyhedron face = face_polyhedron(M, pi);
  std::vector<RationalPoint> images;
  for (const auto& v : sources) {
    const RationalPoint y = pull_back_point(Q.map, v);
    if (!face.contains(y)) return "pull-back " + show(y) + " outside the face for " + show(M);
    images.push_back(y);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    return "pull-back identifies two points for " + show(M);
  return {};
}

const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites{
      {"non-emptiness", nonempty_case},
      {"strict generic point", strict_generic_point_case},
      {"Minkowski containment", minkowski_containment_case},
      {"product law", product_case},
      {"recession-cone law", recession_cone_case},
      {"pull-back injectivity", pull_back_injective_case},
  };
  return suites;
}

std::string run_suite(const PropertySuite& suite, Rng& rng, int cases) {
  for (int i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = suite.run(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      std::ostringstream out;
      out << suite.name << " case " << i << ": " << failure;
      return out.str();
    }
  }
  return {};
}

}  // namespace mop::testing
