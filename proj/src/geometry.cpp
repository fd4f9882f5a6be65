#include "mop/geometry.hpp"

#include <algorithm>
#include <set>

#include "mop/errors.hpp"
#include "mop/oracle.hpp"

namespace mop {

RationalPoint point_from_values(const MarkedPoset& M, const Marking& values) {
  const Poset& P = M.poset();
  std::vector<std::optional<Rational>> coords(P.size());
  for (const auto& [id, value] : values) coords[P.index_of(id)] = value;
  RationalPoint x;
  for (std::size_t p = 0; p < P.size(); ++p) {
    if (!coords[p]) {
      if (!M.is_marked(p)) throw Error("no value given for element '" + P.element(p) + "'");
      coords[p] = M.mark(p);
    }
    x.coords.push_back(*coords[p]);
  }
  return x;
}

HPolyhedron h_representation(const MarkedPoset& M) {
  const Poset& P = M.poset();
  const std::size_t n = P.size();
  HPolyhedron H;
  H.coordinates = P.elements();
  for (const auto& [p, q] : P.covers()) {
    LinearRow row{std::vector<Rational>(n, Rational(0)), Rational(0)};
    row.coeffs[q] = 1;
    row.coeffs[p] = -1;
    H.inequalities.push_back(std::move(row));
  }
  for (std::size_t a : M.marked_indices()) {
    LinearRow row{std::vector<Rational>(n, Rational(0)), M.mark(a)};
    row.coeffs[a] = 1;
    H.equations.push_back(std::move(row));
  }
  return H;
}

bool membership(const MarkedPoset& M, const RationalPoint& x) {
  if (x.size() != M.size()) return false;
  for (const auto& [p, q] : M.poset().covers())
    if (x[p] > x[q]) return false;
  for (std::size_t a : M.marked_indices())
    if (x[a] != M.mark(a)) return false;
  return true;
}

RationalPoint generic_point(const MarkedPoset& M) {
  const Poset& P = M.poset();
  const std::size_t n = P.size();
  std::vector<std::optional<Rational>> value(M.marks());
  for (std::size_t p : P.topological_order()) {
    if (value[p]) continue;
    std::optional<Rational> lo, hi;
    for (std::size_t r = 0; r < n; ++r) {
      if (!value[r]) continue;
      if (P.less(r, p) && (!lo || *value[r] > *lo)) lo = *value[r];
      if (P.less(p, r) && (!hi || *value[r] < *hi)) hi = *value[r];
    }
    if (lo && hi)
      value[p] = (*lo + *hi) / 2;
    else if (lo)
      value[p] = *lo + 1;
    else if (hi)
      value[p] = *hi - 1;
    else
      value[p] = Rational(0);
  }
  RationalPoint x;
  for (auto& v : value) x.coords.push_back(std::move(*v));
  return x;
}

HPolyhedron face_polyhedron(const MarkedPoset& M, const Partition& pi) {
  HPolyhedron H = h_representation(M);
  const std::size_t n = M.size();
  for (const auto& block : pi.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) {
      LinearRow row{std::vector<Rational>(n, Rational(0)), Rational(0)};
      row.coeffs[block.front()] = 1;
      row.coeffs[block[i]] = -1;
      H.equations.push_back(std::move(row));
    }
  return H;
}

std::size_t face_dimension(const MarkedPoset& M, const Partition& pi) {
  if (!is_face_partition(M, pi)) throw NotAFacePartitionError("partition is not a face partition");
  return pi.free_block_count();
}

std::size_t dimension(const MarkedPoset& M) { return strictify(M).poset.unmarked_count(); }

MarkedPoset recession_cone(const MarkedPoset& M) {
  std::vector<std::optional<Rational>> zeros(M.size());
  for (std::size_t a : M.marked_indices()) zeros[a] = Rational(0);
  return make_marked_poset(M.poset(), std::move(zeros));
}

MarkedPoset disjoint_union(const MarkedPoset& first, const MarkedPoset& second) {
  auto marks = first.marks();
  marks.insert(marks.end(), second.marks().begin(), second.marks().end());
  return make_marked_poset(disjoint_union(first.poset(), second.poset()), std::move(marks));
}

bool is_pointed(const MarkedPoset& M) {
  for (const auto& component : M.poset().component_indices())
    if (std::none_of(component.begin(), component.end(),
                     [&](std::size_t p) { return M.is_marked(p); }))
      return false;
  return true;
}

MarkedPoset pointed_part(const MarkedPoset& M) {
  std::vector<std::size_t> keep;
  for (const auto& component : M.poset().component_indices())
    if (std::any_of(component.begin(), component.end(),
                    [&](std::size_t p) { return M.is_marked(p); }))
      keep.insert(keep.end(), component.begin(), component.end());
  std::sort(keep.begin(), keep.end());
  std::vector<std::optional<Rational>> marks;
  for (std::size_t p : keep) marks.push_back(M.marks()[p]);
  return make_marked_poset(M.poset().induced(keep), std::move(marks));
}

RationalPoint construct_vertex(const MarkedPoset& M) {
  if (!is_pointed(M)) throw NotPointedError("some component of the poset carries no mark");
  const Poset& P = M.poset();
  std::vector<std::optional<Rational>> value(M.marks());
  for (;;) {
    bool progressed = false;
    for (std::size_t p = 0; p < P.size() && !progressed; ++p) {
      if (value[p]) continue;
      std::optional<Rational> below, above;
      for (std::size_t q : P.lower_covers(p))
        if (value[q] && (!below || *value[q] > *below)) below = *value[q];
      for (std::size_t q : P.upper_covers(p))
        if (value[q] && (!above || *value[q] < *above)) above = *value[q];
      if (below)
        value[p] = *below;
      else if (above)
        value[p] = *above;
      else
        continue;
      progressed = true;
    }
    if (!progressed) break;
  }
  RationalPoint v;
  for (auto& x : value) v.coords.push_back(std::move(*x));
  return v;
}

std::vector<RationalPoint> vertices(const MarkedPoset& M, std::size_t max_elements) {
  if (!is_pointed(M)) throw NotPointedError("polyhedron contains a line; no vertices");
  const FaceLattice lattice = enumerate_face_partitions(M, max_elements);
  std::vector<RationalPoint> result;
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    if (lattice.dims[i] != 0) continue;
    const Partition& pi = lattice.nodes[i];
    RationalPoint v;
    v.coords.resize(M.size());
    for (const auto& block : pi.blocks()) {
      const auto marked = std::find_if(block.begin(), block.end(),
                                       [&](std::size_t p) { return M.is_marked(p); });
      for (std::size_t p : block) v[p] = M.mark(*marked);
    }
    result.push_back(std::move(v));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<MinkowskiSummand> minkowski_markings(const MarkedPoset& M) {
  const auto marked = M.marked_indices();
  if (marked.empty()) throw EmptyMarkingError("Minkowski decomposition needs a marked element");
  std::set<Rational> values;
  for (std::size_t a : marked) values.insert(M.mark(a));
  std::vector<MinkowskiSummand> summands;
  Rational previous(0);
  for (const Rational& c : values) {
    MinkowskiSummand s{c - previous, {}};
    for (std::size_t a : marked)
      s.marking.emplace(M.poset().element(a), M.mark(a) >= c ? Rational(1) : Rational(0));
    summands.push_back(std::move(s));
    previous = c;
  }
  return summands;
}

MinkowskiCheck minkowski_sum_check(const MarkedPoset& M, std::size_t max_elements) {
  MinkowskiCheck check;
  const MarkedPoset core = pointed_part(M);
  const auto summands = minkowski_markings(core);
  check.expected = vertices(core, max_elements);

  const auto cone_of = [](const MarkedPoset& Q) {
    return oracle::enumerate_vertices_and_rays(h_representation(recession_cone(Q)));
  };
  const auto cone = cone_of(core);

  std::vector<RationalPoint> sums{RationalPoint{std::vector<Rational>(core.size(), Rational(0))}};
  check.cones_agree = true;
  for (const auto& s : summands) {
    const MarkedPoset part = make_marked_poset(core.poset(), s.marking);
    const auto part_cone = cone_of(part);
    if (part_cone.rays != cone.rays || part_cone.vertices != cone.vertices)
      check.cones_agree = false;
    std::vector<RationalPoint> next;
    for (const auto& base : sums)
      for (const auto& v : vertices(part, max_elements)) {
        RationalPoint w = base;
        for (std::size_t p = 0; p < w.size(); ++p) w[p] += s.coefficient * v[p];
        next.push_back(std::move(w));
      }
    // Extreme points of a Minkowski sum are sums of extreme points.
    sums = oracle::extreme_points(next);
  }
  check.hull = std::move(sums);
  check.holds = check.cones_agree && check.hull == check.expected;
  return check;
}

bool is_lattice_polyhedron(const MarkedPoset& M, std::size_t max_elements) {
  const MarkedPoset core = pointed_part(M);
  if (core.size() == 0) return true;
  for (const auto& v : vertices(core, max_elements))
    for (const auto& c : v.coords)
      if (!is_integer(c)) return false;
  return true;
}

}  // namespace mop
