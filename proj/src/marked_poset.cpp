#include "mop/marked_poset.hpp"

#include <algorithm>
#include <numeric>

#include "mop/errors.hpp"
#include "mop/face_partition.hpp"
#include "mop/geometry.hpp"

namespace mop {

std::vector<bool> MarkedPoset::marked_mask() const {
  std::vector<bool> mask(marks_.size());
  for (std::size_t p = 0; p < marks_.size(); ++p) mask[p] = marks_[p].has_value();
  return mask;
}

std::vector<std::size_t> MarkedPoset::marked_indices() const {
  std::vector<std::size_t> result;
  for (std::size_t p = 0; p < marks_.size(); ++p)
    if (marks_[p]) result.push_back(p);
  return result;
}

std::size_t MarkedPoset::unmarked_count() const {
  return static_cast<std::size_t>(
      std::count_if(marks_.begin(), marks_.end(), [](const auto& m) { return !m; }));
}

Marking MarkedPoset::marking() const {
  Marking result;
  for (std::size_t p = 0; p < marks_.size(); ++p)
    if (marks_[p]) result.emplace(poset_.element(p), *marks_[p]);
  return result;
}

MarkedPoset make_marked_poset(Poset poset, std::vector<std::optional<Rational>> marks) {
  if (marks.size() != poset.size()) throw Error("marking length does not match poset size");
  for (std::size_t a = 0; a < poset.size(); ++a) {
    if (!marks[a]) continue;
    for (std::size_t b = 0; b < poset.size(); ++b)
      if (marks[b] && poset.less(a, b) && *marks[a] > *marks[b])
        throw MarkingNotOrderPreserving(poset.element(a), poset.element(b));
  }
  MarkedPoset M;
  M.poset_ = std::move(poset);
  M.marks_ = std::move(marks);
  return M;
}

MarkedPoset make_marked_poset(Poset poset, const Marking& marking) {
  std::vector<std::optional<Rational>> marks(poset.size());
  for (const auto& [id, value] : marking) marks[poset.index_of(id)] = value;
  return make_marked_poset(std::move(poset), std::move(marks));
}

bool MarkedPosetMap::is_surjective() const {
  std::vector<bool> hit(target.size(), false);
  for (std::size_t t : assignment) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

MarkedPosetMap make_map(MarkedPoset source, MarkedPoset target, std::vector<std::size_t> assignment) {
  if (assignment.size() != source.size()) throw Error("map must assign every source element");
  for (std::size_t t : assignment)
    if (t >= target.size()) throw Error("map assigns an element outside the target");
  const Poset& P = source.poset();
  for (const auto& [p, q] : P.covers())
    if (!target.poset().less_or_equal(assignment[p], assignment[q]))
      throw Error("map is not order-preserving on " + P.element(p) + " < " + P.element(q));
  for (std::size_t a : source.marked_indices()) {
    const std::size_t fa = assignment[a];
    if (!target.is_marked(fa) || target.mark(fa) != source.mark(a))
      throw Error("map does not respect the marking at " + P.element(a));
  }
  return {std::move(source), std::move(target), std::move(assignment)};
}

bool is_strict(const MarkedPoset& M) {
  const auto marked = M.marked_indices();
  for (std::size_t a : marked)
    for (std::size_t b : marked)
      if (M.poset().less(a, b) && !(M.mark(a) < M.mark(b))) return false;
  return true;
}

std::vector<ConstantInterval> constant_intervals(const MarkedPoset& M) {
  std::vector<ConstantInterval> result;
  const auto marked = M.marked_indices();
  for (std::size_t a : marked)
    for (std::size_t b : marked)
      if (M.poset().less(a, b) && M.mark(a) == M.mark(b))
        result.push_back({a, b, M.poset().interval(a, b)});
  return result;
}

Partition make_partition(const MarkedPoset& M, std::vector<std::vector<std::size_t>> blocks) {
  return Partition(std::move(blocks), M.marked_mask());
}

std::string block_name(const Poset& P, const std::vector<std::size_t>& block) {
  std::vector<std::string> names;
  for (std::size_t p : block) names.push_back(P.element(p));
  std::sort(names.begin(), names.end());
  std::string joined;
  for (const auto& n : names) {
    if (!joined.empty()) joined += '+';
    joined += n;
  }
  return joined;
}

Quotient quotient(const MarkedPoset& M, const Partition& pi) {
  if (pi.element_count() != M.size()) throw NotCompatibleError("partition size does not match poset");
  if (!is_pl_compatible(M, pi))
    throw NotCompatibleError("partition is not compatible with the marked poset");
  const Poset& P = M.poset();
  std::vector<ElementId> names;
  for (const auto& block : pi.blocks()) names.push_back(block_name(P, block));
  std::vector<Cover> relations;
  for (const auto& [p, q] : P.covers()) {
    const std::size_t B = pi.block_of(p), C = pi.block_of(q);
    if (B != C) relations.emplace_back(B, C);
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  Poset Q = Poset::from_indices(std::move(names), relations);
  std::vector<std::optional<Rational>> marks(pi.block_count());
  for (std::size_t a : M.marked_indices()) marks[pi.block_of(a)] = M.mark(a);
  MarkedPoset quotient_poset = make_marked_poset(std::move(Q), std::move(marks));
  MarkedPosetMap map{M, quotient_poset, pi.encoding()};
  return {std::move(quotient_poset), std::move(map)};
}

Strictification strictify(const MarkedPoset& M) {
  const std::size_t n = M.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& interval : constant_intervals(M))
    for (std::size_t p : interval.members) parent[find(p)] = find(interval.lower);

  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t p = 0; p < n; ++p) groups[find(p)].push_back(p);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  Partition pi = make_partition(M, std::move(blocks));
  Quotient q = quotient(M, pi);
  return {std::move(q.poset), std::move(pi), std::move(q.map)};
}

std::optional<std::pair<std::size_t, std::size_t>> is_redundant_cover(const MarkedPoset& M,
                                                                      const Cover& cover) {
  const Poset& P = M.poset();
  const auto [p, q] = cover;
  if (p >= P.size() || q >= P.size() || !P.is_cover(p, q))
    throw NotACoverError("not a cover of the poset");
  const auto marked = M.marked_indices();
  for (std::size_t a : marked) {
    if (!P.less_or_equal(a, q)) continue;
    for (std::size_t b : marked)
      if (a != b && P.less_or_equal(p, b) && M.mark(a) >= M.mark(b)) return std::pair{a, b};
  }
  return std::nullopt;
}

Regularization regularize(const MarkedPoset& M) {
  if (!is_strict(M)) throw NotStrictError("regularize needs a strict marking; strictify first");
  Regularization result{M, {}};
  for (;;) {
    const Poset& P = result.poset.poset();
    std::optional<Cover> redundant;
    for (const Cover& c : P.covers())
      if (is_redundant_cover(result.poset, c)) {
        redundant = c;
        break;
      }
    if (!redundant) break;
    result.removed.push_back(*redundant);
    result.poset = make_marked_poset(P.without_covers({*redundant}), result.poset.marks());
  }
  return result;
}

RegularityReport regularity_report(const MarkedPoset& M) {
  RegularityReport report;
  const Poset& P = M.poset();
  for (const Cover& c : P.covers())
    if (is_redundant_cover(M, c)) report.redundant_covers.push_back(c);
  report.is_regular = report.redundant_covers.empty();

  const auto marked = M.marked_indices();
  for (std::size_t a : marked)
    for (std::size_t b : marked)
      if (P.less(a, b) && M.mark(a) >= M.mark(b)) report.equal_marked_pairs.emplace_back(a, b);
  report.strict = report.equal_marked_pairs.empty();

  for (const auto& [p, q] : P.covers())
    if (M.is_marked(p) && M.is_marked(q)) report.marked_covers.emplace_back(p, q);
  report.no_marked_covers = report.marked_covers.empty();

  for (std::size_t p = 0; p < P.size(); ++p) {
    for (bool above : {false, true}) {
      const auto& neighbours = above ? P.upper_covers(p) : P.lower_covers(p);
      std::vector<std::size_t> marked_neighbours;
      for (std::size_t r : neighbours)
        if (M.is_marked(r)) marked_neighbours.push_back(r);
      if (marked_neighbours.size() > 1)
        report.crowded_elements.push_back({p, marked_neighbours[0], marked_neighbours[1], above});
    }
  }
  report.single_marked_neighbours = report.crowded_elements.empty();
  return report;
}

RationalPoint pull_back_point(const MarkedPosetMap& f, const RationalPoint& x) {
  if (!membership(f.target, x))
    throw NotInPolyhedronError("point is not in the target marked order polyhedron");
  RationalPoint y;
  y.coords.reserve(f.assignment.size());
  for (std::size_t t : f.assignment) y.coords.push_back(x[t]);
  return y;
}

}  // namespace mop
