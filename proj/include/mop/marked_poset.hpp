#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mop/partition.hpp"
#include "mop/polyhedron.hpp"
#include "mop/poset.hpp"
#include "mop/rational.hpp"

namespace mop {

using Marking = std::map<ElementId, Rational>;

/// A poset with an order-preserving marking of some of its elements.
class MarkedPoset {
 public:
  MarkedPoset() = default;

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }

  bool is_marked(std::size_t p) const { return marks_[p].has_value(); }
  /// Precondition: is_marked(p).
  const Rational& mark(std::size_t p) const { return *marks_[p]; }
  const std::vector<std::optional<Rational>>& marks() const { return marks_; }
  std::vector<bool> marked_mask() const;
  std::vector<std::size_t> marked_indices() const;
  std::size_t unmarked_count() const;
  Marking marking() const;

  friend bool operator==(const MarkedPoset&, const MarkedPoset&) = default;

 private:
  friend MarkedPoset make_marked_poset(Poset, const Marking&);
  friend MarkedPoset make_marked_poset(Poset, std::vector<std::optional<Rational>>);

  Poset poset_;
  std::vector<std::optional<Rational>> marks_;
};

/// Throws UnknownElementError for stray keys and MarkingNotOrderPreserving
/// with the first offending pair a < b (index order) when lambda(a) > lambda(b).
MarkedPoset make_marked_poset(Poset poset, const Marking& marking);
MarkedPoset make_marked_poset(Poset poset, std::vector<std::optional<Rational>> marks);

/// An order-preserving map of marked posets that respects the markings.
struct MarkedPosetMap {
  MarkedPoset source;
  MarkedPoset target;
  std::vector<std::size_t> assignment;  // source index -> target index

  bool is_surjective() const;
};

/// Validates order preservation and marking compatibility. Throws Error.
MarkedPosetMap make_map(MarkedPoset source, MarkedPoset target, std::vector<std::size_t> assignment);

bool is_strict(const MarkedPoset& M);

struct ConstantInterval {
  std::size_t lower;
  std::size_t upper;
  std::vector<std::size_t> members;
};

/// All a < b with both marked and lambda(a) == lambda(b).
std::vector<ConstantInterval> constant_intervals(const MarkedPoset& M);

/// Builds a partition of M's elements, computing free flags from the marking.
Partition make_partition(const MarkedPoset& M, std::vector<std::vector<std::size_t>> blocks);

/// Sorted member names joined with "+".
std::string block_name(const Poset& P, const std::vector<std::size_t>& block);

struct Quotient {
  MarkedPoset poset;
  MarkedPosetMap map;
};

/// (P/pi, lambda/pi) with its quotient map. Block names join the sorted
/// member names with "+". Throws NotCompatibleError.
Quotient quotient(const MarkedPoset& M, const Partition& pi);

struct Strictification {
  MarkedPoset poset;
  Partition partition;
  MarkedPosetMap map;
};

/// Contracts every constant interval. The result is always strict.
Strictification strictify(const MarkedPoset& M);

/// Witness (a, b) of marked elements with a != b, a <= q, p <= b and
/// lambda(a) >= lambda(b); the first such pair in index order. Throws
/// NotACoverError when (p, q) is not a cover.
std::optional<std::pair<std::size_t, std::size_t>> is_redundant_cover(const MarkedPoset& M,
                                                                      const Cover& cover);

struct Regularization {
  MarkedPoset poset;
  std::vector<Cover> removed;  // indices into the (shared) element list
};

/// Removes the first redundant cover, rescans, and repeats.
/// Throws NotStrictError on non-strict input.
Regularization regularize(const MarkedPoset& M);

struct RegularityReport {
  bool is_regular = true;
  std::vector<Cover> redundant_covers;

  bool strict = true;
  std::vector<std::pair<std::size_t, std::size_t>> equal_marked_pairs;
  bool no_marked_covers = true;
  std::vector<Cover> marked_covers;
  bool single_marked_neighbours = true;
  struct NeighbourWitness {
    std::size_t element;
    std::size_t first_marked;
    std::size_t second_marked;
    bool above;  // true: both cover `element`; false: `element` covers both
  };
  std::vector<NeighbourWitness> crowded_elements;
};

RegularityReport regularity_report(const MarkedPoset& M);

/// x o f. Throws NotInPolyhedronError when x is not in the target polyhedron.
RationalPoint pull_back_point(const MarkedPosetMap& f, const RationalPoint& x);

}  // namespace mop
