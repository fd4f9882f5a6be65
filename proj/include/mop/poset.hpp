#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mop {

using ElementId = std::string;
using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper) by index

/// A finite poset over opaque string identifiers.
///
/// Elements are densely indexed in input order and every query iterates in
/// that order. The stored covers are the transitive reduction of whatever
/// relations the poset was built from, sorted by (lower index, upper index).
/// Instances are immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `relations` (pairs lower < upper). The
  /// relations need not be covers; they are closed and then reduced.
  /// Throws CycleError, UnknownElementError or DuplicateElementError.
  static Poset build(std::vector<ElementId> elements,
                     const std::vector<std::pair<ElementId, ElementId>>& relations);

  /// Same as build() but with relations given by element index.
  static Poset from_indices(std::vector<ElementId> elements,
                            const std::vector<Cover>& relations);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  const std::vector<ElementId>& elements() const { return elements_; }
  const ElementId& element(std::size_t index) const { return elements_.at(index); }
  const std::vector<Cover>& covers() const { return covers_; }

  /// Throws UnknownElementError.
  std::size_t index_of(const ElementId& id) const;
  std::optional<std::size_t> find(const ElementId& id) const;

  bool less_or_equal(std::size_t p, std::size_t q) const { return leq_[p][q]; }
  bool less_or_equal(const ElementId& p, const ElementId& q) const;
  bool less(std::size_t p, std::size_t q) const { return p != q && leq_[p][q]; }
  bool comparable(std::size_t p, std::size_t q) const { return leq_[p][q] || leq_[q][p]; }
  bool is_cover(std::size_t p, std::size_t q) const;

  const std::vector<std::size_t>& lower_covers(std::size_t p) const { return lower_[p]; }
  const std::vector<std::size_t>& upper_covers(std::size_t p) const { return upper_[p]; }

  /// Indices sorted so that every element follows all elements below it;
  /// among available elements the smallest index goes first.
  std::vector<std::size_t> topological_order() const;

  /// Element indices of each Hasse-graph component, ordered by smallest index.
  std::vector<std::vector<std::size_t>> component_indices() const;

  /// Each Hasse-graph component as an induced sub-poset.
  std::vector<Poset> connected_components() const;

  /// { p : a <= p <= b } in index order; empty when a is not below b.
  std::vector<ElementId> interval(const ElementId& a, const ElementId& b) const;
  std::vector<std::size_t> interval(std::size_t a, std::size_t b) const;

  /// The poset induced on `indices` (kept in the given order).
  Poset induced(const std::vector<std::size_t>& indices) const;

  /// Poset with the listed covers dropped; remaining covers stay covers.
  Poset without_covers(const std::vector<Cover>& removed) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.covers_ == b.covers_;
  }

 private:
  std::vector<ElementId> elements_;
  std::unordered_map<ElementId, std::size_t> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
};

/// Disjoint union; element identifiers must not collide.
Poset disjoint_union(const Poset& first, const Poset& second);

}  // namespace mop
