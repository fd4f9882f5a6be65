#include "mop/poset.hpp"

#include <algorithm>
#include <numeric>

#include "mop/errors.hpp"

namespace mop {

Poset Poset::build(std::vector<ElementId> elements,
                   const std::vector<std::pair<ElementId, ElementId>>& relations) {
  std::unordered_map<ElementId, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], i).second) throw DuplicateElementError(elements[i]);
  std::vector<Cover> by_index;
  by_index.reserve(relations.size());
  for (const auto& [lo, hi] : relations) {
    auto a = index.find(lo);
    if (a == index.end()) throw UnknownElementError(lo);
    auto b = index.find(hi);
    if (b == index.end()) throw UnknownElementError(hi);
    by_index.emplace_back(a->second, b->second);
  }
  return from_indices(std::move(elements), by_index);
}

Poset Poset::from_indices(std::vector<ElementId> elements, const std::vector<Cover>& relations) {
  Poset P;
  const std::size_t n = elements.size();
  P.elements_ = std::move(elements);
  for (std::size_t i = 0; i < n; ++i)
    if (!P.index_.emplace(P.elements_[i], i).second) throw DuplicateElementError(P.elements_[i]);

  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& [lo, hi] : relations) {
    if (lo >= n || hi >= n) throw Error("relation index out of range");
    if (lo == hi)
      throw CycleError("relation " + P.elements_[lo] + " < " + P.elements_[hi] +
                       " is reflexive");
    succ[lo].push_back(hi);
  }

  // Reflexive-transitive closure by DFS from every element.
  P.leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    P.leq_[s][s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : succ[v]) {
        if (w == s) throw CycleError("relations imply " + P.elements_[s] + " < " + P.elements_[s]);
        if (!P.leq_[s][w]) {
          P.leq_[s][w] = true;
          stack.push_back(w);
        }
      }
    }
  }

  // p < q is a cover iff no r with p < r < q.
  P.lower_.assign(n, {});
  P.upper_.assign(n, {});
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!P.less(p, q)) continue;
      bool cover = true;
      for (std::size_t r = 0; r < n && cover; ++r)
        if (P.less(p, r) && P.less(r, q)) cover = false;
      if (cover) {
        P.covers_.emplace_back(p, q);
        P.upper_[p].push_back(q);
        P.lower_[q].push_back(p);
      }
    }
  }
  return P;
}

std::size_t Poset::index_of(const ElementId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownElementError(id);
  return it->second;
}

std::optional<std::size_t> Poset::find(const ElementId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Poset::less_or_equal(const ElementId& p, const ElementId& q) const {
  return less_or_equal(index_of(p), index_of(q));
}

bool Poset::is_cover(std::size_t p, std::size_t q) const {
  return std::binary_search(covers_.begin(), covers_.end(), Cover{p, q});
}

std::vector<std::size_t> Poset::topological_order() const {
  const std::size_t n = size();
  std::vector<std::size_t> pending(n);
  for (std::size_t p = 0; p < n; ++p) pending[p] = lower_[p].size();
  std::vector<bool> done(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (order.size() < n) {
    std::size_t next = n;
    for (std::size_t p = 0; p < n; ++p)
      if (!done[p] && pending[p] == 0) {
        next = p;
        break;
      }
    done[next] = true;
    order.push_back(next);
    for (std::size_t q : upper_[next]) --pending[q];
  }
  return order;
}

std::vector<std::vector<std::size_t>> Poset::component_indices() const {
  const std::size_t n = size();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(components.size());
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    label[s] = id;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto* adj : {&lower_[v], &upper_[v]})
        for (std::size_t w : *adj)
          if (label[w] < 0) {
            label[w] = id;
            stack.push_back(w);
          }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

std::vector<Poset> Poset::connected_components() const {
  std::vector<Poset> result;
  for (const auto& members : component_indices()) result.push_back(induced(members));
  return result;
}

std::vector<std::size_t> Poset::interval(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> result;
  if (!less_or_equal(a, b)) return result;
  for (std::size_t p = 0; p < size(); ++p)
    if (less_or_equal(a, p) && less_or_equal(p, b)) result.push_back(p);
  return result;
}

std::vector<ElementId> Poset::interval(const ElementId& a, const ElementId& b) const {
  std::vector<ElementId> result;
  for (std::size_t p : interval(index_of(a), index_of(b))) result.push_back(elements_[p]);
  return result;
}

Poset Poset::induced(const std::vector<std::size_t>& indices) const {
  std::vector<ElementId> names;
  names.reserve(indices.size());
  for (std::size_t i : indices) names.push_back(elements_.at(i));
  std::vector<Cover> relations;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j)
      if (less(indices[i], indices[j])) relations.emplace_back(i, j);
  return from_indices(std::move(names), relations);
}

Poset Poset::without_covers(const std::vector<Cover>& removed) const {
  std::vector<Cover> kept;
  for (const Cover& c : covers_)
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) kept.push_back(c);
  return from_indices(elements_, kept);
}

Poset disjoint_union(const Poset& first, const Poset& second) {
  std::vector<ElementId> names = first.elements();
  names.insert(names.end(), second.elements().begin(), second.elements().end());
  std::vector<Cover> relations = first.covers();
  const std::size_t offset = first.size();
  for (const auto& [lo, hi] : second.covers()) relations.emplace_back(lo + offset, hi + offset);
  return Poset::from_indices(std::move(names), relations);
}

}  // namespace mop
