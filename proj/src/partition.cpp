#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "mop/errors.hpp"
#include "mop/face_partition.hpp"
#include "mop/geometry.hpp"

namespace mop {

Partition::Partition(std::vector<std::vector<std::size_t>> blocks, const std::vector<bool>& marked) {
  const std::size_t n = marked.size();
  std::vector<bool> seen(n, false);
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t p : block) {
      if (p >= n || seen[p]) throw std::invalid_argument("blocks are not a partition");
      seen[p] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  block_of_.assign(n, 0);
  free_.assign(blocks_.size(), true);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t p : blocks_[b]) {
      block_of_[p] = b;
      if (marked[p]) free_[b] = false;
    }
}

Partition Partition::singletons(const std::vector<bool>& marked) {
  std::vector<std::vector<std::size_t>> blocks(marked.size());
  for (std::size_t p = 0; p < marked.size(); ++p) blocks[p] = {p};
  return Partition(std::move(blocks), marked);
}

std::size_t Partition::free_block_count() const {
  return static_cast<std::size_t>(std::count(free_.begin(), free_.end(), true));
}

bool refines(const Partition& finer, const Partition& coarser) {
  if (finer.element_count() != coarser.element_count()) return false;
  for (const auto& block : finer.blocks())
    for (std::size_t p : block)
      if (coarser.block_of(p) != coarser.block_of(block.front())) return false;
  return true;
}

Partition partition_from_point(const MarkedPoset& M, const RationalPoint& x) {
  if (!membership(M, x)) throw NotInPolyhedronError("point is not in the marked order polyhedron");
  const std::size_t n = M.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Equal values along a chain p < q force equality on every cover in between.
  for (const auto& [p, q] : M.poset().covers())
    if (x[p] == x[q]) parent[find(p)] = find(q);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < n; ++p) groups[find(p)].push_back(p);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& [root, members] : groups) blocks.push_back(std::move(members));
  return make_partition(M, std::move(blocks));
}

bool is_connected_partition(const MarkedPoset& M, const Partition& pi) {
  const Poset& P = M.poset();
  for (const auto& block : pi.blocks()) {
    // Connectivity of the induced subposet equals that of its comparability graph.
    std::vector<bool> reached(block.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < block.size(); ++j)
        if (!reached[j] && P.comparable(block[i], block[j])) {
          reached[j] = true;
          ++count;
          stack.push_back(j);
        }
    }
    if (count != block.size()) return false;
  }
  return true;
}

namespace {

// Reflexive-transitive closure of the block relation B <= C.
std::vector<std::vector<bool>> block_order(const Poset& P, const Partition& pi) {
  const std::size_t k = pi.block_count();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (std::size_t b = 0; b < k; ++b) leq[b][b] = true;
  for (const auto& [p, q] : P.covers()) leq[pi.block_of(p)][pi.block_of(q)] = true;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (leq[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (leq[m][j]) leq[i][j] = true;
  return leq;
}

bool antisymmetric(const std::vector<std::vector<bool>>& leq) {
  for (std::size_t i = 0; i < leq.size(); ++i)
    for (std::size_t j = i + 1; j < leq.size(); ++j)
      if (leq[i][j] && leq[j][i]) return false;
  return true;
}

}  // namespace

bool is_p_compatible(const MarkedPoset& M, const Partition& pi) {
  return antisymmetric(block_order(M.poset(), pi));
}

bool is_pl_compatible(const MarkedPoset& M, const Partition& pi) {
  const auto leq = block_order(M.poset(), pi);
  if (!antisymmetric(leq)) return false;
  const auto marked = M.marked_indices();
  for (std::size_t a : marked)
    for (std::size_t b : marked)
      if (leq[pi.block_of(a)][pi.block_of(b)] && M.mark(a) > M.mark(b)) return false;
  return true;
}

FacePartitionDiagnostics diagnose_partition(const MarkedPoset& M, const Partition& pi) {
  FacePartitionDiagnostics d;
  d.connected = is_connected_partition(M, pi);
  d.p_compatible = is_p_compatible(M, pi);
  d.pl_compatible = d.p_compatible && is_pl_compatible(M, pi);
  d.strict_quotient = d.pl_compatible && is_strict(quotient(M, pi).poset);
  return d;
}

bool is_face_partition(const MarkedPoset& M, const Partition& pi) {
  return diagnose_partition(M, pi).is_face_partition();
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f;
  for (std::size_t d : dims) {
    if (d >= f.size()) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

namespace {

struct Coarsener {
  const MarkedPoset& M;
  const Poset& P;
  std::set<std::vector<std::size_t>> seen;  // canonical encodings
  std::vector<Partition> faces;

  bool convex(const std::vector<std::size_t>& block) const {
    std::vector<bool> in(P.size(), false);
    for (std::size_t p : block) in[p] = true;
    for (std::size_t a : block)
      for (std::size_t c : block)
        if (P.less(a, c))
          for (std::size_t b = 0; b < P.size(); ++b)
            if (!in[b] && P.less(a, b) && P.less(b, c)) return false;
    return true;
  }

  // A block holding two different marks never becomes part of a face partition.
  bool consistent_marks(const std::vector<std::size_t>& block) const {
    const Rational* seen_mark = nullptr;
    for (std::size_t p : block)
      if (M.is_marked(p)) {
        if (seen_mark && *seen_mark != M.mark(p)) return false;
        seen_mark = &M.mark(p);
      }
    return true;
  }

  void visit(const Partition& pi) {
    if (!seen.insert(pi.encoding()).second) return;
    if (is_face_partition(M, pi)) faces.push_back(pi);
    for (const auto& [p, q] : P.covers()) {
      const std::size_t B = pi.block_of(p), C = pi.block_of(q);
      if (B == C) continue;
      std::vector<std::size_t> merged = pi.block(B);
      merged.insert(merged.end(), pi.block(C).begin(), pi.block(C).end());
      std::sort(merged.begin(), merged.end());
      if (!consistent_marks(merged) || !convex(merged)) continue;
      std::vector<std::vector<std::size_t>> blocks;
      for (std::size_t b = 0; b < pi.block_count(); ++b)
        if (b != B && b != C) blocks.push_back(pi.block(b));
      blocks.push_back(std::move(merged));
      visit(make_partition(M, std::move(blocks)));
    }
  }
};

}  // namespace

FaceLattice enumerate_face_partitions(const MarkedPoset& M, std::size_t max_elements) {
  if (M.size() > max_elements)
    throw SizeLimitError("face enumeration limited to " + std::to_string(max_elements) +
                         " elements, poset has " + std::to_string(M.size()));
  FaceLattice lattice;
  if (M.size() == 0) {
    // R^0 is a single point; its only face is given by the empty partition.
    lattice.nodes.push_back(Partition({}, {}));
    lattice.dims.push_back(0);
    return lattice;
  }
  Coarsener walker{M, M.poset(), {}, {}};
  walker.visit(Partition::singletons(M.marked_mask()));

  auto& nodes = walker.faces;
  std::sort(nodes.begin(), nodes.end(), [](const Partition& a, const Partition& b) {
    const auto da = a.free_block_count(), db = b.free_block_count();
    if (da != db) return da > db;
    return a < b;
  });
  for (const auto& node : nodes) lattice.dims.push_back(node.free_block_count());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (i != j && refines(nodes[i], nodes[j])) lattice.order.emplace_back(i, j);
  lattice.nodes = std::move(nodes);
  return lattice;
}

}  // namespace mop
