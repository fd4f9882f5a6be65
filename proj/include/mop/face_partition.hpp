#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mop/marked_poset.hpp"
#include "mop/partition.hpp"
#include "mop/polyhedron.hpp"

namespace mop {

inline constexpr std::size_t kDefaultMaxElements = 12;

/// pi_x: the transitive closure of "x_p == x_q and p, q comparable".
/// Throws NotInPolyhedronError when x is not in O(M).
Partition partition_from_point(const MarkedPoset& M, const RationalPoint& x);

bool is_connected_partition(const MarkedPoset& M, const Partition& pi);
bool is_p_compatible(const MarkedPoset& M, const Partition& pi);
bool is_pl_compatible(const MarkedPoset& M, const Partition& pi);

/// Per-condition breakdown of the face-partition characterization.
struct FacePartitionDiagnostics {
  bool connected = false;
  bool p_compatible = false;
  bool pl_compatible = false;
  bool strict_quotient = false;

  bool is_face_partition() const {
    return connected && p_compatible && pl_compatible && strict_quotient;
  }
};

FacePartitionDiagnostics diagnose_partition(const MarkedPoset& M, const Partition& pi);
bool is_face_partition(const MarkedPoset& M, const Partition& pi);

/// Non-empty faces as partitions.
///
/// `order` holds (i, j) whenever nodes[i] strictly refines nodes[j]; the
/// coarser partition j is then the smaller face F_j inside F_i. `dims[i]` is
/// the free-block count of nodes[i]. Nodes are sorted by decreasing
/// dimension, then by canonical encoding.
struct FaceLattice {
  std::vector<Partition> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<std::size_t> dims;

  /// f_vector()[d] = number of d-dimensional faces.
  std::vector<std::size_t> f_vector() const;
};

/// Throws SizeLimitError when |P| exceeds `max_elements`.
FaceLattice enumerate_face_partitions(const MarkedPoset& M,
                                      std::size_t max_elements = kDefaultMaxElements);

}  // namespace mop
