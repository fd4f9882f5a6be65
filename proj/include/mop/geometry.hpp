#pragma once

#include <cstddef>
#include <vector>

#include "mop/face_partition.hpp"
#include "mop/marked_poset.hpp"
#include "mop/polyhedron.hpp"

namespace mop {

/// Builds a point on M's element order from a name -> value map. Throws
/// UnknownElementError, or Error when some element is missing.
RationalPoint point_from_values(const MarkedPoset& M, const Marking& values);

/// One inequality x_q - x_p >= 0 per cover p < q, one equation x_a = lambda(a)
/// per marked a. Coordinates follow the element order.
HPolyhedron h_representation(const MarkedPoset& M);

bool membership(const MarkedPoset& M, const RationalPoint& x);

/// A point of O(M) with x_p == x_q for p < q exactly when a constant interval
/// contains both (so strictly order-preserving when M is strict).
///
/// Unmarked elements are filled in topological order with the midpoint of the
/// largest value below and the smallest mark above. A missing side is padded
/// by one unit; an element with neither side gets 0.
RationalPoint generic_point(const MarkedPoset& M);

/// h_representation(M) plus x_first == x_p for every other member p of a block.
HPolyhedron face_polyhedron(const MarkedPoset& M, const Partition& pi);

/// Free-block count. Throws NotAFacePartitionError.
std::size_t face_dimension(const MarkedPoset& M, const Partition& pi);

/// Number of unmarked elements after strictification.
std::size_t dimension(const MarkedPoset& M);

/// Same poset and marked set with every mark replaced by zero.
MarkedPoset recession_cone(const MarkedPoset& M);

/// Coproduct; throws DuplicateElementError on clashing names.
MarkedPoset disjoint_union(const MarkedPoset& first, const MarkedPoset& second);

/// Every Hasse component carries a mark.
bool is_pointed(const MarkedPoset& M);

/// Seeds the marks, then repeatedly fixes the smallest-index undetermined
/// element next to a determined one: the largest determined value it covers,
/// or failing that the smallest determined value covering it.
/// Throws NotPointedError.
RationalPoint construct_vertex(const MarkedPoset& M);

/// Vertices from the face partitions without free blocks, sorted.
/// Throws NotPointedError or SizeLimitError.
std::vector<RationalPoint> vertices(const MarkedPoset& M,
                                    std::size_t max_elements = kDefaultMaxElements);

struct MinkowskiSummand {
  Rational coefficient;
  Marking marking;  // 0-1 valued
};

/// Throws EmptyMarkingError when nothing is marked.
std::vector<MinkowskiSummand> minkowski_markings(const MarkedPoset& M);

struct MinkowskiCheck {
  bool holds = false;
  std::vector<RationalPoint> expected;  // vertices of the pointed part of O(M)
  std::vector<RationalPoint> hull;      // extreme points of the weighted vertex sums
  bool cones_agree = false;
};

/// Recomposes O(M) from its 0-1 summands: sums weighted summand vertices,
/// reduces to extreme points with the oracle, compares with vertices(M).
/// Unmarked components are set aside (they are cones and equal their own sums).
MinkowskiCheck minkowski_sum_check(const MarkedPoset& M,
                                   std::size_t max_elements = kDefaultMaxElements);

/// Vertex integrality of the pointed part.
bool is_lattice_polyhedron(const MarkedPoset& M,
                           std::size_t max_elements = kDefaultMaxElements);

/// The sub marked poset made of components that carry a mark.
MarkedPoset pointed_part(const MarkedPoset& M);

}  // namespace mop
