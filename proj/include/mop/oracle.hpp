#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mop/polyhedron.hpp"
#include "mop/rational.hpp"

/// Exact-rational ground truth for small H-polyhedra.
///
/// Nothing in here knows about posets or partitions: every answer is derived
/// from the rows of an HPolyhedron by linear programming (dense simplex with
/// Bland's rule) and Gauss-Jordan elimination over the rationals.
namespace mop::oracle {

inline constexpr std::size_t kDefaultMaxRows = 24;

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalPoint point;
  Rational value;
};

/// maximize objective . x over H.
LpResult maximize(const HPolyhedron& H, const std::vector<Rational>& objective);

/// A point satisfying every row, with the listed inequality rows strict;
/// nullopt when none exists.
std::optional<RationalPoint> lp_feasible(const HPolyhedron& H,
                                         const std::vector<std::size_t>& strict_rows = {});

/// Dimension of the affine hull of H; -1 when H is empty.
int affine_dimension(const HPolyhedron& H);

struct ActiveSetFace {
  std::vector<std::size_t> active;  // inequality rows tight on the whole face
  int affine_dim = -1;
  RationalPoint witness;            // relative interior point

  friend bool operator==(const ActiveSetFace&, const ActiveSetFace&) = default;
};

/// Minimal face through the relative interior: implicit equalities and a
/// witness. nullopt when H is empty.
std::optional<ActiveSetFace> relative_interior(const HPolyhedron& H);

/// Every non-empty face, each identified by its maximal active set, sorted by
/// active set. Throws SizeLimitError when H has more than `max_rows` rows.
std::vector<ActiveSetFace> enumerate_faces(const HPolyhedron& H,
                                           std::size_t max_rows = kDefaultMaxRows);

/// Faces of dimension affine_dimension(H) - 1.
std::vector<ActiveSetFace> facets(const HPolyhedron& H);

struct VRepresentation {
  bool pointed = true;
  std::vector<RationalPoint> vertices;        // empty unless pointed
  std::vector<RationalPoint> section_points;  // vertices of H intersected with lineality^perp
  std::vector<RationalPoint> rays;            // primitive integer extreme rays of that section
  std::vector<RationalPoint> lineality;       // primitive integer basis
};

VRepresentation enumerate_vertices_and_rays(const HPolyhedron& H,
                                            std::size_t max_rows = kDefaultMaxRows);

/// Dimension of the smallest face of H containing x. Throws
/// NotInPolyhedronError when x is not in H.
int minimal_face_dimension(const HPolyhedron& H, const RationalPoint& x);

bool in_convex_hull(const std::vector<RationalPoint>& points, const RationalPoint& x);

/// Extreme points of conv(points), deduplicated and sorted.
std::vector<RationalPoint> extreme_points(const std::vector<RationalPoint>& points);

/// Rank of a rational matrix.
std::size_t rank(std::vector<std::vector<Rational>> rows);

/// Scales a nonzero rational vector to the primitive integer vector with the
/// same direction.
RationalPoint primitive_direction(const RationalPoint& v);

}  // namespace mop::oracle
