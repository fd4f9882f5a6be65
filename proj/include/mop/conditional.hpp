#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mop/marked_poset.hpp"
#include "mop/partition.hpp"
#include "mop/polyhedron.hpp"

namespace mop {

/// One row of s(x) = b. Missing keys are zero coefficients.
struct ConditionRow {
  std::map<ElementId, Rational> coeffs;
  Rational rhs;

  friend bool operator==(const ConditionRow&, const ConditionRow&) = default;
};

struct LinearConditions {
  std::vector<ConditionRow> rows;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }

  friend bool operator==(const LinearConditions&, const LinearConditions&) = default;
};

/// Throws UnknownElementError when a coefficient names no element of M.
void validate_conditions(const MarkedPoset& M, const LinearConditions& S);

/// h_representation(M) with the condition rows appended as equations.
HPolyhedron conditional_system(const MarkedPoset& M, const LinearConditions& S);

bool conditional_membership(const MarkedPoset& M, const LinearConditions& S,
                            const RationalPoint& x);

/// Matrix of s composed with the block-indicator embedding of the free blocks.
struct TilingMap {
  std::vector<std::string> columns;              // block names, canonical block order
  std::vector<std::vector<std::size_t>> blocks;  // the free blocks themselves
  std::vector<std::vector<Rational>> matrix;     // one row per condition

  std::size_t kernel_dimension() const;
};

TilingMap tiling_map(const MarkedPoset& M, const LinearConditions& S, const Partition& pi);

/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
std::size_t bareiss_rank(const std::vector<std::vector<Rational>>& rows);

/// Kernel dimension of the tiling map at pi_x. Throws NotInPolyhedronError.
std::size_t minimal_face_dimension(const MarkedPoset& M, const LinearConditions& S,
                                   const RationalPoint& x);

/// s/pi on the quotient poset, keyed by block names; right-hand sides kept.
/// Throws NotCompatibleError.
LinearConditions conditions_quotient(const MarkedPoset& M, const LinearConditions& S,
                                     const Partition& pi);

struct Embedding {
  MarkedPoset poset;                   // p1..pn, q1..qt, r with q_l < r and r marked 0
  LinearConditions conditions;
  std::vector<std::size_t> projection; // element index of p_i

  RationalPoint project(const RationalPoint& x) const;
};

/// Realizes {x : ineq . x >= rhs, eq . x == rhs} in n variables as a
/// conditional marked order polyhedron; `project` is the affine isomorphism.
Embedding embed_polyhedron(const std::vector<LinearRow>& inequalities,
                           const std::vector<LinearRow>& equations, std::size_t n);

}  // namespace mop
