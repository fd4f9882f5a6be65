#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mop/conditional.hpp"
#include "mop/marked_poset.hpp"

namespace mop {

/// Parsed contents of a .mop file:
///
///   # comment
///   elements: m0 p q m4 m1 m3
///   covers: m0<p p<q q<m4 m1<q p<m3
///   marks: m0=0 m1=1 m3=3 m4=4
///   condition: p + 1/2*r = 4
///
/// Lines may appear in any order and repeat; repeated lines append. Element
/// names start with a letter or '_' and continue with letters, digits, '_'
/// or '.'. A "covers" entry may be any order relation; it is reduced.
struct Document {
  MarkedPoset poset;
  std::optional<LinearConditions> conditions;  // set iff a condition line exists
};

/// Throws ParseError (1-based line/column) on syntax errors, and the
/// construction errors of Poset::build / make_marked_poset on semantic ones.
Document parse_document(std::string_view text);

/// Canonical form: one line each for elements, covers (cover order), marks
/// (element order), then one line per condition with terms in element order
/// and zero coefficients dropped.
std::string serialize_document(const Document& doc);

/// "k=v,k=v" into a marking. Throws ParseError (line 1).
Marking parse_assignments(std::string_view text);

/// "1*p + 1*r = 4" style row.
std::string format_condition(const Poset& P, const ConditionRow& row);

}  // namespace mop
