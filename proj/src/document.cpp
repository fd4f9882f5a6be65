#include "mop/document.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "mop/errors.hpp"

namespace mop {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Character cursor over one line; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t line_no, std::size_t offset = 0)
      : line_(line), line_no_(line_no), pos_(offset) {}

  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == line_.size();
  }
  char peek() const { return pos_ < line_.size() ? line_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_no_, column());
  }
  [[noreturn]] void fail_at(const std::string& message, std::size_t column) const {
    throw ParseError(message, line_no_, column);
  }

  std::string name() {
    if (!is_name_start(peek())) fail("expected an element name");
    const std::size_t start = pos_;
    while (pos_ < line_.size() && is_name_char(line_[pos_])) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  std::string word() {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  bool at_rational() const { return is_digit(peek()); }

  // Unsigned "n" or "n/d".
  Rational rational() {
    const std::size_t start = pos_;
    if (!is_digit(peek())) fail("expected a number");
    while (is_digit(peek())) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!is_digit(peek())) fail("expected a denominator");
      while (is_digit(peek())) ++pos_;
    }
    try {
      return parse_rational(line_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail_at(e.what(), start + 1);
    }
  }

  Rational signed_rational() {
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    Rational r = rational();
    return negative ? Rational(-r) : r;
  }

  void expect_separator() {
    if (pos_ < line_.size() && !is_space(line_[pos_])) fail("unexpected character");
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_;
};

ConditionRow parse_condition(Cursor& c) {
  ConditionRow row;
  Rational constant(0);
  bool first = true;
  for (;;) {
    c.skip_space();
    Rational sign(1);
    if (c.accept('-'))
      sign = -1;
    else if (!c.accept('+') && !first)
      break;
    c.skip_space();
    if (c.at_rational()) {
      const Rational value = c.rational();
      c.skip_space();
      if (c.accept('*')) {
        c.skip_space();
        row.coeffs[c.name()] += sign * value;
      } else {
        constant += sign * value;
      }
    } else {
      row.coeffs[c.name()] += sign;
    }
    first = false;
  }
  c.expect('=');
  c.skip_space();
  row.rhs = c.signed_rational() - constant;
  if (!c.at_end()) c.fail("unexpected trailing text");
  for (auto it = row.coeffs.begin(); it != row.coeffs.end();)
    it = it->second == 0 ? row.coeffs.erase(it) : std::next(it);
  return row;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

Document parse_document(std::string_view text) {
  std::vector<ElementId> elements;
  std::vector<std::pair<ElementId, ElementId>> relations;
  Marking marking;
  std::optional<LinearConditions> conditions;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor c(line, i + 1);
    if (c.at_end()) continue;

    const std::size_t key_column = c.column();
    const std::string key = c.word();
    c.skip_space();
    c.expect(':');

    if (key == "elements") {
      while (!c.at_end()) {
        elements.push_back(c.name());
        c.expect_separator();
      }
    } else if (key == "covers") {
      while (!c.at_end()) {
        std::string lower = c.name();
        int links = 0;
        while (c.accept('<')) {
          std::string upper = c.name();
          relations.emplace_back(lower, upper);
          lower = std::move(upper);
          ++links;
        }
        if (links == 0) c.fail("expected '<'");
        c.expect_separator();
      }
    } else if (key == "marks") {
      while (!c.at_end()) {
        const std::size_t column = c.column();
        std::string id = c.name();
        c.expect('=');
        Rational value = c.signed_rational();
        c.expect_separator();
        if (!marking.emplace(id, std::move(value)).second)
          c.fail_at("element '" + id + "' is marked twice", column);
      }
    } else if (key == "condition") {
      if (!conditions) conditions.emplace();
      conditions->rows.push_back(parse_condition(c));
    } else {
      throw ParseError("unknown key '" + key + "'", i + 1, key_column);
    }
  }

  Document doc;
  doc.poset = make_marked_poset(Poset::build(elements, relations), marking);
  if (conditions) validate_conditions(doc.poset, *conditions);
  doc.conditions = std::move(conditions);
  return doc;
}

Marking parse_assignments(std::string_view text) {
  Marking values;
  Cursor c(text, 1);
  if (c.at_end()) return values;
  for (;;) {
    c.skip_space();
    const std::size_t column = c.column();
    std::string id = c.name();
    c.skip_space();
    c.expect('=');
    c.skip_space();
    Rational value = c.signed_rational();
    if (!values.emplace(id, std::move(value)).second)
      c.fail_at("element '" + id + "' given twice", column);
    c.skip_space();
    if (c.at_end()) break;
    c.expect(',');
  }
  return values;
}

std::string format_condition(const Poset& P, const ConditionRow& row) {
  std::string out;
  for (std::size_t p = 0; p < P.size(); ++p) {
    const auto it = row.coeffs.find(P.element(p));
    if (it == row.coeffs.end() || it->second == 0) continue;
    const Rational& c = it->second;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += to_string(abs(c)) + "*" + P.element(p);
  }
  if (out.empty()) out = "0";
  return out + " = " + to_string(row.rhs);
}

std::string serialize_document(const Document& doc) {
  const Poset& P = doc.poset.poset();
  std::string out = "elements:";
  for (const auto& e : P.elements()) out += " " + e;
  out += "\ncovers:";
  for (const auto& [p, q] : P.covers()) out += " " + P.element(p) + "<" + P.element(q);
  out += "\nmarks:";
  for (std::size_t a : doc.poset.marked_indices())
    out += " " + P.element(a) + "=" + to_string(doc.poset.mark(a));
  out += "\n";
  if (doc.conditions)
    for (const auto& row : doc.conditions->rows) out += "condition: " + format_condition(P, row) + "\n";
  return out;
}

}  // namespace mop
