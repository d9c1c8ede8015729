#include "thinset/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c))
      throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start)
      throw ParseError(pos_, "expected a name, '{', 'union(', 'inter(' or 'diff('");
    return std::string(text_.substr(start, pos_ - start));
  }

  i64 integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected an integer");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 18)
      throw ParseError(start, "integer literal too large");
    return std::stoll(digits);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

SetExpr parse_expr(Scanner& scan);

std::vector<i64> parse_int_args(Scanner& scan) {
  std::vector<i64> args;
  scan.expect('(');
  if (!scan.consume(')')) {
    args.push_back(scan.integer());
    while (scan.consume(',')) args.push_back(scan.integer());
    scan.expect(')');
  }
  return args;
}

SetExpr parse_named(Scanner& scan, const std::string& name,
                    std::size_t name_pos) {
  if (name == "union") {
    scan.expect('(');
    std::vector<SetExpr> members;
    members.push_back(parse_expr(scan));
    while (scan.consume(',')) members.push_back(parse_expr(scan));
    scan.expect(')');
    if (members.size() < 2)
      throw ParseError(scan.pos(), "union needs at least two members");
    return SetExpr::union_of(std::move(members));
  }
  if (name == "inter" || name == "diff") {
    scan.expect('(');
    SetExpr left = parse_expr(scan);
    scan.expect(',');
    SetExpr right = parse_expr(scan);
    scan.expect(')');
    return name == "inter"
               ? SetExpr::intersection(std::move(left), std::move(right))
               : SetExpr::difference(std::move(left), std::move(right));
  }
  if (name == "blocks") {
    scan.expect('(');
    const std::size_t inner_pos = scan.pos();
    const std::string inner = scan.name();
    scan.expect(')');
    if (!is_block_family_name(inner))
      throw ParseError(inner_pos, "'" + inner + "' is not a block family");
    return SetExpr::catalog(inner);
  }

  const auto known = catalog_names(true);
  if (std::find(known.begin(), known.end(), name) == known.end())
    throw ParseError(name_pos, "unknown catalog name: " + name);

  std::vector<i64> args;
  if (scan.peek() == '(') args = parse_int_args(scan);
  try {
    return SetExpr::catalog(name, args);
  } catch (const DomainError& e) {
    throw ParseError(name_pos, e.what());
  }
}

SetExpr parse_expr(Scanner& scan) {
  if (scan.consume('{')) {
    std::vector<i64> elements;
    elements.push_back(scan.integer());
    while (scan.consume(',')) elements.push_back(scan.integer());
    scan.expect('}');
    for (i64 e : elements)
      if (e < 1) throw ParseError(scan.pos(), "set elements must be positive");
    return SetExpr::explicit_set(std::move(elements));
  }
  const std::size_t name_pos = scan.pos();
  const std::string name = scan.name();
  return parse_named(scan, name, name_pos);
}

}  // namespace

SetExpr parse_set_expr(std::string_view text) {
  Scanner scan(text);
  SetExpr expr = parse_expr(scan);
  if (!scan.at_end())
    throw ParseError(scan.pos(), "unexpected trailing input");
  return expr;
}

}  // namespace thinset
