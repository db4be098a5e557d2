#pragma once

// Ring-expression and element-literal syntax.
//
//   expr := term { "x" term }
//   term := "Z" INT | "M(" INT "," expr ")" | "T(" INT "," expr ")"
//         | "modJ(" expr ")" | "(" expr ")"
//
// Whitespace between tokens is ignored. Products associate to the left.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

/// Syntax error at a byte offset, with the set of tokens that would have
/// been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
      : Error(message(offset, expected, found)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string message(std::size_t offset, const std::vector<std::string>& expected,
                             const std::string& found) {
    std::string out = "parse error at byte " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    return out + ", found " + found;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Well-formed input that violates a semantic rule (n = 0, nesting depth,
/// literal shape).
class SemanticError : public Error {
 public:
  SemanticError(std::size_t offset, const std::string& what)
      : Error("error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct RingExpr {
  enum class Kind { zn, product, matrix, triangular, mod_j };

  Kind kind = Kind::zn;
  std::uint64_t n = 0;  // modulus for zn, dimension for matrix and triangular
  std::vector<RingExpr> children;
  SourceSpan span;

  static constexpr std::size_t kMaxDepth = 8;

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return d + 1;
  }

  /// Equality of the tree shape and parameters; spans are ignored.
  friend bool same_structure(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.n != b.n || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
      if (!same_structure(a.children[i], b.children[i])) return false;
    return true;
  }
};

inline std::string render(const RingExpr& e) {
  switch (e.kind) {
    case RingExpr::Kind::zn: return "Z" + std::to_string(e.n);
    case RingExpr::Kind::product: {
      std::string rhs = render(e.children[1]);
      if (e.children[1].kind == RingExpr::Kind::product) rhs = "(" + rhs + ")";
      return render(e.children[0]) + " x " + rhs;
    }
    case RingExpr::Kind::matrix:
      return "M(" + std::to_string(e.n) + "," + render(e.children[0]) + ")";
    case RingExpr::Kind::triangular:
      return "T(" + std::to_string(e.n) + "," + render(e.children[0]) + ")";
    case RingExpr::Kind::mod_j: return "modJ(" + render(e.children[0]) + ")";
  }
  return "?";
}

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::size_t pos() const noexcept { return pos_; }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }
  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail({quote(token)});
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint64_t unsigned_int() {
    skip_space();
    if (!peek_digit()) fail({"integer"});
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const unsigned d = unsigned(text_[pos_] - '0');
      if (v > (UINT64_MAX - d) / 10) throw SemanticError(start, "integer is too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::int64_t signed_int() {
    skip_space();
    const std::size_t start = pos_;
    const bool negative = accept("-");
    const std::uint64_t v = unsigned_int();
    if (v > std::uint64_t(INT64_MAX)) throw SemanticError(start, "integer is too large");
    return negative ? -std::int64_t(v) : std::int64_t(v);
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_space();
    std::string found = "end of input";
    if (pos_ < text_.size()) found = "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError(pos_, std::move(expected), found);
  }

  static std::string quote(std::string_view token) { return "'" + std::string(token) + "'"; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : in_(text) {}

  RingExpr parse() {
    RingExpr e = expr(1);
    if (!in_.at_end()) in_.fail({"'x'", "end of input"});
    return e;
  }

 private:
  RingExpr expr(std::size_t depth) {
    in_.skip_space();
    const std::size_t start = in_.pos();
    RingExpr left = term(depth);
    while (in_.accept("x")) {
      RingExpr right = term(depth + 1);
      RingExpr node;
      node.kind = RingExpr::Kind::product;
      node.span = {start, in_.pos()};
      node.children.push_back(std::move(left));
      node.children.push_back(std::move(right));
      left = std::move(node);
      check_depth(left);
    }
    return left;
  }

  RingExpr term(std::size_t depth) {
    in_.skip_space();
    const std::size_t start = in_.pos();
    if (depth > RingExpr::kMaxDepth)
      throw SemanticError(start, "expression nesting exceeds depth " +
                                     std::to_string(RingExpr::kMaxDepth));
    RingExpr node;
    if (in_.accept("modJ")) {
      in_.expect("(");
      node.kind = RingExpr::Kind::mod_j;
      node.children.push_back(expr(depth + 1));
      in_.expect(")");
    } else if (in_.accept("Z")) {
      node.kind = RingExpr::Kind::zn;
      node.n = positive_int();
    } else if (in_.peek("M") || in_.peek("T")) {
      node.kind = in_.accept("M") ? RingExpr::Kind::matrix : RingExpr::Kind::triangular;
      if (node.kind == RingExpr::Kind::triangular) in_.expect("T");
      in_.expect("(");
      node.n = positive_int();
      in_.expect(",");
      node.children.push_back(expr(depth + 1));
      in_.expect(")");
    } else if (in_.accept("(")) {
      if (++parens_ > kMaxParens) throw SemanticError(start, "too many nested parentheses");
      RingExpr inner = expr(depth);
      in_.expect(")");
      --parens_;
      inner.span = {start, in_.pos()};
      return inner;
    } else {
      in_.fail({"'Z'", "'M'", "'T'", "'modJ'", "'('"});
    }
    node.span = {start, in_.pos()};
    check_depth(node);
    return node;
  }

  std::uint64_t positive_int() {
    in_.skip_space();
    const std::size_t at = in_.pos();
    const std::uint64_t v = in_.unsigned_int();
    if (v == 0) throw SemanticError(at, "ring parameter must be at least 1");
    return v;
  }

  static void check_depth(const RingExpr& e) {
    if (e.depth() > RingExpr::kMaxDepth)
      throw SemanticError(e.span.begin, "expression nesting exceeds depth " +
                                            std::to_string(RingExpr::kMaxDepth));
  }

  static constexpr std::size_t kMaxParens = 64;

  Cursor in_;
  std::size_t parens_ = 0;
};

}  // namespace detail

inline RingExpr parse_ring_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Builds the ring. A cap violation names the offending subexpression.
inline RingPtr eval_ring_expr(const RingExpr& e, const Limits& limits = {}) {
  std::vector<RingPtr> kids;
  for (const auto& c : e.children) kids.push_back(eval_ring_expr(c, limits));
  try {
    switch (e.kind) {
      case RingExpr::Kind::zn: return make_zn(e.n, limits);
      case RingExpr::Kind::product: return make_product(kids[0], kids[1], limits);
      case RingExpr::Kind::matrix:
      case RingExpr::Kind::triangular: {
        if (e.n > FiniteRing::kMaxDim)
          throw CapExceeded(render(e), UINT64_MAX, limits.max_order);
        const unsigned n = unsigned(e.n);
        return e.kind == RingExpr::Kind::matrix ? make_matrix_ring(n, kids[0], limits)
                                                : make_triangular_ring(n, kids[0], limits);
      }
      case RingExpr::Kind::mod_j:
        // The radical costs |R|^2 ring operations.
        if (kids[0]->order() > limits.max_classify_order)
          throw CapExceeded(render(e.children[0]), kids[0]->order(), limits.max_classify_order);
        return quotient_by_radical(kids[0]);
    }
  } catch (const CapExceeded& cap) {
    throw CapExceeded(cap, "in " + render(e) + " at bytes " + std::to_string(e.span.begin) + "-" +
                               std::to_string(e.span.end));
  }
  throw InternalError("unknown ring expression kind");
}

inline RingPtr eval_ring_expr(std::string_view text, const Limits& limits = {}) {
  return eval_ring_expr(parse_ring_expr(text), limits);
}

// -- element literals -------------------------------------------------------

namespace detail {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : in_(text) {}

  Index parse(const FiniteRing& r) {
    const Index x = literal(r);
    if (!in_.at_end()) in_.fail({"end of input"});
    return x;
  }

 private:
  Index literal(const FiniteRing& r) {
    in_.skip_space();
    const std::size_t at = in_.pos();
    switch (r.kind()) {
      case RingKind::zn: {
        if (in_.peek("(") || in_.peek("[")) throw SemanticError(at, "expected an integer for " + r.describe());
        const std::int64_t v = in_.signed_int();
        const std::int64_t n = r.modulus();
        return Index(((v % n) + n) % n);
      }
      case RingKind::product: {
        if (!in_.peek("(")) throw SemanticError(at, "expected a pair (a,b) for " + r.describe());
        in_.expect("(");
        const Index a = literal(r.left());
        in_.expect(",");
        const Index b = literal(r.right());
        in_.expect(")");
        const Index c[2] = {a, b};
        return r.from_coords(c);
      }
      case RingKind::matrix:
      case RingKind::triangular: return matrix(r, at);
      case RingKind::quotient: return r.project(literal(r.base()));
      case RingKind::corner: {
        const Index b = literal(r.base());
        const Index p = r.project(b);
        if (p == npos)
          throw SemanticError(at, r.base().render(b) + " is not in " + r.describe());
        return p;
      }
    }
    throw InternalError("unknown ring kind");
  }

  Index matrix(const FiniteRing& r, std::size_t at) {
    if (!in_.peek("[")) throw SemanticError(at, "expected a matrix [[..],..] for " + r.describe());
    const unsigned n = r.dim();
    std::vector<Index> entries;
    in_.expect("[");
    for (unsigned row = 0; row < n; ++row) {
      if (row) in_.expect(",");
      in_.expect("[");
      for (unsigned col = 0; col < n; ++col) {
        if (col) in_.expect(",");
        in_.skip_space();
        const std::size_t entry_at = in_.pos();
        const Index v = literal(r.base());
        if (r.kind() == RingKind::triangular && col < row && v != r.base().zero())
          throw SemanticError(entry_at, "nonzero entry below the diagonal of " + r.describe());
        entries.push_back(v);
      }
      in_.expect("]");
    }
    in_.expect("]");
    return r.from_matrix(entries);
  }

  Cursor in_;
};

}  // namespace detail

/// Element from its literal. Integer entries are reduced into the ring.
inline Element parse_element(std::string_view text, const FiniteRing& r) {
  return Element(r, detail::LiteralParser(text).parse(r));
}

}  // namespace ringlab
