#include "skein/expr.hpp"

#include "skein/closures.hpp"

#include <cctype>

namespace skein {

namespace {

ExprPtr node(TangleExpr e) { return std::make_shared<const TangleExpr>(std::move(e)); }

}  // namespace

ExprPtr make_zero() { return node({TangleExpr::Kind::zero}); }
ExprPtr make_infinity() { return node({TangleExpr::Kind::infinity}); }

ExprPtr make_twist(std::size_t n) {
  if (n == 0) throw std::invalid_argument("twist count must be positive; use make_zero for [0]");
  TangleExpr e{TangleExpr::Kind::twist};
  e.n = n;
  return node(std::move(e));
}

ExprPtr make_inv_twist(std::size_t n) {
  if (n == 0) throw std::invalid_argument("twist count must be positive");
  TangleExpr e{TangleExpr::Kind::inv_twist};
  e.n = n;
  return node(std::move(e));
}

ExprPtr make_hsum(ExprPtr l, ExprPtr r) {
  TangleExpr e{TangleExpr::Kind::hsum};
  e.left = std::move(l);
  e.right = std::move(r);
  return node(std::move(e));
}

ExprPtr make_vsum(ExprPtr l, ExprPtr r) {
  TangleExpr e{TangleExpr::Kind::vsum};
  e.left = std::move(l);
  e.right = std::move(r);
  return node(std::move(e));
}

ExprPtr make_inverse(ExprPtr c) {
  TangleExpr e{TangleExpr::Kind::inverse};
  e.left = std::move(c);
  return node(std::move(e));
}

ExprPtr make_connect(ExprPtr c, KnotId k) {
  TangleExpr e{TangleExpr::Kind::connect};
  e.left = std::move(c);
  e.knot = knot_class(k).bracket;
  e.knot_name = k;
  return node(std::move(e));
}

ExprPtr make_connect(ExprPtr c, Polynomial knot_bracket) {
  TangleExpr e{TangleExpr::Kind::connect};
  e.left = std::move(c);
  e.knot_name = knot_id_from_bracket(knot_bracket);
  e.knot = std::move(knot_bracket);
  return node(std::move(e));
}

ExprPtr make_rep(ExprPtr c, std::size_t n) {
  TangleExpr e{TangleExpr::Kind::rep};
  e.left = std::move(c);
  e.n = n;
  return node(std::move(e));
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected ") + what);
  }

  std::size_t number() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') fail("twist and repeat counts must be nonnegative");
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1'000'000) fail("count too large");
      ++pos_;
    }
    return v;
  }

  bool eat_word(const char* w) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(w);
    if (s_.compare(pos_, len, w) != 0) return false;
    pos_ += len;
    return true;
  }

  // expr := term ('+' term)*
  ExprPtr expr() {
    ExprPtr e = term();
    while (eat('+')) e = make_hsum(std::move(e), term());
    return e;
  }

  // term := factor ('*' factor)*
  ExprPtr term() {
    ExprPtr e = factor();
    while (eat('*')) e = make_vsum(std::move(e), factor());
    return e;
  }

  // factor := '1/' factor | base ('#' knotid)*
  ExprPtr factor() {
    if (peek() == '1' && is_rotation_prefix()) {
      ++pos_;  // '1'
      expect('/', "'/' after '1'");
      ExprPtr e = factor();
      if (e->kind == TangleExpr::Kind::twist) return make_inv_twist(e->n);
      return make_inverse(std::move(e));
    }
    ExprPtr e = base();
    while (eat('#')) e = make_connect(std::move(e), knot_ref());
    return e;
  }

  // '1' opens a rotation only when '/' follows; nothing else starts with a
  // bare digit, so anything other than "1/" here is a syntax error anyway.
  bool is_rotation_prefix() {
    std::size_t look = pos_ + 1;
    while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
    return look < s_.size() && s_[look] == '/';
  }

  // base := '[' nat ']' | '[inf]' | '(' expr ')' | 'rep(' expr ',' nat ')'
  ExprPtr base() {
    if (eat('[')) {
      if (eat_word("inf")) {
        expect(']', "']' after 'inf'");
        return make_infinity();
      }
      std::size_t n = number();
      expect(']', "']' after twist count");
      return n == 0 ? make_zero() : make_twist(n);
    }
    if (eat('(')) {
      ExprPtr e = expr();
      expect(')', "')'");
      return e;
    }
    if (eat_word("rep")) {
      expect('(', "'(' after 'rep'");
      ExprPtr e = expr();
      expect(',', "',' in rep");
      std::size_t n = number();
      expect(')', "')' after repeat count");
      return make_rep(std::move(e), n);
    }
    fail("expected a tangle: '[n]', '[inf]', '(', or 'rep('");
  }

  KnotId knot_ref() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == 'K') {
      ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (auto id = knot_id_from_name(s_.substr(start, pos_ - start))) return *id;
    }
    pos_ = start;
    fail("expected a knot class K1..K6 after '#'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

namespace {

enum class Prec { add, mul, tight };

std::string print(const ExprPtr& e, Prec ctx) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::zero: return "[0]";
    case K::infinity: return "[inf]";
    case K::twist: return "[" + std::to_string(e->n) + "]";
    case K::inv_twist: return "1/[" + std::to_string(e->n) + "]";
    case K::hsum: {
      std::string s = print(e->left, Prec::add) + "+" + print(e->right, Prec::mul);
      return ctx == Prec::add ? s : "(" + s + ")";
    }
    case K::vsum: {
      std::string s = print(e->left, Prec::mul) + "*" + print(e->right, Prec::tight);
      return ctx == Prec::tight ? "(" + s + ")" : s;
    }
    case K::inverse: return "1/" + print(e->left, Prec::tight);
    case K::connect: {
      std::string k = e->knot_name ? knot_class(*e->knot_name).name
                                   : "{" + to_string(e->knot) + "}";
      std::string s = print(e->left, Prec::tight) + "#" + k;
      return ctx == Prec::tight ? "(" + s + ")" : s;
    }
    case K::rep: return "rep(" + print(e->left, Prec::add) + "," + std::to_string(e->n) + ")";
  }
  return {};
}

}  // namespace

std::string to_string(const ExprPtr& e) { return print(e, Prec::add); }

std::size_t crossing_count(const ExprPtr& e) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::zero:
    case K::infinity: return 0;
    case K::twist:
    case K::inv_twist: return e->n;
    case K::hsum:
    case K::vsum: return crossing_count(e->left) + crossing_count(e->right);
    case K::inverse: return crossing_count(e->left);
    case K::connect: {
      if (e->knot_name) return crossing_count(e->left) + knot_class(*e->knot_name).crossings;
      // Every closed shadow has coefficient mass 2^c, so recover c from it.
      BracketPair k{e->knot, Polynomial{}};
      auto c = crossing_count(k);
      if (!c) throw invalid_pair("knot bracket mass is not a power of two: " + to_string(e->knot));
      return crossing_count(e->left) + *c;
    }
    case K::rep: return e->n * crossing_count(e->left);
  }
  return 0;
}

BracketPair bracket_pair(const ExprPtr& e) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::zero: return pair_zero();
    case K::infinity: return pair_infinity();
    case K::twist: return hsum_iterate(pair_crossing(), e->n);
    case K::inv_twist: return inverse(hsum_iterate(pair_crossing(), e->n));
    case K::hsum: return hsum(bracket_pair(e->left), bracket_pair(e->right));
    case K::vsum: return vsum(bracket_pair(e->left), bracket_pair(e->right));
    case K::inverse: return inverse(bracket_pair(e->left));
    case K::connect: return connect_knot(bracket_pair(e->left), e->knot);
    case K::rep: return repeat_pair(bracket_pair(e->left), e->n);
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace skein
