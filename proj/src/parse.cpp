#include "ncalg/parse.hpp"

#include <cctype>
#include <set>

namespace ncalg {
namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, RingPtr ring, const ParameterMap& params)
      : text_(text), ring_(std::move(ring)), params_(params) {}

  NcPoly parse() {
    NcPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NcPoly constant(const FieldElement& c) const { return NcPoly::constant(ring_, c); }

  NcPoly expr() {
    NcPoly acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    NcPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  static bool is_scalar(const NcPoly& p) {
    return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty());
  }

  FieldElement as_scalar(const NcPoly& p, std::size_t at) const {
    if (!is_scalar(p)) throw ParseError(at, "expected a scalar expression");
    return p.is_zero() ? FieldElement(ring_->field) : p.terms().begin()->second;
  }

  NcPoly term() {
    NcPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        NcPoly d = unary();
        FieldElement s = as_scalar(d, at);
        if (s.is_zero()) throw ParseError(at, "division by zero");
        acc *= s.inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  NcPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  NcPoly power() {
    const std::size_t base_at = pos_;
    NcPoly base = primary();
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip_ws();
    const std::size_t at = pos_;
    long e = 0;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer exponent");
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > 1000) throw ParseError(at, "exponent too large");
      ++pos_;
    }
    if (is_scalar(base)) {
      FieldElement s = as_scalar(base, base_at);
      if (neg && s.is_zero()) throw ParseError(at, "negative power of zero");
      return constant(s.pow(neg ? -e : e));
    }
    if (neg) throw ParseError(at, "negative power of a non-scalar");
    NcPoly r = constant(FieldElement(ring_->field, 1L));
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  NcPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NcPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational v(std::string(text_.substr(start, pos_ - start)), 10);
      return constant(FieldElement(ring_->field, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int letter = ring_->alphabet->letter(name);
      if (letter >= 0) return NcPoly::generator(ring_, letter);
      if (auto it = params_.find(name); it != params_.end()) {
        if (!it->second.field()->same_as(*ring_->field))
          throw ParseError(start, "parameter " + name + " lives in a different field");
        return constant(it->second);
      }
      if (name == ring_->field->generator_name()) return constant(FieldElement::generator(ring_->field));
      throw ParseError(start, "unknown symbol '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  const ParameterMap& params_;
};

}  // namespace

NcPoly parse_ncpoly(std::string_view text, const RingPtr& ring, const ParameterMap& params) {
  return ExprParser(text, ring, params).parse();
}

FieldElement parse_scalar(std::string_view text, const FieldPtr& field, const ParameterMap& params) {
  static const std::vector<std::string> no_generators;
  auto ring = std::make_shared<const FreeAlgebra>(
      FreeAlgebra{std::make_shared<const Alphabet>(no_generators), field});
  NcPoly p = parse_ncpoly(text, ring, params);
  if (p.is_zero()) return FieldElement(field);
  return p.terms().begin()->second;
}

FieldElement parse_coefficient(std::string_view text, const FieldPtr& field) {
  return parse_scalar(text, field);
}

RootField make_root_field(std::string_view relation, std::optional<RootBranch> branch,
                          std::string generator_name) {
  // Find the single variable name used in the relation.
  std::set<std::string> names;
  for (std::size_t i = 0; i < relation.size();) {
    if (std::isalpha(static_cast<unsigned char>(relation[i])) || relation[i] == '_') {
      std::size_t j = i;
      while (j < relation.size() &&
             (std::isalnum(static_cast<unsigned char>(relation[j])) || relation[j] == '_'))
        ++j;
      names.insert(std::string(relation.substr(i, j - i)));
      i = j;
    } else {
      ++i;
    }
  }
  if (names.size() != 1) throw Error(ErrorCode::InvalidArgument, "root relation must use exactly one variable");
  auto ring = make_ring({*names.begin()}, NumberField::rationals());

  NcPoly poly(ring);
  const auto eq = relation.find('=');
  if (eq == std::string_view::npos) {
    poly = parse_ncpoly(relation, ring);
  } else {
    poly = parse_ncpoly(relation.substr(0, eq), ring) - parse_ncpoly(relation.substr(eq + 1), ring);
  }
  if (poly.is_zero() || poly.degree() < 1)
    throw Error(ErrorCode::InvalidArgument, "root relation must have positive degree");
  const int d = poly.degree();
  std::vector<Rational> coeffs(d + 1);
  for (const auto& [w, c] : poly.terms()) coeffs[w.degree()] = c.constant_term();
  const Rational lead = coeffs[d];
  for (auto& c : coeffs) c /= lead;

  const auto rat = NumberField::rationals();
  auto is_poly = [&](std::vector<Rational> target) { return coeffs == target; };
  const bool square_one = is_poly({-1, 0, 1});
  const bool fourth_one = is_poly({-1, 0, 0, 0, 1});
  if (square_one || fourth_one) {
    if (!branch)
      throw Error(ErrorCode::ReducibleRequiresBranch,
                  "relation factors over Q; choose a root branch");
    switch (*branch) {
      case RootBranch::plus_one: return {rat, FieldElement(rat, 1L)};
      case RootBranch::minus_one: return {rat, FieldElement(rat, -1L)};
      case RootBranch::plus_i:
      case RootBranch::minus_i: {
        if (square_one) throw Error(ErrorCode::InvalidArgument, "p^2=1 has no imaginary branch");
        auto f = std::make_shared<const NumberField>(std::vector<Rational>{1, 0, 1}, generator_name);
        FieldElement t = FieldElement::generator(f);
        return {f, *branch == RootBranch::plus_i ? t : -t};
      }
    }
  }
  if (d == 1) return {rat, FieldElement(rat, Rational(-coeffs[0]))};
  auto f = std::make_shared<const NumberField>(coeffs, generator_name);
  return {f, FieldElement::generator(f)};
}

}  // namespace ncalg
