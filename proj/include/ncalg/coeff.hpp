#pragma once

// Exact scalars: rationals and elements of simple number fields Q[t]/(m(t)).

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/errors.hpp"

namespace ncalg {

using Rational = mpq_class;

/// Q[t]/(m) for a monic m of degree >= 1. Irreducibility of m is the caller's
/// contract; a reducible m surfaces as NonInvertible on some division.
class NumberField {
 public:
  /// `min_poly` holds coefficients from the constant term upwards and must be
  /// monic. The degree-1 polynomial t (i.e. {0, 1}) gives Q itself.
  NumberField(std::vector<Rational> min_poly, std::string generator_name);

  static std::shared_ptr<const NumberField> rationals();

  int degree() const noexcept { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<Rational>& min_poly() const noexcept { return min_poly_; }
  const std::string& generator_name() const noexcept { return name_; }
  bool is_rational() const noexcept { return degree() == 1; }

  bool same_as(const NumberField& other) const noexcept;

  // t^k mod m for k in [d, 2d-2], each of length d.
  const std::vector<Rational>& power_reduction(int k) const { return reductions_[k - degree()]; }

 private:
  std::vector<Rational> min_poly_;
  std::string name_;
  std::vector<std::vector<Rational>> reductions_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Residue class of a polynomial in t modulo the field's minimal polynomial.
/// Always stored reduced and dense, so equal elements compare equal
/// coefficient-wise.
class FieldElement {
 public:
  using Coeffs = boost::container::small_vector<Rational, 4>;

  FieldElement() : FieldElement(NumberField::rationals()) {}
  explicit FieldElement(FieldPtr field);
  FieldElement(FieldPtr field, const Rational& value);
  FieldElement(FieldPtr field, long value) : FieldElement(std::move(field), Rational(value)) {}
  /// Arbitrary-length polynomial in t (constant term first), reduced on entry.
  FieldElement(FieldPtr field, const std::vector<Rational>& poly_in_t);

  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the element lies in Q (all higher coefficients vanish).
  bool is_rational() const noexcept;
  const Rational& constant_term() const noexcept { return c_[0]; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Rendering in the coefficient-literal grammar, e.g. "1/2*t - 3".
  std::string to_string() const;
  /// True when to_string() has more than one summand and needs parentheses
  /// when used as a factor.
  bool needs_parens() const;

 private:
  void check_same_field(const FieldElement& o) const;

  FieldPtr field_;
  Coeffs c_;
};

enum class RootBranch { plus_one, minus_one, plus_i, minus_i };

struct RootField {
  FieldPtr field;
  FieldElement root;
};

/// Builds the field carrying a root of a one-variable relation such as
/// "p^2=-1" or "p^2-p+1=0". The reducible shapes p^2=1 and p^4=1 need an
/// explicit branch.
RootField make_root_field(std::string_view relation, std::optional<RootBranch> branch = std::nullopt,
                          std::string generator_name = "t");

/// Parses a coefficient literal ("1/2*t - 3", "-t^3") in the given field.
FieldElement parse_coefficient(std::string_view text, const FieldPtr& field);

}  // namespace ncalg
