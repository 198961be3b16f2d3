#pragma once

// Commutative polynomials over a number field and a small Buchberger
// backend (graded reverse lexicographic order) for counting the points of
// zero-dimensional ideals.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/coeff.hpp"

namespace ncalg {

constexpr int kMaxCommVars = 8;

struct Monomial {
  std::array<std::int16_t, kMaxCommVars> e{};

  int degree() const;
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial var(int i, int power = 1);
  bool coprime(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded reverse lexicographic: true when a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b, int nvars);

class CommPoly {
 public:
  using Term = std::pair<Monomial, FieldElement>;

  CommPoly(FieldPtr field, int nvars);
  static CommPoly constant(FieldPtr field, int nvars, const FieldElement& c);
  static CommPoly variable(FieldPtr field, int nvars, int i);

  const FieldPtr& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }  // greatest first
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  void drop_leading() { terms_.erase(terms_.begin()); }
  int degree() const;

  void add_term(const Monomial& m, const FieldElement& c);
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  CommPoly operator*(const FieldElement& c) const;
  CommPoly times_term(const Monomial& m, const FieldElement& c) const;
  CommPoly operator-() const;
  CommPoly monic() const;

  FieldElement evaluate(const std::vector<FieldElement>& point) const;
  /// Sets variable i to the value c (the variable stays in the ring).
  CommPoly substitute(int i, const FieldElement& c) const;
  /// Same polynomial in a ring with more variables appended.
  CommPoly widened(int nvars) const;
  /// Partial derivative.
  CommPoly derivative(int i) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const CommPoly& a, const CommPoly& b);

 private:
  FieldPtr field_;
  int nvars_;
  std::vector<Term> terms_;
};

/// Determinant of a square matrix with polynomial entries (Laplace expansion, n <= 4).
CommPoly poly_determinant(const std::vector<std::vector<CommPoly>>& m);

struct CommIdeal {
  std::vector<std::string> variables;
  std::vector<CommPoly> generators;
  std::vector<CommPoly> basis;  // reduced Groebner basis once computed
  bool has_basis = false;
};

/// Fills in the reduced Groebner basis (grevlex, variables in listed order).
CommIdeal buchberger(CommIdeal I);

/// Number of standard monomials (points with multiplicity), nullopt when infinite.
std::optional<long> quotient_dimension(const CommIdeal& I);

/// Krull dimension of the quotient read off the leading monomials; -1 for the unit ideal.
int ideal_dimension(const CommIdeal& I);

/// Standard monomials of a zero-dimensional ideal with a basis.
std::vector<Monomial> standard_monomials(const CommIdeal& I);

/// Normal form modulo the basis of I.
CommPoly reduce(const CommPoly& f, const CommIdeal& I);

/// Number of distinct points of a zero-dimensional ideal, from the squarefree
/// part of the characteristic polynomial of a generic linear form.
long distinct_points(const CommIdeal& I, const std::vector<int>& coordinate_vars);

/// Univariate helpers over a number field; coefficients ascending.
using UniPoly = std::vector<FieldElement>;
UniPoly uni_gcd(UniPoly a, UniPoly b);
UniPoly uni_derivative(const UniPoly& a);
int uni_degree(const UniPoly& a);
/// Characteristic polynomial of a square matrix (Hessenberg reduction).
UniPoly characteristic_polynomial(std::vector<std::vector<FieldElement>> m, const FieldPtr& field);

}  // namespace ncalg
