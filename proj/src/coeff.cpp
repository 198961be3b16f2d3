#include "ncalg/coeff.hpp"

#include <sstream>

namespace ncalg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::ReducibleRequiresBranch: return "ReducibleRequiresBranch";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::MixedAlphabets: return "MixedAlphabets";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotCompletedThatFar: return "NotCompletedThatFar";
    case ErrorCode::SharedGeneratorMismatch: return "SharedGeneratorMismatch";
    case ErrorCode::SubalgebraRelationFails: return "SubalgebraRelationFails";
    case ErrorCode::SingularChange: return "SingularChange";
    case ErrorCode::NonQuadraticRelation: return "NonQuadraticRelation";
    case ErrorCode::NoInvertibleSolution: return "NoInvertibleSolution";
    case ErrorCode::EmptySolutionSpace: return "EmptySolutionSpace";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NonSquareSystem: return "NonSquareSystem";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotOnScheme: return "NotOnScheme";
    case ErrorCode::RankDeficientOnComponent: return "RankDeficientOnComponent";
    case ErrorCode::NotNormalAtStage: return "NotNormalAtStage";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

NumberField::NumberField(std::vector<Rational> min_poly, std::string generator_name)
    : min_poly_(std::move(min_poly)), name_(std::move(generator_name)) {
  if (min_poly_.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "minimal polynomial must have degree >= 1");
  if (min_poly_.back() != 1)
    throw Error(ErrorCode::InvalidArgument, "minimal polynomial must be monic");
  for (auto& c : min_poly_) c.canonicalize();
  const int d = degree();
  // t^d = -(c_0 + ... + c_{d-1} t^{d-1}); higher powers by shifting.
  std::vector<Rational> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -min_poly_[i];
  reductions_.push_back(cur);
  for (int k = d + 1; k <= 2 * d - 2; ++k) {
    std::vector<Rational> next(d);
    const Rational top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) next[i] -= top * min_poly_[i];
    reductions_.push_back(next);
    cur = std::move(next);
  }
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const auto q = std::make_shared<const NumberField>(std::vector<Rational>{0, 1}, "t");
  return q;
}

bool NumberField::same_as(const NumberField& other) const noexcept {
  return this == &other || (min_poly_ == other.min_poly_ && name_ == other.name_);
}

FieldElement::FieldElement(FieldPtr field) : field_(std::move(field)) {
  c_.resize(field_->degree());
}

FieldElement::FieldElement(FieldPtr field, const Rational& value) : FieldElement(std::move(field)) {
  c_[0] = value;
  c_[0].canonicalize();
}

FieldElement::FieldElement(FieldPtr field, const std::vector<Rational>& poly_in_t)
    : FieldElement(std::move(field)) {
  const int d = field_->degree();
  std::vector<Rational> p = poly_in_t;
  // Reduce high powers from the top down.
  for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
    if (p[k] == 0) continue;
    const Rational top = p[k];
    for (int i = 0; i < d; ++i) p[k - d + i] -= top * field_->min_poly()[i];
    p[k] = 0;
  }
  for (int i = 0; i < d && i < static_cast<int>(p.size()); ++i) c_[i] = p[i];
}

FieldElement FieldElement::generator(FieldPtr field) {
  if (field->degree() == 1) {
    // t satisfies t + c_0 = 0.
    return FieldElement(field, Rational(-field->min_poly()[0]));
  }
  FieldElement e(std::move(field));
  e.c_[1] = 1;
  return e;
}

bool FieldElement::is_zero() const noexcept {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool FieldElement::is_one() const noexcept {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElement::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw Error(ErrorCode::MixedFields, "operands live in different number fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  const int d = field_->degree();
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  for (int i = 0; i < d; ++i) c_[i] = prod[i];
  for (int k = d; k <= 2 * d - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = field_->power_reduction(k);
    for (int i = 0; i < d; ++i)
      if (red[i] != 0) c_[i] += prod[k] * red[i];
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const int d = field_->degree();
  if (d == 1) return FieldElement(field_, Rational(1 / c_[0]));
  // Solve (multiplication-by-this matrix) * x = e_0 by Gauss-Jordan over Q.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  FieldElement basis(field_, 1L);
  for (int j = 0; j < d; ++j) {
    FieldElement col = *this * basis;
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    basis *= generator(field_);
  }
  m[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    if (piv < 0)
      throw Error(ErrorCode::NonInvertible,
                  "element " + to_string() + " is a zero divisor; the minimal polynomial is reducible");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (int j = col; j <= d; ++j) m[col][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  FieldElement r(field_);
  for (int i = 0; i < d; ++i) r.c_[i] = m[i][d];
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same_field(o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return *this *= o.inverse();
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result(field_, 1L);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.c_ == b.c_;
}

bool FieldElement::needs_parens() const {
  int nonzero = 0;
  for (const auto& c : c_)
    if (c != 0) ++nonzero;
  return nonzero > 1;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::string& t = field_->generator_name();
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << t;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace ncalg
