#include "ncalg/ncpoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ncalg {

Alphabet::Alphabet(std::vector<std::string> names_descending)
    : names_(names_descending.rbegin(), names_descending.rend()) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator name");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidArgument, "duplicate generator name " + n);
  }
  if (names_.size() > 200) throw Error(ErrorCode::InvalidArgument, "too many generators");
}

int Alphabet::letter(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::vector<Generator> Alphabet::generators() const {
  std::vector<Generator> out;
  for (int i = size() - 1; i >= 0; --i) out.push_back({names_[i], i});
  return out;
}

std::vector<std::string> Alphabet::names_descending() const {
  return {names_.rbegin(), names_.rend()};
}

Word::Word(std::initializer_list<int> letters) {
  for (int l : letters) s_.push_back(static_cast<char>(l));
}

std::string Word::to_string(const Alphabet& alphabet) const {
  if (s_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < s_.size()) {
    std::size_t j = i;
    while (j < s_.size() && s_[j] == s_[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << alphabet.name(static_cast<unsigned char>(s_[i]));
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

RingPtr make_ring(std::vector<std::string> names_descending, FieldPtr field) {
  return std::make_shared<const FreeAlgebra>(
      FreeAlgebra{std::make_shared<const Alphabet>(std::move(names_descending)), std::move(field)});
}

NcPoly::NcPoly(RingPtr ring, const Word& w, FieldElement c) : ring_(std::move(ring)) {
  if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

NcPoly NcPoly::generator(RingPtr ring, int letter) {
  FieldElement one(ring->field, 1L);
  return NcPoly(ring, Word({letter}), one);
}

FieldElement NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElement(ring_->field) : it->second;
}

void NcPoly::add_term(const Word& w, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::pair<Word, FieldElement> NcPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  return *terms_.begin();
}

int NcPoly::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

void NcPoly::check_ring(const NcPoly& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
    throw Error(ErrorCode::MixedAlphabets, "polynomials over different generator sets or fields");
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_ring(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_ring(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const FieldElement& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(*this);
  for (auto& [w, v] : r.terms_) v = -v;
  return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check_ring(b);
  NcPoly r(a.ring_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

NcPoly NcPoly::sandwich(const Word& u, const Word& v) const {
  NcPoly r(ring_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(u * w * v, c);
  return r;
}

NcPoly NcPoly::reversed() const {
  NcPoly r(ring_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w.reversed(), c);
  return r;
}

NcPoly NcPoly::monic() const {
  if (terms_.empty()) return *this;
  const FieldElement inv = terms_.begin()->second.inverse();
  NcPoly r(*this);
  r *= inv;
  return r;
}

bool operator==(const NcPoly& a, const NcPoly& b) {
  if (!a.ring_->same_as(*b.ring_)) return false;
  return a.terms_ == b.terms_;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const Alphabet& al = *ring_->alphabet;
  for (const auto& [w, c] : terms_) {
    std::string mag;
    bool negative = false;
    if (c.needs_parens()) {
      mag = "(" + c.to_string() + ")";
    } else {
      std::string s = c.to_string();
      if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
      }
      mag = s;
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (w.empty()) {
      os << mag;
    } else {
      if (mag != "1") os << mag << "*";
      os << w.to_string(al);
    }
  }
  return os.str();
}

NcPoly nc_mul(const NcPoly& f, const NcPoly& g) { return f * g; }

std::pair<Word, FieldElement> leading_term(const NcPoly& f) { return f.leading_term(); }

std::vector<Word> all_words(int letters, int degree) {
  std::vector<Word> out{Word()};
  for (int d = 0; d < degree; ++d) {
    std::vector<Word> next;
    next.reserve(out.size() * letters);
    for (const auto& w : out)
      for (int l = 0; l < letters; ++l) next.push_back(w * Word({l}));
    out = std::move(next);
  }
  return out;
}

}  // namespace ncalg
