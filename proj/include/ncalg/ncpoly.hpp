#pragma once

// Words and polynomials in the free algebra on ranked generators, ordered
// degree-lexicographically with higher-ranked generators greater.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncalg/coeff.hpp"

namespace ncalg {

struct Generator {
  std::string name;
  int rank;  // higher rank = greater in the order
};

/// Interned generator table. Letters are stored as their position in
/// ascending-rank order, so comparing letter codes compares ranks.
class Alphabet {
 public:
  /// Names listed from greatest to smallest, as in "x4 > x3 > x2 > x1".
  explicit Alphabet(std::vector<std::string> names_descending);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  /// Name of the letter with code `letter` (0 = smallest).
  const std::string& name(int letter) const { return names_[letter]; }
  /// Letter code for a name, or -1.
  int letter(std::string_view name) const;
  std::vector<Generator> generators() const;
  /// Names from greatest to smallest.
  std::vector<std::string> names_descending() const;

  bool same_as(const Alphabet& other) const noexcept {
    return this == &other || names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;  // ascending rank
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A monomial of the free algebra; letters are codes into an Alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : s_(std::move(letters)) {}
  Word(std::initializer_list<int> letters);

  int degree() const noexcept { return static_cast<int>(s_.size()); }
  bool empty() const noexcept { return s_.empty(); }
  int operator[](int i) const noexcept { return static_cast<unsigned char>(s_[i]); }
  const std::string& letters() const noexcept { return s_; }

  Word sub(int pos, int len) const { return Word(s_.substr(pos, len)); }
  Word reversed() const { return Word(std::string(s_.rbegin(), s_.rend())); }
  Word operator*(const Word& o) const { return Word(s_ + o.s_); }

  /// Degree first, then lexicographic by letter code.
  friend bool operator<(const Word& a, const Word& b) noexcept {
    if (a.s_.size() != b.s_.size()) return a.s_.size() < b.s_.size();
    return a.s_ < b.s_;
  }
  friend bool operator>(const Word& a, const Word& b) noexcept { return b < a; }
  friend bool operator==(const Word& a, const Word& b) noexcept { return a.s_ == b.s_; }
  friend bool operator!=(const Word& a, const Word& b) noexcept { return a.s_ != b.s_; }

  /// Rendering with powers, e.g. "x2^2*x1"; the empty word is "1".
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::string s_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>()(w.letters()); }
};

/// The ambient free algebra: alphabet plus coefficient field.
struct FreeAlgebra {
  AlphabetPtr alphabet;
  FieldPtr field;

  bool same_as(const FreeAlgebra& o) const noexcept {
    return alphabet->same_as(*o.alphabet) && field->same_as(*o.field);
  }
};

using RingPtr = std::shared_ptr<const FreeAlgebra>;

RingPtr make_ring(std::vector<std::string> names_descending, FieldPtr field);

/// Element of the free algebra. Terms are kept sorted with the greatest word
/// first and no zero coefficients.
class NcPoly {
 public:
  using Terms = std::map<Word, FieldElement, std::greater<Word>>;

  explicit NcPoly(RingPtr ring) : ring_(std::move(ring)) {}
  NcPoly(RingPtr ring, const Word& w, FieldElement c);
  static NcPoly constant(RingPtr ring, FieldElement c) { return NcPoly(std::move(ring), Word(), std::move(c)); }
  static NcPoly generator(RingPtr ring, int letter);

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldPtr& field() const noexcept { return ring_->field; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `w` (zero when absent).
  FieldElement coeff(const Word& w) const;
  /// Adds c*w.
  void add_term(const Word& w, const FieldElement& c);

  /// Greatest word and its coefficient; throws ZeroPolynomial on 0.
  std::pair<Word, FieldElement> leading_term() const;
  int degree() const;  // max word length; -1 for zero
  bool is_homogeneous() const;

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const FieldElement& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  NcPoly operator-() const;
  friend NcPoly operator*(NcPoly a, const FieldElement& c) { return a *= c; }
  friend NcPoly operator*(const FieldElement& c, NcPoly a) { return a *= c; }
  /// Concatenation product; throws MixedAlphabets for different rings.
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

  /// u * this * v for words u, v.
  NcPoly sandwich(const Word& u, const Word& v) const;
  /// Every word reversed (the opposite-algebra map).
  NcPoly reversed() const;
  /// Divides by the leading coefficient.
  NcPoly monic() const;

  friend bool operator==(const NcPoly& a, const NcPoly& b);
  friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

  /// Rendering in the textual polynomial grammar (round-trips through parse_ncpoly).
  std::string to_string() const;

 private:
  void check_ring(const NcPoly& o) const;

  RingPtr ring_;
  Terms terms_;
};

NcPoly nc_mul(const NcPoly& f, const NcPoly& g);
std::pair<Word, FieldElement> leading_term(const NcPoly& f);

/// Every word of the given degree over an alphabet of `letters` letters, ascending.
std::vector<Word> all_words(int letters, int degree);

}  // namespace ncalg
