#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tsw {

// Countable ordinal below epsilon_0 in Cantor normal form
//
//   w^{e_1}*c_1 + ... + w^{e_k}*c_k,  e_1 > e_2 > ... > e_k,  c_i >= 1,
//
// with exponents ordinals recursively. The empty term list is 0. The
// representation is canonical, so equality is structural. Values are
// immutable after construction and all operations are pure.
class Ordinal {
 public:
  struct Term;

  Ordinal();  // zero
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal fromInt(std::uint64_t n);
  static Ordinal omega();
  // w^e * c; c >= 1.
  static Ordinal omegaPow(const Ordinal& e, std::uint64_t c = 1);

  bool isZero() const;
  bool isFinite() const;
  std::optional<std::uint64_t> asFinite() const;
  // Nonzero with no finite part.
  bool isLimit() const;
  bool isSuccessor() const;

  const std::vector<Term>& terms() const { return terms_; }

  // Predecessor of a successor ordinal; throws std::domain_error otherwise.
  Ordinal predecessor() const;

  Ordinal operator+(const Ordinal& b) const;
  Ordinal operator*(const Ordinal& b) const;

  bool operator==(const Ordinal& b) const;
  bool operator!=(const Ordinal& b) const { return !(*this == b); }
  bool operator<(const Ordinal& b) const;
  bool operator<=(const Ordinal& b) const;
  bool operator>(const Ordinal& b) const { return b < *this; }
  bool operator>=(const Ordinal& b) const { return b <= *this; }

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

inline Ordinal::Ordinal() = default;
inline Ordinal::Ordinal(const Ordinal&) = default;
inline Ordinal::Ordinal(Ordinal&&) noexcept = default;
inline Ordinal& Ordinal::operator=(const Ordinal&) = default;
inline Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
inline Ordinal::~Ordinal() = default;

// -1 / 0 / +1 for a < b, a == b, a > b.
int ordCompare(const Ordinal& a, const Ordinal& b);

// Leading exponent beta_1 of the CNF; rejects 0 with std::domain_error.
Ordinal leadingExponent(const Ordinal& a);

// Text grammar: sums of terms `w^(E)*k`, `w^e*k`, `w`, `k` joined by '+'.
// Non-canonical input is normalized, not rejected.
Ordinal parseOrdinal(std::string_view text);
std::string formatOrdinal(const Ordinal& a);

// Largest value of e_{s(1)} + ... + e_{s(k)} over all orderings s of the
// multiset. Nonincreasing order is not always maximal (w then w+5 beats
// w+5 then w), so this recurses on the choice of last summand, which is
// exact because ordinal addition is monotone in its left argument.
Ordinal maximalSum(std::vector<Ordinal> parts);

// \hat{beta}_n of the standard fundamental sequence of the limit ordinal
// beta = w^{b_1}*m_1 + ... + w^{b_k}*m_k:
//   prefix + w^{b_k - 1}*n     if b_k is a successor,
//   prefix + w^{zeta_n}        if b_k is a limit,
// where prefix drops one copy of w^{b_k} and (zeta_n) is this same rule
// applied to b_k. Throws std::domain_error unless beta is a limit and n >= 1.
Ordinal standardFundamental(const Ordinal& beta, std::uint64_t n);

}  // namespace tsw
