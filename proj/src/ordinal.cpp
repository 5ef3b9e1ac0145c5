#include "tsw/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <stdexcept>

#include "tsw/errors.hpp"

namespace tsw {

namespace {

std::uint64_t mulCoeff(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a * b;
}

std::uint64_t addCoeff(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

}  // namespace

Ordinal Ordinal::fromInt(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back(Term{Ordinal(), n});
  return r;
}

Ordinal Ordinal::omega() { return omegaPow(fromInt(1), 1); }

Ordinal Ordinal::omegaPow(const Ordinal& e, std::uint64_t c) {
  if (c == 0) throw std::domain_error("omegaPow: zero coefficient");
  Ordinal r;
  r.terms_.push_back(Term{e, c});
  return r;
}

bool Ordinal::isZero() const { return terms_.empty(); }

bool Ordinal::isFinite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.isZero());
}

std::optional<std::uint64_t> Ordinal::asFinite() const {
  if (terms_.empty()) return 0;
  if (isFinite()) return terms_[0].coeff;
  return std::nullopt;
}

bool Ordinal::isLimit() const {
  return !terms_.empty() && !terms_.back().exponent.isZero();
}

bool Ordinal::isSuccessor() const {
  return !terms_.empty() && terms_.back().exponent.isZero();
}

Ordinal Ordinal::predecessor() const {
  if (!isSuccessor()) throw std::domain_error("predecessor of a non-successor");
  Ordinal r = *this;
  if (r.terms_.back().coeff > 1) {
    --r.terms_.back().coeff;
  } else {
    r.terms_.pop_back();
  }
  return r;
}

int ordCompare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    int c = ordCompare(ta[i].exponent, tb[i].exponent);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

bool Ordinal::operator==(const Ordinal& b) const {
  return ordCompare(*this, b) == 0;
}
bool Ordinal::operator<(const Ordinal& b) const {
  return ordCompare(*this, b) < 0;
}
bool Ordinal::operator<=(const Ordinal& b) const {
  return ordCompare(*this, b) <= 0;
}

Ordinal Ordinal::operator+(const Ordinal& b) const {
  if (b.isZero()) return *this;
  if (isZero()) return b;
  const Ordinal& lead = b.terms_.front().exponent;
  Ordinal r;
  // Terms of a above b's leading exponent survive; the rest is absorbed.
  std::size_t i = 0;
  while (i < terms_.size() && ordCompare(terms_[i].exponent, lead) > 0) {
    r.terms_.push_back(terms_[i]);
    ++i;
  }
  r.terms_.push_back(b.terms_.front());
  if (i < terms_.size() && ordCompare(terms_[i].exponent, lead) == 0) {
    r.terms_.back().coeff = addCoeff(r.terms_.back().coeff, terms_[i].coeff);
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
  return r;
}

Ordinal Ordinal::operator*(const Ordinal& b) const {
  if (isZero() || b.isZero()) return Ordinal();
  Ordinal r;
  for (const Term& t : b.terms_) {
    Ordinal part;
    if (t.exponent.isZero()) {
      // a * finite: multiply the leading coefficient, keep the tail.
      part = *this;
      part.terms_.front().coeff = mulCoeff(part.terms_.front().coeff, t.coeff);
    } else {
      part = omegaPow(terms_.front().exponent + t.exponent, t.coeff);
    }
    r = r + part;
  }
  return r;
}

Ordinal leadingExponent(const Ordinal& a) {
  if (a.isZero()) throw std::domain_error("leadingExponent of 0");
  return a.terms().front().exponent;
}

namespace {

Ordinal maximalSumRec(std::vector<Ordinal>& parts,
                      std::map<std::vector<Ordinal>, Ordinal>& memo) {
  if (parts.empty()) return Ordinal();
  if (parts.size() == 1) return parts[0];
  auto it = memo.find(parts);
  if (it != memo.end()) return it->second;
  Ordinal best;
  bool first = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;  // same last summand
    Ordinal last = parts[i];
    std::vector<Ordinal> rest;
    rest.reserve(parts.size() - 1);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) rest.push_back(parts[j]);
    }
    Ordinal cand = maximalSumRec(rest, memo) + last;
    if (first || cand > best) {
      best = cand;
      first = false;
    }
  }
  memo.emplace(parts, best);
  return best;
}

}  // namespace

Ordinal maximalSum(std::vector<Ordinal> parts) {
  std::sort(parts.begin(), parts.end());
  std::map<std::vector<Ordinal>, Ordinal> memo;
  return maximalSumRec(parts, memo);
}

Ordinal standardFundamental(const Ordinal& beta, std::uint64_t n) {
  if (!beta.isLimit()) {
    throw std::domain_error("standardFundamental: not a limit ordinal");
  }
  if (n == 0) throw std::domain_error("standardFundamental: n must be >= 1");
  const Ordinal::Term& last = beta.terms().back();
  Ordinal prefix;
  for (std::size_t i = 0; i + 1 < beta.terms().size(); ++i) {
    prefix = prefix + Ordinal::omegaPow(beta.terms()[i].exponent,
                                        beta.terms()[i].coeff);
  }
  if (last.coeff > 1) {
    prefix = prefix + Ordinal::omegaPow(last.exponent, last.coeff - 1);
  }
  if (last.exponent.isSuccessor()) {
    return prefix + Ordinal::omegaPow(last.exponent.predecessor(), 1) *
                        Ordinal::fromInt(n);
  }
  return prefix + Ordinal::omegaPow(standardFundamental(last.exponent, n), 1);
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal r = parseTerm();
    skipWs();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      r = r + parseTerm();
      skipWs();
    }
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return r;
  }

 private:
  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t parseNat() {
    skipWs();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer", pos_);
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        throw ParseError("integer literal too large", pos_);
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Ordinal parseExponent() {
    skipWs();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      Ordinal e = parseSum();
      skipWs();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return e;
    }
    if (pos_ < text_.size() && text_[pos_] == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal::fromInt(parseNat());
  }

  Ordinal parseSum() {
    Ordinal r = parseTerm();
    skipWs();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      r = r + parseTerm();
      skipWs();
    }
    return r;
  }

  Ordinal parseTerm() {
    skipWs();
    if (pos_ >= text_.size()) throw ParseError("expected term", pos_);
    if (text_[pos_] == 'w') {
      ++pos_;
      Ordinal e = Ordinal::fromInt(1);
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        e = parseExponent();
      }
      std::uint64_t c = 1;
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        c = parseNat();
        if (c == 0) throw ParseError("zero coefficient", pos_);
      }
      return Ordinal::omegaPow(e, c);
    }
    return Ordinal::fromInt(parseNat());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parseOrdinal(std::string_view text) {
  return OrdinalParser(text).parse();
}

std::string formatOrdinal(const Ordinal& a) {
  if (a.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += " + ";
    first = false;
    if (t.exponent.isZero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal::fromInt(1))) {
      out += "^";
      if (t.exponent.isFinite()) {
        out += std::to_string(*t.exponent.asFinite());
      } else {
        out += "(" + formatOrdinal(t.exponent) + ")";
      }
    }
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

}  // namespace tsw
