#include <cctype>
#include <string>

#include "tsw/errors.hpp"
#include "tsw/family.hpp"

namespace tsw {

namespace {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilyPtr parse() {
    FamilyPtr f = parseExpr();
    skipWs();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return f;
  }

 private:
  void skipWs() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skipWs();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  int parseNat() {
    skipWs();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer", pos_);
    }
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("integer too large", pos_);
      ++pos_;
    }
    return static_cast<int>(v);
  }

  // Balanced text up to the ')' closing the already-consumed '('.
  Ordinal parseOrdinalArg() {
    skipWs();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      ++pos_;
    }
    if (pos_ >= text_.size()) throw ParseError("expected ')'", pos_);
    try {
      return parseOrdinal(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.position());
    }
  }

  std::string parseIdent() {
    skipWs();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])))) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected family constructor", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  FamilyPtr parseExpr() {
    std::size_t at = pos_;
    std::string id = parseIdent();
    if (id == "S0") return FamilyExpr::singletons();
    if (id == "S") {
      expect('(');
      Ordinal a = parseOrdinalArg();
      expect(')');
      return FamilyExpr::schreier(std::move(a));
    }
    if (id == "R") {
      expect('(');
      Ordinal a = parseOrdinalArg();
      expect(')');
      return FamilyExpr::ralpha(std::move(a));
    }
    if (id == "comp") {
      expect('(');
      FamilyPtr m = parseExpr();
      expect(',');
      FamilyPtr n = parseExpr();
      expect(')');
      return FamilyExpr::compose(std::move(m), std::move(n));
    }
    if (id == "cat" || id == "union") {
      expect('(');
      std::vector<FamilyPtr> parts;
      parts.push_back(parseExpr());
      skipWs();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parts.push_back(parseExpr());
        skipWs();
      }
      expect(')');
      return id == "cat" ? FamilyExpr::concat(std::move(parts))
                         : FamilyExpr::unionOf(std::move(parts));
    }
    if (id == "pow" || id == "rep") {
      expect('(');
      FamilyPtr m = parseExpr();
      expect(',');
      int k = parseNat();
      expect(')');
      return id == "pow" ? FamilyExpr::power(std::move(m), k)
                         : FamilyExpr::repeat(std::move(m), k);
    }
    if (id == "bdd") {
      expect('(');
      int l = parseNat();
      expect(',');
      int m = parseNat();
      expect(')');
      return FamilyExpr::bddCard(l, m);
    }
    if (id == "norm") {
      expect('(');
      FamilyPtr m = parseExpr();
      expect(',');
      int l = parseNat();
      expect(')');
      return FamilyExpr::normalize(std::move(m), l);
    }
    throw ParseError("unknown family constructor '" + id + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilyPtr parseFamily(std::string_view text) {
  return FamilyParser(text).parse();
}

std::string formatFamily(const FamilyPtr& f) {
  switch (f->kind) {
    case FamilyKind::Singletons:
      return "S0";
    case FamilyKind::Schreier:
      return "S(" + formatOrdinal(f->alpha) + ")";
    case FamilyKind::Compose:
      return "comp(" + formatFamily(f->children[0]) + "," +
             formatFamily(f->children[1]) + ")";
    case FamilyKind::Concat: {
      std::string s = "cat(";
      for (std::size_t i = 0; i < f->children.size(); ++i) {
        if (i) s += ",";
        s += formatFamily(f->children[i]);
      }
      return s + ")";
    }
    case FamilyKind::Power:
      return "pow(" + formatFamily(f->children[0]) + "," +
             std::to_string(f->count) + ")";
    case FamilyKind::Repeat:
      return "rep(" + formatFamily(f->children[0]) + "," +
             std::to_string(f->count) + ")";
    case FamilyKind::RAlpha:
      return "R(" + formatOrdinal(f->alpha) + ")";
    case FamilyKind::BddCard:
      return "bdd(" + std::to_string(f->minElem) + "," +
             std::to_string(f->count) + ")";
    case FamilyKind::Union: {
      std::string s = "union(";
      for (std::size_t i = 0; i < f->children.size(); ++i) {
        if (i) s += ",";
        s += formatFamily(f->children[i]);
      }
      return s + ")";
    }
    case FamilyKind::Normalize:
      return "norm(" + formatFamily(f->children[0]) + "," +
             std::to_string(f->minElem) + ")";
  }
  throw std::logic_error("formatFamily: unknown kind");
}

}  // namespace tsw
