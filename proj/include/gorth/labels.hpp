#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "gorth/errors.hpp"
#include "gorth/forms.hpp"
#include "gorth/rational.hpp"

namespace gorth {

/// Indecomposable nilpotent type: a single Jordan chain of even height k
/// with sign, or a hyperbolic pair of chains of odd height k.
struct TypeLabel {
  enum class Kind { OddPair, EvenSign };
  Kind kind = Kind::EvenSign;
  std::size_t k = 0;
  int sign = 1;  // +1 / -1 for EvenSign, unused (0) for OddPair

  static TypeLabel even(std::size_t k, int sign) { return {Kind::EvenSign, k, sign}; }
  static TypeLabel pair(std::size_t k) { return {Kind::OddPair, k, 0}; }

  std::size_t dim() const { return kind == Kind::EvenSign ? k + 1 : 2 * (k + 1); }
  std::size_t height() const { return k; }

  // Ascending height; at equal height OddPair < EvenSign(+) < EvenSign(-).
  auto key() const { return std::tuple{k, kind == Kind::OddPair ? 0 : (sign > 0 ? 1 : 2)}; }
  friend bool operator==(const TypeLabel& a, const TypeLabel& b) { return a.key() == b.key(); }
  friend bool operator<(const TypeLabel& a, const TypeLabel& b) { return a.key() < b.key(); }
};

struct Tau {
  friend bool operator==(const Tau&, const Tau&) = default;
};
/// v0 = α N^s w on a single chain; s odd, α² stored exactly.
struct SingleChain {
  std::size_t s = 1;
  int eps = 1;
  Rat alpha_squared = 1;
  friend bool operator==(const SingleChain&, const SingleChain&) = default;
};
/// Two chains of lengths s+1 and s, the longer one ending at v0.
struct DoubleChain {
  std::size_t s = 1;
  friend bool operator==(const DoubleChain&, const DoubleChain&) = default;
};

using SpecialLabel = std::variant<Tau, SingleChain, DoubleChain>;

inline std::size_t special_height_of(const SpecialLabel& l) {
  if (auto* a = std::get_if<SingleChain>(&l)) return a->s;
  if (auto* b = std::get_if<DoubleChain>(&l)) return b->s;
  return 0;
}

inline std::size_t dim_of(const SpecialLabel& l) {
  if (auto* a = std::get_if<SingleChain>(&l)) return a->s + 1;
  if (auto* b = std::get_if<DoubleChain>(&l)) return 2 * b->s + 1;
  return 1;
}

/// Coarse record of the nonzero-eigenvalue summand.
struct NonzeroPart {
  std::size_t dim = 0;
  std::vector<Rat> charpoly;  // monic, highest degree first
  std::size_t positives = 0;
  std::size_t negatives = 0;
  friend bool operator==(const NonzeroPart&, const NonzeroPart&) = default;
};

struct Classification {
  SpecialLabel special = Tau{};
  std::vector<TypeLabel> types;  // sorted
  std::optional<NonzeroPart> nonzero;

  std::size_t dim() const {
    std::size_t d = dim_of(special);
    for (const auto& t : types) d += t.dim();
    if (nonzero) d += nonzero->dim;
    return d;
  }
  friend bool operator==(const Classification&, const Classification&) = default;
};

inline void sort_types(std::vector<TypeLabel>& types) { std::sort(types.begin(), types.end()); }

inline std::string canonical_string(const TypeLabel& t) {
  if (t.kind == TypeLabel::Kind::OddPair) return "T:pair[k=" + std::to_string(t.k) + "]";
  return "T:even[k=" + std::to_string(t.k) + "," + (t.sign > 0 ? "+" : "-") + "]";
}

inline std::string canonical_string(const SpecialLabel& l) {
  if (auto* a = std::get_if<SingleChain>(&l))
    return "S:single[s=" + std::to_string(a->s) + ",eps=" + (a->eps > 0 ? "+" : "-") +
           ",a2=" + a->alpha_squared.str() + "]";
  if (auto* b = std::get_if<DoubleChain>(&l)) return "S:double[s=" + std::to_string(b->s) + "]";
  return "S:tau";
}

inline std::string canonical_string(const NonzeroPart& u) {
  std::string poly;
  for (std::size_t i = 0; i < u.charpoly.size(); ++i) poly += (i ? "," : "") + u.charpoly[i].str();
  return "U:[dim=" + std::to_string(u.dim) + ", charpoly=[" + poly + "], sig=(" + std::to_string(u.positives) +
         "," + std::to_string(u.negatives) + ")]";
}

inline std::string canonical_string(const Classification& c) {
  std::vector<TypeLabel> types = c.types;
  sort_types(types);
  std::string out = canonical_string(c.special);
  for (const auto& t : types) out += " + " + canonical_string(t);
  if (c.nonzero) out += " + " + canonical_string(*c.nonzero);
  return out;
}

class LabelSyntaxError : public InputError {
 public:
  LabelSyntaxError(const std::string& what, std::size_t pos)
      : InputError("label syntax error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class LabelSemanticError : public InputError {
 public:
  explicit LabelSemanticError(const std::string& what) : InputError("invalid label: " + what) {}
};

namespace detail {

class LabelParser {
 public:
  explicit LabelParser(std::string_view s) : s_(s) {}

  Classification parse() {
    Classification c;
    c.special = special();
    while (!at_end()) {
      expect(" + ");
      if (peek("T:")) {
        c.types.push_back(type());
      } else if (peek("U:")) {
        if (c.nonzero) fail("duplicate nonzero part");
        c.nonzero = nonzero();
      } else {
        fail("expected 'T:' or 'U:'");
      }
    }
    sort_types(c.types);
    return c;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  bool peek(std::string_view lit) const { return s_.substr(pos_, lit.size()) == lit; }
  [[noreturn]] void fail(const std::string& what) const { throw LabelSyntaxError(what, pos_); }
  void expect(std::string_view lit) {
    if (!peek(lit)) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  std::size_t integer() {
    std::size_t start = pos_;
    while (!at_end() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) throw LabelSyntaxError("integer too large", start);
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }
  int sign() {
    if (accept("+")) return 1;
    if (accept("-")) return -1;
    fail("expected '+' or '-'");
  }
  Rat rational() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' || s_[pos_] == '-'))
      ++pos_;
    try {
      return Rat::parse(s_.substr(start, pos_ - start));
    } catch (const InputError&) {
      throw LabelSyntaxError("expected a rational", start);
    }
  }

  SpecialLabel special() {
    expect("S:");
    if (accept("tau")) return Tau{};
    if (accept("single[s=")) {
      SingleChain a;
      a.s = integer();
      expect(",eps=");
      a.eps = sign();
      expect(",a2=");
      a.alpha_squared = rational();
      expect("]");
      if (a.s % 2 == 0) throw LabelSemanticError("single-chain special height must be odd, got " + std::to_string(a.s));
      if (a.alpha_squared.sign() <= 0) throw LabelSemanticError("a2 must be positive");
      return a;
    }
    if (accept("double[s=")) {
      DoubleChain b;
      b.s = integer();
      expect("]");
      if (b.s == 0) throw LabelSemanticError("double-chain special height must be at least 1");
      return b;
    }
    fail("expected 'tau', 'single[' or 'double['");
  }

  TypeLabel type() {
    expect("T:");
    if (accept("even[k=")) {
      std::size_t k = integer();
      expect(",");
      int sg = sign();
      expect("]");
      if (k % 2 != 0) throw LabelSemanticError("even type height must be even, got " + std::to_string(k));
      return TypeLabel::even(k, sg);
    }
    if (accept("pair[k=")) {
      std::size_t k = integer();
      expect("]");
      if (k % 2 == 0) throw LabelSemanticError("pair type height must be odd, got " + std::to_string(k));
      return TypeLabel::pair(k);
    }
    fail("expected 'even[' or 'pair['");
  }

  NonzeroPart nonzero() {
    expect("U:[dim=");
    NonzeroPart u;
    u.dim = integer();
    expect(", charpoly=[");
    u.charpoly.push_back(rational());
    while (accept(",")) u.charpoly.push_back(rational());
    expect("], sig=(");
    u.positives = integer();
    expect(",");
    u.negatives = integer();
    expect(")]");
    if (u.charpoly.size() != u.dim + 1 || u.charpoly.front() != Rat(1))
      throw LabelSemanticError("charpoly must be monic of degree dim");
    if (u.positives + u.negatives != u.dim) throw LabelSemanticError("signature must add up to dim");
    return u;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of canonical_string. Type summands may appear in any order.
inline Classification parse_label(std::string_view s) { return detail::LabelParser(s).parse(); }

}  // namespace gorth
