#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "gorth/errors.hpp"

namespace gorth {

/// Exact rational number, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den) {
    if (den == 0) throw InputError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p" or "p/q" with decimal integers, optional sign on p, q > 0.
  static Rat parse(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char ch : s)
        if (ch < '0' || ch > '9') return false;
      return true;
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      num = text.substr(0, slash);
      den = text.substr(slash + 1);
      if (!digits(den)) throw InputError("bad rational literal '" + std::string(text) + "'");
    }
    std::string_view mag = num;
    if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) mag.remove_prefix(1);
    if (!digits(mag)) throw InputError("bad rational literal '" + std::string(text) + "'");

    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d = 1;
    if (!den.empty()) d = mpz_class(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(q);
  }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat inverse() const {
    if (is_zero()) throw InputError("inverse of zero");
    return Rat(mpq_class(1 / q_));
  }

  // Exact square root when it exists in Q.
  std::optional<Rat> sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = q_.get_num(), d = q_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rat(mpq_class(rn, rd));
  }

  Rat& operator+=(const Rat& o) { mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t()); return *this; }
  Rat& operator-=(const Rat& o) { mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t()); return *this; }
  Rat& operator*=(const Rat& o) { mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t()); return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw InputError("division by zero");
    mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), o.q_.get_mpq_t());
    return *this;
  }

  // this -= a * b, the elimination kernel.
  void sub_mul(const Rat& a, const Rat& b) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
  }
  void add_mul(const Rat& a, const Rat& b) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

}  // namespace gorth
