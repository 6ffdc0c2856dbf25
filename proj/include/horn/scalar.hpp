#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <tuple>
#include <utility>

#include "horn/errors.hpp"

namespace horn {

class Rat;

// Arbitrary-precision integer.  Thin wrapper over mpz_class that returns
// concrete values from every operator so it composes with Eigen expression
// templates (gmpxx's own expression templates do not).
class Int {
public:
  Int() : v_(0) {}
  Int(long v) : v_(v) {}          // NOLINT: implicit by design
  Int(int v) : v_(v) {}           // NOLINT: implicit by design
  explicit Int(mpz_class v) : v_(std::move(v)) {}

  static Int fromString(const std::string& s) {
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) {
      throw InputError("invalid integer literal: '" + s + "'");
    }
    return Int(v);
  }

  const mpz_class& raw() const { return v_; }
  std::string str() const { return v_.get_str(); }
  double toDouble() const { return v_.get_d(); }
  long toLong() const {
    if (!v_.fits_slong_p()) throw InputError("integer too large for machine word: " + str());
    return v_.get_si();
  }

  int sign() const { return sgn(v_); }
  bool isZero() const { return sgn(v_) == 0; }
  bool odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }

  Int operator-() const { return Int(mpz_class(-v_)); }
  Int operator+(const Int& o) const { return Int(mpz_class(v_ + o.v_)); }
  Int operator-(const Int& o) const { return Int(mpz_class(v_ - o.v_)); }
  Int operator*(const Int& o) const { return Int(mpz_class(v_ * o.v_)); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

  bool operator==(const Int& o) const { return v_ == o.v_; }
  bool operator!=(const Int& o) const { return v_ != o.v_; }
  bool operator<(const Int& o) const { return v_ < o.v_; }
  bool operator<=(const Int& o) const { return v_ <= o.v_; }
  bool operator>(const Int& o) const { return v_ > o.v_; }
  bool operator>=(const Int& o) const { return v_ >= o.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

private:
  mpz_class v_;
};

inline Int abs(const Int& x) { return Int(mpz_class(::abs(x.raw()))); }

inline Int gcd(const Int& a, const Int& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(g);
}

// Extended gcd: returns (g, s, t) with g = s*a + t*b, g >= 0.
inline std::tuple<Int, Int, Int> gcdext(const Int& a, const Int& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.raw().get_mpz_t(),
             b.raw().get_mpz_t());
  return {Int(g), Int(s), Int(t)};
}

// Quotient a/b known to be exact; throws if b == 0 or the division leaves a remainder.
inline Int divExact(const Int& a, const Int& b) {
  if (b.isZero()) throw Error("exact division by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  if (sgn(r) != 0) throw Error("division is not exact: " + a.str() + " / " + b.str());
  return Int(q);
}

// Floor division (used to reduce entries above a positive pivot).
inline Int fdivQ(const Int& a, const Int& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(q);
}

inline Int pow(const Int& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), e);
  return Int(r);
}

// Arbitrary-precision rational, always kept in canonical form (positive
// denominator, coprime numerator/denominator).
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long v) : v_(v) {}          // NOLINT: implicit by design
  Rat(int v) : v_(v) {}           // NOLINT: implicit by design
  Rat(const Int& v) : v_(v.raw()) {}  // NOLINT: implicit promotion
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rat(const Int& num, const Int& den) {
    if (den.isZero()) throw InputError("rational with zero denominator");
    v_ = mpq_class(num.raw()) / mpq_class(den.raw());
  }

  // Accepts "n" or "n/d" in base 10.
  static Rat fromString(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int::fromString(s));
    const Int num = Int::fromString(s.substr(0, slash));
    const Int den = Int::fromString(s.substr(slash + 1));
    if (den.isZero()) throw InputError("rational with zero denominator: '" + s + "'");
    return Rat(num, den);
  }

  const mpq_class& raw() const { return v_; }
  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }
  bool isInteger() const { return v_.get_den() == 1; }
  std::string str() const { return v_.get_str(); }
  double toDouble() const { return v_.get_d(); }

  int sign() const { return sgn(v_); }
  bool isZero() const { return sgn(v_) == 0; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.isZero()) throw Error("rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.v_; }

private:
  mpq_class v_;
};

inline Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

inline Rat inverse(const Rat& x) {
  if (x.isZero()) throw Error("inverse of zero");
  return Rat(1) / x;
}

// x^e for any integer e; 0^0 = 1, negative powers of zero are an error.
inline Rat pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base.isZero()) {
    if (e < 0) throw Error("negative power of zero");
    return Rat(0);
  }
  const Rat b = e < 0 ? inverse(base) : base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  Rat acc(1), sq = b;
  while (k != 0) {
    if (k & 1ul) acc *= sq;
    sq *= sq;
    k >>= 1;
  }
  return acc;
}

inline Rat pow(const Rat& base, const Int& e) { return pow(base, e.toLong()); }

}  // namespace horn
