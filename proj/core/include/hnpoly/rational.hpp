#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hnpoly/errors.hpp"

namespace hnpoly {

// All exact values in this library are rationals in canonical form:
// denominator > 0 and gcd(|num|, den) = 1. mpq_class maintains exactly that
// once canonicalize() has run, so construction helpers below always call it.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  Rat r(num);
  r /= Rat(den);
  return r;
}

// Accepts "p/q" or "p" with optional sign, arbitrary precision.
inline Rat parse_rat(std::string_view s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  std::string buf(s);
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), buf.c_str(), 10) != 0)
    throw ValidationError("malformed rational literal: '" + buf + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw ValidationError("rational literal with zero denominator: '" + buf + "'");
  r.canonicalize();
  return r;
}

// Canonical emission: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline double to_double(const Rat& x) { return x.get_d(); }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// The codomain of the filtration index: Q together with the two infinities.
class ExtendedRat {
public:
  enum class Kind { neg_inf, finite, pos_inf };

  ExtendedRat() : kind_(Kind::finite), value_(0) {}
  static ExtendedRat finite(Rat v) {
    ExtendedRat e;
    e.kind_ = Kind::finite;
    e.value_ = std::move(v);
    return e;
  }
  static ExtendedRat pos_inf() {
    ExtendedRat e;
    e.kind_ = Kind::pos_inf;
    return e;
  }
  static ExtendedRat neg_inf() {
    ExtendedRat e;
    e.kind_ = Kind::neg_inf;
    return e;
  }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  // Only valid for finite values.
  const Rat& value() const {
    if (!is_finite()) throw ValidationError("value() on infinite ExtendedRat");
    return value_;
  }

  friend bool operator==(const ExtendedRat& a, const ExtendedRat& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::finite || a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedRat& a, const ExtendedRat& b) {
    if (a.kind_ == b.kind_)
      return a.kind_ == Kind::finite && a.value_ < b.value_;
    if (a.kind_ == Kind::neg_inf) return true;
    if (b.kind_ == Kind::pos_inf) return true;
    return false;
  }
  friend bool operator!=(const ExtendedRat& a, const ExtendedRat& b) { return !(a == b); }
  friend bool operator>(const ExtendedRat& a, const ExtendedRat& b) { return b < a; }
  friend bool operator<=(const ExtendedRat& a, const ExtendedRat& b) { return !(b < a); }
  friend bool operator>=(const ExtendedRat& a, const ExtendedRat& b) { return !(a < b); }

  std::string str() const {
    switch (kind_) {
      case Kind::pos_inf: return "+inf";
      case Kind::neg_inf: return "-inf";
      default: return rat_str(value_);
    }
  }

private:
  Kind kind_;
  Rat value_;
};

}  // namespace hnpoly
