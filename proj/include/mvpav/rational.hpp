#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "mvpav/errors.hpp"

namespace mvpav {

/// Unbounded exact rational. Used for LP tableaux, Lipschitz constants and
/// other places where values leave [0,1].
using Rat = mpq_class;

Rat rat_from_string(const std::string& text);

/// Canonical text form: "n/d" in lowest terms, or just "n" when d == 1.
std::string rat_to_string(const Rat& r);

/// Exact rational in [0,1], stored in lowest terms. The truth-value domain.
class Rational01 {
  public:
    Rational01() : value_(0) {}
    Rational01(long num, long den);
    explicit Rational01(Rat value);

    static Rational01 zero() { return Rational01(); }
    static Rational01 one() { return Rational01(1, 1); }
    static Rational01 half() { return Rational01(1, 2); }

    /// Parses "n/d" or "n"; rejects values outside [0,1].
    static Rational01 parse(const std::string& text);

    const Rat& value() const { return value_; }
    Rat numerator() const { return Rat(value_.get_num()); }
    Rat denominator() const { return Rat(value_.get_den()); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    std::string str() const { return rat_to_string(value_); }

    friend bool operator==(const Rational01& a, const Rational01& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational01& a, const Rational01& b) {
        return a.value_ != b.value_;
    }
    friend bool operator<(const Rational01& a, const Rational01& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Rational01& a, const Rational01& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const Rational01& a, const Rational01& b) {
        return a.value_ > b.value_;
    }
    friend bool operator>=(const Rational01& a, const Rational01& b) {
        return a.value_ >= b.value_;
    }

  private:
    Rat value_;  // canonicalized, 0 <= value_ <= 1
};

std::ostream& operator<<(std::ostream& os, const Rational01& r);

// Standard-algebra operations on [0,1] (section-2 truncated arithmetic).

/// x -> y = min(1, 1 - x + y)
Rational01 mv_impl(const Rational01& x, const Rational01& y);
/// x (.) y = max(0, x + y - 1)
Rational01 mv_odot(const Rational01& x, const Rational01& y);
/// x (+) y = min(1, x + y)
Rational01 mv_oplus(const Rational01& x, const Rational01& y);
/// !x = 1 - x
Rational01 mv_neg(const Rational01& x);
Rational01 mv_meet(const Rational01& x, const Rational01& y);
Rational01 mv_join(const Rational01& x, const Rational01& y);
/// Ordinary product x * y.
Rational01 mv_prod(const Rational01& x, const Rational01& y);
/// delta_n x = x / n, n >= 1.
Rational01 mv_div(const Rational01& x, int n);
/// n-fold (+) of x: min(1, n*x).
Rational01 mv_multiple(int n, const Rational01& x);

}  // namespace mvpav
