#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace clifford {

/// Arbitrary-precision rational number, always stored canonical:
/// gcd(|numerator|, denominator) = 1 and denominator > 0. Equality and
/// printing are therefore structural.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q);

    /// Parses "n" or "n/d" with optional leading minus. Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational reciprocal() const;
    Rational pow(unsigned long e) const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    mpq_class v_;
};

/// Closed interval with rational endpoints, lo <= hi. The exact detection
/// pipeline never leaves rational endpoints.
class Interval {
public:
    Interval() = default;
    Interval(const Rational& point) : lo_(point), hi_(point) {}
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains_zero() const { return contains(Rational(0)); }

    /// -1 if hi < 0, +1 if lo > 0, 0 if the interval touches or straddles 0.
    int sign() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);

    /// Tight image of x^2 over the interval.
    Interval square() const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

    /// Empty optional when the intervals are disjoint.
    static bool intersect(const Interval& a, const Interval& b, Interval& out);

private:
    Rational lo_, hi_;
};

}  // namespace clifford
