#include "clifford/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace clifford {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: malformed literal '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::abs() const {
    Rational r = *this;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(unsigned long e) const {
    Rational r(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.v_; }

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

int Interval::sign() const {
    if (hi_.sign() < 0) return -1;
    if (lo_.sign() > 0) return 1;
    return 0;
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
    const Rational p1 = a.lo_ * b.lo_;
    const Rational p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_;
    const Rational p4 = a.hi_ * b.hi_;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval Interval::square() const {
    const Rational l2 = lo_ * lo_;
    const Rational h2 = hi_ * hi_;
    if (lo_.sign() >= 0) return Interval(l2, h2);
    if (hi_.sign() <= 0) return Interval(h2, l2);
    return Interval(Rational(0), std::max(l2, h2));
}

bool Interval::intersect(const Interval& a, const Interval& b, Interval& out) {
    const Rational lo = std::max(a.lo_, b.lo_);
    const Rational hi = std::min(a.hi_, b.hi_);
    if (lo > hi) return false;
    out = Interval(lo, hi);
    return true;
}

}  // namespace clifford
