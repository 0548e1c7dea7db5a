#include "clifford/algebraic.hpp"

#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace clifford {

AlgebraicReal AlgebraicReal::from_rational(const Rational& q) {
    AlgebraicReal a;
    a.minpoly_ = UPoly::linear_root(q);
    a.iso_ = Interval(q);
    return a;
}

AlgebraicReal::AlgebraicReal(UPoly minpoly, Interval isolator)
    : minpoly_(std::move(minpoly)), iso_(std::move(isolator)) {
    if (minpoly_.is_zero() || minpoly_.is_constant())
        throw std::invalid_argument("AlgebraicReal: constant minimal polynomial");
    if (!minpoly_.leading().is_one())
        throw std::invalid_argument("AlgebraicReal: minimal polynomial must be monic");
    if (!up_gcd(minpoly_, minpoly_.derivative()).is_constant())
        throw std::invalid_argument("AlgebraicReal: minimal polynomial must be square-free");
    if (count_real_roots_in(minpoly_, iso_) != 1)
        throw std::invalid_argument("AlgebraicReal: isolator does not isolate one real root");
}

std::vector<AlgebraicReal> AlgebraicReal::real_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("real_roots: zero polynomial");
    std::vector<AlgebraicReal> out;
    if (p.degree() < 1) return out;
    const UPoly sf = up_squarefree(p);
    const std::vector<UPoly> factors = factor_squarefree(sf);
    for (const Interval& iv : isolate_real_roots(sf)) {
        const UPoly* owner = nullptr;
        for (const UPoly& f : factors) {
            if (count_real_roots_in(f, iv) == 1) {
                owner = &f;
                break;
            }
        }
        assert(owner != nullptr);
        out.push_back(AlgebraicReal(*owner, iv));
    }
    return out;
}

Rational AlgebraicReal::rational_value() const {
    if (!is_rational()) throw std::domain_error("AlgebraicReal: not rational");
    return -minpoly_.coeff(0);
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
    if (width.sign() <= 0) throw std::invalid_argument("refined: width must be positive");
    if (is_rational()) {
        AlgebraicReal a = *this;
        a.iso_ = Interval(rational_value());
        return a;
    }
    Rational lo = iso_.lo();
    Rational hi = iso_.hi();
    // The minimal polynomial is irreducible of degree >= 2, so it has no
    // rational roots and the sign test at rational midpoints never vanishes.
    int sign_lo = minpoly_.eval(lo).sign();
    assert(sign_lo != 0);
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / Rational(2);
        const int sign_mid = minpoly_.eval(mid).sign();
        assert(sign_mid != 0);
        if (sign_mid == sign_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    AlgebraicReal a = *this;
    a.iso_ = Interval(lo, hi);
    return a;
}

int AlgebraicReal::sign_of(const UPoly& p) const {
    if (p.is_zero()) return 0;
    const UPoly r = UPoly::divmod(p, minpoly_).second;
    if (r.is_zero()) return 0;
    // r(alpha) != 0 because deg r < deg minpoly and minpoly is irreducible.
    Rational width = iso_.width();
    AlgebraicReal cur = *this;
    while (true) {
        const int s = r.eval(cur.iso_).sign();
        if (s != 0) return s;
        width = (width.is_zero() ? Rational(1) : width) / Rational(4);
        cur = refined(width);
    }
}

bool AlgebraicReal::equals(const AlgebraicReal& o) const {
    if (minpoly_ != o.minpoly_) return false;
    Interval common;
    if (!Interval::intersect(iso_, o.iso_, common)) return false;
    return count_real_roots_in(minpoly_, common) == 1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (equals(o)) return 0;
    AlgebraicReal a = *this;
    AlgebraicReal b = o;
    Rational width = std::max(a.iso_.width(), b.iso_.width());
    while (true) {
        if (a.iso_.hi() < b.iso_.lo()) return -1;
        if (b.iso_.hi() < a.iso_.lo()) return 1;
        width = (width.is_zero() ? Rational(1) : width) / Rational(4);
        a = a.refined(width);
        b = b.refined(width);
    }
}

double AlgebraicReal::approx() const {
    const Rational eps(1, 1152921504606846976L);  // 2^-60
    const AlgebraicReal fine = refined(eps);
    return fine.iso_.midpoint().to_double();
}

std::string AlgebraicReal::str() const {
    if (is_rational()) return rational_value().str();
    std::ostringstream os;
    os << "root of " << minpoly_.str() << " in [" << iso_.lo() << ", " << iso_.hi() << "]";
    return os.str();
}

namespace {

// Builds the algebraic image of `src` under a map whose action on minimal
// polynomials is `poly_image` (roots of poly_image include the image value)
// and whose action on isolators is `interval_image`. Refines src until the
// image interval isolates a single root.
AlgebraicReal transformed_value(const AlgebraicReal& src, const UPoly& poly_image,
                                const std::function<Interval(const Interval&)>& interval_image) {
    const UPoly sf = up_squarefree(poly_image);
    const std::vector<UPoly> factors = factor_squarefree(sf);
    AlgebraicReal cur = src;
    Rational width = src.isolator().width();
    while (true) {
        const Interval image = interval_image(cur.isolator());
        if (count_real_roots_in(sf, image) == 1) {
            for (const UPoly& f : factors) {
                if (count_real_roots_in(f, image) == 1) return AlgebraicReal(f, image);
            }
            assert(false);
        }
        width = (width.is_zero() ? Rational(1) : width) / Rational(4);
        cur = cur.refined(width);
    }
}

}  // namespace

AlgebraicReal AlgebraicReal::square() const {
    if (is_rational()) {
        const Rational r = rational_value();
        return from_rational(r * r);
    }
    return transformed_value(*this, squared_roots_poly(minpoly_),
                             [](const Interval& iv) { return iv.square(); });
}

AlgebraicReal AlgebraicReal::half_minus_square() const {
    if (is_rational()) {
        const Rational r = rational_value();
        return from_rational(Rational(1, 2) - r * r);
    }
    const UPoly image = squared_roots_poly(minpoly_).compose_linear(Rational(1, 2), Rational(-1));
    return transformed_value(*this, image, [](const Interval& iv) {
        return Interval(Rational(1, 2)) - iv.square();
    });
}

int root_multiplicity(const UPoly& p, const AlgebraicReal& alpha) {
    return up_factor_multiplicity(p, alpha.minpoly());
}

}  // namespace clifford
