#pragma once

#include <string>
#include <vector>

#include "clifford/rational.hpp"
#include "clifford/upoly.hpp"

namespace clifford {

/// Exact real algebraic number: monic irreducible minimal polynomial over
/// the rationals together with a rational-endpoint isolating interval
/// containing exactly one of its real roots (certified by Sturm count).
/// Values are immutable; refinement returns a new value for the same number.
class AlgebraicReal {
public:
    /// Embeds a rational: minpoly t - q, point isolator [q, q].
    static AlgebraicReal from_rational(const Rational& q);

    /// All distinct real roots of p (p != 0), sorted ascending. Each root
    /// carries the monic irreducible factor of p it annihilates.
    static std::vector<AlgebraicReal> real_roots(const UPoly& p);

    /// Caller-certified constructor: factor must be monic irreducible with
    /// exactly one real root in the isolator. Verified with a Sturm count;
    /// throws std::invalid_argument otherwise.
    AlgebraicReal(UPoly minpoly, Interval isolator);

    const UPoly& minpoly() const { return minpoly_; }
    const Interval& isolator() const { return iso_; }

    bool is_rational() const { return minpoly_.degree() == 1; }
    /// Requires is_rational().
    Rational rational_value() const;

    /// Same number, isolator width <= width (point isolators for rationals).
    AlgebraicReal refined(const Rational& width) const;

    /// Sign of p at this number: 0 iff minpoly divides p.
    int sign_of(const UPoly& p) const;

    bool equals(const AlgebraicReal& o) const;
    /// Total order: -1, 0, +1.
    int compare(const AlgebraicReal& o) const;

    double approx() const;
    std::string str() const;

    /// The number squared, as an exact algebraic number.
    AlgebraicReal square() const;
    /// 1/2 - (this number)^2, as an exact algebraic number.
    AlgebraicReal half_minus_square() const;

private:
    AlgebraicReal() = default;

    UPoly minpoly_;
    Interval iso_;
};

/// Largest k with minpoly(alpha)^k dividing p exactly; 0 when alpha is not
/// a root of p. Requires p != 0.
int root_multiplicity(const UPoly& p, const AlgebraicReal& alpha);

}  // namespace clifford
