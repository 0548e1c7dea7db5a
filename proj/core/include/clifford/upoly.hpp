#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifford/rational.hpp"

namespace clifford {

/// Dense univariate polynomial over Rational, coefficients lowest degree
/// first. Carries a formal variable name used only for printing.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::string var) : var_(std::move(var)) {}
    UPoly(std::vector<Rational> coeffs, std::string var = "t");

    static UPoly zero(std::string var = "t") { return UPoly(std::move(var)); }
    static UPoly constant(const Rational& c, std::string var = "t");
    /// c * t^k
    static UPoly monomial(const Rational& c, int k, std::string var = "t");
    /// t - r
    static UPoly linear_root(const Rational& r, std::string var = "t");

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const std::string& var() const { return var_; }
    void set_var(std::string var) { var_ = std::move(var); }

    bool is_constant() const { return c_.size() <= 1; }

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator*(const Rational& s) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly derivative() const;
    Rational eval(const Rational& x) const;
    Interval eval(const Interval& x) const;
    double eval_double(double x) const;

    UPoly monic() const;

    /// Quotient and remainder over the rationals; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);
    /// Quotient when the division is exact, nullopt otherwise.
    static std::optional<UPoly> divide_exact(const UPoly& num, const UPoly& den);

    /// Integer-coefficient primitive form obtained by the unique positive
    /// rational scaling; sign of the leading coefficient is preserved.
    UPoly primitive_integer() const;

    /// p(a + b*t), exact composition with a linear polynomial.
    UPoly compose_linear(const Rational& a, const Rational& b) const;

    std::string str() const;

private:
    void normalize();

    std::vector<Rational> c_;
    std::string var_ = "t";
};

/// Monic gcd via primitive-part Euclid over the integers; gcd(0,0) is 0.
UPoly up_gcd(const UPoly& p, const UPoly& q);

/// p / gcd(p, p'), monic. Requires p != 0.
UPoly up_squarefree(const UPoly& p);

/// Largest k such that d^k divides p exactly (d non-constant, p != 0).
int up_factor_multiplicity(const UPoly& p, const UPoly& d);

/// Sturm chain of p with sign-variation queries. Used for certified real
/// root counting; all arithmetic stays rational.
class SturmChain {
public:
    explicit SturmChain(const UPoly& p);

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Number of distinct real roots in the half-open interval (lo, hi].
    /// Endpoints must not be roots of the polynomial.
    int count_roots(const Rational& lo, const Rational& hi) const;
    /// Number of distinct real roots on all of R.
    int count_all_roots() const;

private:
    std::vector<UPoly> chain_;
};

/// Number of distinct real roots of p in the closed interval [lo, hi];
/// endpoints may be roots.
int count_real_roots_in(const UPoly& p, const Interval& iv);

/// 1 + max |a_i| / |a_n|: every real root lies in (-bound, bound).
Rational cauchy_root_bound(const UPoly& p);

/// Isolating intervals for the distinct real roots of p (p != 0), sorted
/// ascending. Rational roots come back as point intervals; all other
/// intervals have non-root rational endpoints and contain exactly one root.
std::vector<Interval> isolate_real_roots(const UPoly& p);

/// All rational roots of p (without multiplicity), sorted ascending.
std::vector<Rational> rational_roots(const UPoly& p);

/// Monic irreducible factors of a square-free p, each exactly once,
/// by rational root extraction plus trial factorization over the integers
/// up to half the degree.
std::vector<UPoly> factor_squarefree(const UPoly& p);

/// Res_s(p(s), s^2 + t^2 - 1/2) as a polynomial in t, by Sylvester
/// determinant with fraction-free elimination. Requires p != 0.
/// The roots of the result are exactly the t with p(s0) = 0 for some s0
/// satisfying s0^2 + t^2 = 1/2.
UPoly circle_resultant(const UPoly& p);

/// Polynomial whose roots are the squares of the roots of p (root
/// multiplicities may merge); exact, via the even/odd coefficient split.
UPoly squared_roots_poly(const UPoly& p);

/// The unique rational with smallest denominator (then smallest numerator
/// magnitude) in [lo, hi]; Stern-Brocot descent.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace clifford
