#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifford/rational.hpp"
#include "clifford/upoly.hpp"

namespace clifford {

/// Exponent vector for x1..x4.
struct Monomial {
    std::array<uint16_t, 4> e{0, 0, 0, 0};

    int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
    bool is_unit() const { return total_degree() == 0; }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < 4; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < 4; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
        return m;
    }
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < 4; ++i) m.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
        return m;
    }
    static Monomial var(int index, int power = 1);  // index in 1..4
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Graded lexicographic order with x1 > x2 > x3 > x4, descending, so that
/// map iteration starts at the leading monomial.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.e > b.e;
    }
};

/// Sparse multivariate polynomial in x1..x4 over Rational. Stored
/// coefficients are never zero; the canonical term order is graded lex.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }
    static MPoly constant(const Rational& c);
    static MPoly variable(int index);  // 1..4
    static MPoly term(const Monomial& m, const Rational& c);
    /// Substitutes x_{index} for the formal variable of p.
    static MPoly from_upoly(const UPoly& p, int index);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    /// Requires is_constant(); the zero polynomial yields 0.
    Rational constant_value() const;
    /// Total degree; 0 for the zero polynomial (track zero-ness separately).
    int total_degree() const;
    int degree_in(int index) const;
    size_t term_count() const { return t_.size(); }
    const TermMap& terms() const { return t_; }
    const Rational& coeff(const Monomial& m) const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const Rational& s) const;
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Exact partial derivative with respect to x_{index}.
    MPoly partial(int index) const;

    MPoly substituted(int index, const Rational& value) const;
    Rational eval(const std::array<Rational, 4>& x) const;
    /// Floating evaluation with compensated (Kahan) summation over terms.
    double eval_double(const std::array<double, 4>& x) const;

    /// p = sum_j c_j * x_{index}^j with c_j free of x_{index}; returns the
    /// nonzero (j, c_j) pairs, ascending in j.
    std::vector<std::pair<int, MPoly>> collect(int index) const;

    /// Groups terms by their monomial in the other three variables; each
    /// group is the univariate coefficient polynomial in x_{index}.
    std::map<Monomial, UPoly, GrlexDescending> univariate_coefficients(int index) const;

    /// View as univariate in x_{index}; nullopt if other variables appear.
    std::optional<UPoly> as_univariate(int index) const;

    /// Quotient q with p = q*d exactly, or nullopt. Single-divisor division
    /// with remainder under the canonical term order; zero remainder defines
    /// divisibility.
    static std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& d);

    /// Division by d viewed as a polynomial in x_{index} whose leading
    /// coefficient in that variable is a nonzero rational constant; returns
    /// (quotient, remainder) with deg_{x_index}(remainder) < deg_{x_index}(d).
    static std::pair<MPoly, MPoly> divmod_in_var(const MPoly& p, const MPoly& d, int index);

    /// Applies a permutation of the four variables: new exponent of
    /// x_{perm[i]} is the old exponent of x_{i+1}.
    MPoly permuted(const std::array<int, 4>& perm) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap t_;
};

}  // namespace clifford
