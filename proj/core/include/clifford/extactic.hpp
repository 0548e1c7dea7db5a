#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "clifford/algebraic.hpp"
#include "clifford/vector_field.hpp"

namespace clifford {

/// The extactic polynomial of the given field is identically zero, so
/// divisibility multiplicities are undefined.
class ExtacticZeroError : public std::runtime_error {
public:
    ExtacticZeroError() : std::runtime_error("extactic polynomial is identically zero") {}
};

/// j-fold Lie derivative; j = 0 returns v.
MPoly iterated_lie(const VectorField& x, const MPoly& v, int j);

/// Rational coordinates expressing target in the span of the basis, or
/// nullopt when target is outside the span.
std::optional<std::vector<Rational>> express_in_span(const std::vector<MPoly>& basis,
                                                     const MPoly& target);

bool linearly_independent(const std::vector<MPoly>& basis);

/// Determinant of the l x l matrix with rows (X^j(v_1), ..., X^j(v_l)) for
/// j = 0..l-1, exact over the polynomial ring. Cofactor expansion for
/// l <= 5, fraction-free elimination beyond. Requires l >= 2.
MPoly extactic_polynomial(const VectorField& x, const std::vector<MPoly>& basis);

/// Largest k with h^k dividing the extactic polynomial of (x, basis).
/// h must be non-constant; throws ExtacticZeroError when the extactic
/// polynomial vanishes identically.
int hypersurface_multiplicity(const VectorField& x, const MPoly& h,
                              const std::vector<MPoly>& basis);

/// A hyperplane factor x_{var_index} - root of the extactic polynomial,
/// with its divisibility multiplicity. `factor` is the minimal polynomial
/// of the root written in x_{var_index} (conjugate roots appear as separate
/// members sharing the factor).
struct InvariantMember {
    int var_index;
    AlgebraicReal root;
    MPoly factor;
    int multiplicity;
};

/// Degree-one factors of the extactic polynomial lying in the span of the
/// basis. The search covers candidates of the form x_i - a for every
/// variable x_i contained in the span alongside the constants; general
/// linear combinations are not searched. Throws ExtacticZeroError when the
/// extactic polynomial vanishes identically.
std::vector<InvariantMember> invariant_members(const VectorField& x,
                                               const std::vector<MPoly>& basis);

}  // namespace clifford
