#pragma once

#include <optional>
#include <string>

#include "clifford/mpoly.hpp"

namespace clifford {

/// Polynomial vector field on R^4, components P1..P4.
struct VectorField {
    MPoly p1, p2, p3, p4;

    const MPoly& component(int index) const;
    bool is_zero() const { return p1.is_zero() && p2.is_zero() && p3.is_zero() && p4.is_zero(); }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3 && a.p4 == b.p4;
    }
};

/// Positional total degrees of the components, with explicit flags for
/// identically zero components (whose degree is recorded as 0).
struct DegreeVector {
    int m1 = 0, m2 = 0, m3 = 0, m4 = 0;
    bool zero1 = false, zero2 = false, zero3 = false, zero4 = false;

    int degree(int index) const;
    bool is_zero(int index) const;
    /// Degree of the field: max over components.
    int field_degree() const { return std::max(std::max(m1, m2), std::max(m3, m4)); }
};

DegreeVector degree_vector(const VectorField& x);

/// x1^2 + x2^2 - 1/2, the first defining polynomial of the Clifford torus.
MPoly torus_f();
/// x3^2 + x4^2 - 1/2, the second defining polynomial.
MPoly torus_g();

/// Lie derivative sum_i P_i * dh/dx_i, exact.
MPoly lie_derivative(const VectorField& x, const MPoly& h);

/// Cofactor K with X(h) = K * h exactly, or nullopt when h = 0 is not an
/// invariant hypersurface. h must be non-constant.
std::optional<MPoly> invariance_cofactor(const VectorField& x, const MPoly& h);

/// Invariance certificate for both torus hypersurfaces. A missing cofactor
/// names the failing hypersurface.
struct TorusCheck {
    std::optional<MPoly> f_cofactor;
    std::optional<MPoly> g_cofactor;

    bool invariant() const { return f_cofactor && g_cofactor; }
    /// "f", "g", or "f,g" for the failing side(s); empty when invariant.
    std::string failing() const;
};

TorusCheck torus_cofactors(const VectorField& x);

/// The six free polynomials of the torus-invariant parametrization:
///   P1 = A f - 2 C x2,  P2 = B f + 2 C x1,
///   P3 = D g - 2 F x4,  P4 = E g + 2 F x3.
/// Canonical form: C reduced to x1-degree <= 1 modulo f, and F reduced to
/// x3-degree <= 1 modulo g.
struct CliffordParams {
    MPoly a, b, c, d, e, f;

    friend bool operator==(const CliffordParams& x, const CliffordParams& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.e == y.e && x.f == y.f;
    }
};

/// Builds the field from parameters (need not be canonical).
VectorField clifford_build(const CliffordParams& params);

/// Canonical parameters with clifford_build(result) == x bit-exactly, or
/// nullopt when the torus is not invariant. Idempotent on its own output.
std::optional<CliffordParams> clifford_decompose(const VectorField& x);

}  // namespace clifford
