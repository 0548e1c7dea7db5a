#include "clifford/vector_field.hpp"

#include <stdexcept>

namespace clifford {

const MPoly& VectorField::component(int index) const {
    switch (index) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        case 4: return p4;
        default: throw std::invalid_argument("VectorField::component: index out of range");
    }
}

int DegreeVector::degree(int index) const {
    switch (index) {
        case 1: return m1;
        case 2: return m2;
        case 3: return m3;
        case 4: return m4;
        default: throw std::invalid_argument("DegreeVector::degree: index out of range");
    }
}

bool DegreeVector::is_zero(int index) const {
    switch (index) {
        case 1: return zero1;
        case 2: return zero2;
        case 3: return zero3;
        case 4: return zero4;
        default: throw std::invalid_argument("DegreeVector::is_zero: index out of range");
    }
}

DegreeVector degree_vector(const VectorField& x) {
    DegreeVector d;
    d.m1 = x.p1.total_degree();
    d.m2 = x.p2.total_degree();
    d.m3 = x.p3.total_degree();
    d.m4 = x.p4.total_degree();
    d.zero1 = x.p1.is_zero();
    d.zero2 = x.p2.is_zero();
    d.zero3 = x.p3.is_zero();
    d.zero4 = x.p4.is_zero();
    return d;
}

MPoly torus_f() {
    return MPoly::term(Monomial::var(1, 2), Rational(1)) +
           MPoly::term(Monomial::var(2, 2), Rational(1)) + MPoly::constant(Rational(-1, 2));
}

MPoly torus_g() {
    return MPoly::term(Monomial::var(3, 2), Rational(1)) +
           MPoly::term(Monomial::var(4, 2), Rational(1)) + MPoly::constant(Rational(-1, 2));
}

MPoly lie_derivative(const VectorField& x, const MPoly& h) {
    return x.p1 * h.partial(1) + x.p2 * h.partial(2) + x.p3 * h.partial(3) + x.p4 * h.partial(4);
}

std::optional<MPoly> invariance_cofactor(const VectorField& x, const MPoly& h) {
    if (h.is_constant()) throw std::invalid_argument("invariance_cofactor: constant hypersurface");
    return MPoly::divide_exact(lie_derivative(x, h), h);
}

std::string TorusCheck::failing() const {
    if (invariant()) return "";
    if (!f_cofactor && !g_cofactor) return "f,g";
    return f_cofactor ? "g" : "f";
}

TorusCheck torus_cofactors(const VectorField& x) {
    TorusCheck c;
    c.f_cofactor = invariance_cofactor(x, torus_f());
    c.g_cofactor = invariance_cofactor(x, torus_g());
    return c;
}

VectorField clifford_build(const CliffordParams& params) {
    const MPoly f = torus_f();
    const MPoly g = torus_g();
    const MPoly x1 = MPoly::variable(1);
    const MPoly x2 = MPoly::variable(2);
    const MPoly x3 = MPoly::variable(3);
    const MPoly x4 = MPoly::variable(4);
    const Rational two(2);
    VectorField out;
    out.p1 = params.a * f - params.c * x2 * two;
    out.p2 = params.b * f + params.c * x1 * two;
    out.p3 = params.d * g - params.f * x4 * two;
    out.p4 = params.e * g + params.f * x3 * two;
    return out;
}

namespace {

// Recovers one block (A, B, C) from (P1, P2) against f, gauge-fixed so that
// C has degree <= 1 in the named variable. x1 * P2 - x2 * P1 is congruent
// to C modulo f, and f is monic of degree 2 in that variable, so the
// remainder of the division is exactly the canonical C.
std::optional<std::array<MPoly, 3>> decompose_block(const MPoly& pa, const MPoly& pb,
                                                    const MPoly& surface, int va, int vb) {
    const MPoly xa = MPoly::variable(va);
    const MPoly xb = MPoly::variable(vb);
    const Rational two(2);
    const MPoly twist = xa * pb - xb * pa;
    const MPoly c = MPoly::divmod_in_var(twist, surface, va).second;
    const auto a = MPoly::divide_exact(pa + c * xb * two, surface);
    if (!a) return std::nullopt;
    const auto b = MPoly::divide_exact(pb - c * xa * two, surface);
    if (!b) return std::nullopt;
    return std::array<MPoly, 3>{*a, *b, c};
}

}  // namespace

std::optional<CliffordParams> clifford_decompose(const VectorField& x) {
    const auto fg = decompose_block(x.p1, x.p2, torus_f(), 1, 2);
    if (!fg) return std::nullopt;
    const auto gg = decompose_block(x.p3, x.p4, torus_g(), 3, 4);
    if (!gg) return std::nullopt;
    CliffordParams p;
    p.a = (*fg)[0];
    p.b = (*fg)[1];
    p.c = (*fg)[2];
    p.d = (*gg)[0];
    p.e = (*gg)[1];
    p.f = (*gg)[2];
    return p;
}

}  // namespace clifford
