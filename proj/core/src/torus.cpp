#include "clifford/torus.hpp"

#include <algorithm>
#include <cassert>

namespace clifford {

UPoly coordinate_root_poly(const MPoly& p, int index) {
    if (index < 1 || index > 4)
        throw std::invalid_argument("coordinate_root_poly: index out of range");
    if (p.is_zero())
        throw std::domain_error("coordinate_root_poly: zero polynomial is degenerate");
    UPoly acc = UPoly::zero("x" + std::to_string(index));
    for (const auto& [mono, coeff_poly] : p.univariate_coefficients(index)) {
        acc = up_gcd(acc, coeff_poly);
        if (!acc.is_zero() && acc.degree() == 0) break;  // gcd already constant
    }
    if (acc.degree() == 0) return UPoly::constant(Rational(1), acc.var());
    return acc.monic();
}

std::vector<HyperplaneRoot> hyperplane_roots(const MPoly& p, int index) {
    const UPoly rp = coordinate_root_poly(p, index);
    std::vector<HyperplaneRoot> out;
    if (rp.degree() < 1) return out;
    for (const auto& root : AlgebraicReal::real_roots(rp)) {
        const MPoly divisor = MPoly::from_upoly(root.minpoly(), index);
        int k = 0;
        MPoly cur = p;
        while (auto q = MPoly::divide_exact(cur, divisor)) {
            cur = *q;
            ++k;
        }
        assert(k >= 1);
        out.push_back(HyperplaneRoot{root, k});
    }
    return out;
}

namespace {

/// Exact test for a^2 + b^2 = 1/2.
bool pairs_on_circle(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (a.is_rational() && b.is_rational()) {
        const Rational ra = a.rational_value();
        const Rational rb = b.rational_value();
        return ra * ra + rb * rb == Rational(1, 2);
    }
    // Resultant screen: some conjugate of a pairs with b.
    const UPoly screen = up_squarefree(circle_resultant(a.minpoly()));
    if (!UPoly::divide_exact(screen, b.minpoly())) return false;
    // Certify the specific pair: a^2 equals 1/2 - b^2 as algebraic numbers.
    return a.square().equals(b.half_minus_square());
}

}  // namespace

std::optional<CirclePoint> CirclePoint::on_circle(AlgebraicReal a, AlgebraicReal b) {
    if (!pairs_on_circle(a, b)) return std::nullopt;
    return CirclePoint{std::move(a), std::move(b)};
}

std::vector<CircleRecord> pair_on_circle(const std::vector<HyperplaneRoot>& as,
                                         const std::vector<HyperplaneRoot>& bs) {
    std::vector<CircleRecord> out;
    for (const auto& a : as) {
        for (const auto& b : bs) {
            if (auto point = CirclePoint::on_circle(a.value, b.value)) {
                out.push_back(CircleRecord{std::move(*point), a.multiplicity, b.multiplicity});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CircleRecord& x, const CircleRecord& y) {
        const int ca = x.point.a.compare(y.point.a);
        if (ca != 0) return ca < 0;
        return x.point.b.compare(y.point.b) < 0;
    });
    return out;
}

namespace {

DetectionReport detect_circles(const VectorField& x, DetectionReport::Kind kind, int comp_a,
                               int var_a, int comp_b, int var_b) {
    const TorusCheck check = torus_cofactors(x);
    if (!check.invariant()) throw NotInvariantError(check.failing());

    DetectionReport report;
    report.kind = kind;

    const MPoly& pa = x.component(comp_a);
    const MPoly& pb = x.component(comp_b);
    if (pa.is_zero() || pb.is_zero()) {
        report.degenerate_component = pa.is_zero() ? comp_a : comp_b;
        report.within_bound = false;
        return report;
    }

    const int min_degree = std::min(pa.total_degree(), pb.total_degree());
    if (min_degree == 3) {
        report.bound = 4;
        report.rule = BoundRule::ExceptionalDegree3;
    } else {
        report.bound = std::max(0, min_degree - 2);
        report.rule = BoundRule::Generic;
    }

    report.records = pair_on_circle(hyperplane_roots(pa, var_a), hyperplane_roots(pb, var_b));
    report.total_multiplicity = 0;
    for (const auto& r : report.records) report.total_multiplicity += r.multiplicity();
    report.within_bound = report.total_multiplicity <= report.bound;
    return report;
}

}  // namespace

DetectionReport find_meridians(const VectorField& x) {
    return detect_circles(x, DetectionReport::Kind::Meridians, 3, 3, 4, 4);
}

DetectionReport find_parallels(const VectorField& x) {
    return detect_circles(x, DetectionReport::Kind::Parallels, 1, 1, 2, 2);
}

std::vector<RationalCirclePoint> rational_circle_points(size_t count) {
    std::vector<RationalCirclePoint> out;
    std::vector<Rational> abs_a, abs_b;
    auto try_add = [&](const Rational& a, const Rational& b) {
        assert(a * a + b * b == Rational(1, 2));
        const Rational aa = a.abs();
        const Rational bb = b.abs();
        for (const auto& v : abs_a)
            if (v == aa) return;
        for (const auto& v : abs_b)
            if (v == bb) return;
        abs_a.push_back(aa);
        abs_b.push_back(bb);
        out.push_back(RationalCirclePoint{a, b});
    };

    try_add(Rational(1, 2), Rational(1, 2));

    // Sweep lines of rational slope s through (1/2, 1/2); the second
    // intersection with the circle is rational:
    //   a = 1/2 - (1+s)/(1+s^2),  b = 1/2 - s(1+s)/(1+s^2).
    for (long height = 2; out.size() < count; ++height) {
        for (long den = 1; den < height && out.size() < count; ++den) {
            const long num = height - den;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), mpz_class(num).get_mpz_t(), mpz_class(den).get_mpz_t());
            if (g != 1) continue;
            for (const int sgn : {-1, +1}) {
                if (out.size() >= count) break;
                const Rational s(sgn * num, den);
                const Rational shift = (Rational(1) + s) / (Rational(1) + s * s);
                const Rational a = Rational(1, 2) - shift;
                const Rational b = Rational(1, 2) - s * shift;
                try_add(a, b);
            }
        }
    }
    return out;
}

VectorField extremal_meridian_field(const std::vector<RationalCirclePoint>& points,
                                    const Rational& k3, const Rational& k4) {
    if (k3.is_zero() || k4.is_zero())
        throw std::invalid_argument("extremal_meridian_field: scale factors must be nonzero");
    for (const auto& p : points) {
        if (p.a * p.a + p.b * p.b != Rational(1, 2))
            throw std::invalid_argument("extremal_meridian_field: point off the circle");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = i + 1; j < points.size(); ++j) {
            const bool identical = points[i].a == points[j].a && points[i].b == points[j].b;
            if (identical) continue;  // deliberate repeat: creates multiplicity
            if (points[i].a == points[j].a || points[i].b == points[j].b)
                throw std::invalid_argument(
                    "extremal_meridian_field: distinct points must differ in both coordinates");
        }
    }
    CliffordParams params;
    params.d = MPoly::constant(k3);
    params.e = MPoly::constant(k4);
    const MPoly x3 = MPoly::variable(3);
    const MPoly x4 = MPoly::variable(4);
    for (const auto& p : points) {
        params.d = params.d * (x3 - MPoly::constant(p.a));
        params.e = params.e * (x4 - MPoly::constant(p.b));
    }
    return clifford_build(params);
}

VectorField exceptional_field(const Rational& k) {
    if (k.is_zero()) throw std::invalid_argument("exceptional_field: k must be nonzero");
    CliffordParams params;
    const Rational two_k = Rational(2) * k;
    params.d = MPoly::variable(3) * two_k;
    params.e = MPoly::variable(4) * (-two_k);
    params.f = MPoly::variable(3) * MPoly::variable(4) * k;
    return clifford_build(params);
}

VectorField hopf_field() {
    CliffordParams params;
    params.c = MPoly::constant(Rational(1));
    params.f = MPoly::constant(Rational(1));
    return clifford_build(params);
}

}  // namespace clifford
