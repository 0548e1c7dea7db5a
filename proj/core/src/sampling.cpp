#include "clifford/sampling.hpp"

namespace clifford {

Sampler Sampler::for_trial(uint64_t seed, uint64_t index) {
    return Sampler(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

uint64_t Sampler::uint(uint64_t bound) {
    std::uniform_int_distribution<uint64_t> d(0, bound - 1);
    return d(rng_);
}

bool Sampler::chance(double p) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(rng_) < p;
}

Rational Sampler::rational(long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng_), den(rng_));
}

Rational Sampler::nonzero_rational(long max_num, long max_den) {
    while (true) {
        Rational q = rational(max_num, max_den);
        if (!q.is_zero()) return q;
    }
}

Monomial Sampler::monomial(int max_degree) {
    Monomial m;
    int budget = static_cast<int>(uint(static_cast<uint64_t>(max_degree) + 1));
    while (budget > 0) {
        const size_t var = uint(4);
        m.e[var] = static_cast<uint16_t>(m.e[var] + 1);
        --budget;
    }
    return m;
}

MPoly Sampler::mpoly(int max_degree, int max_terms) {
    MPoly p;
    const int terms = static_cast<int>(uint(static_cast<uint64_t>(max_terms) + 1));
    for (int i = 0; i < terms; ++i) {
        p = p + MPoly::term(monomial(max_degree), rational());
    }
    return p;
}

MPoly Sampler::nonzero_mpoly(int max_degree, int max_terms) {
    while (true) {
        MPoly p = mpoly(max_degree, max_terms);
        if (!p.is_zero()) return p;
    }
}

UPoly Sampler::upoly(int max_degree, int max_terms, const std::string& var) {
    UPoly p = UPoly::zero(var);
    const int terms = static_cast<int>(uint(static_cast<uint64_t>(max_terms) + 1));
    for (int i = 0; i < terms; ++i) {
        const int deg = static_cast<int>(uint(static_cast<uint64_t>(max_degree) + 1));
        p = p + UPoly::monomial(rational(), deg, var);
    }
    return p;
}

CliffordParams Sampler::params(int max_degree) {
    CliffordParams p;
    p.a = mpoly(max_degree);
    p.b = mpoly(max_degree);
    p.c = mpoly(max_degree);
    p.d = mpoly(max_degree);
    p.e = mpoly(max_degree);
    p.f = mpoly(max_degree);
    return p;
}

VectorField Sampler::nondegenerate_field(int max_degree) {
    while (true) {
        CliffordParams p = params(max_degree);
        if (chance(0.5)) {
            // Plant linear circle-point factors in D and E so detection has
            // real work to do; the field stays within the parametrized family.
            const auto pts = rational_circle_points(2 + uint(3));
            const size_t use = 1 + uint(pts.size());
            MPoly d = MPoly::constant(nonzero_rational(4, 2));
            MPoly e = MPoly::constant(nonzero_rational(4, 2));
            for (size_t i = 0; i < use; ++i) {
                d = d * (MPoly::variable(3) - MPoly::constant(pts[i].a));
                e = e * (MPoly::variable(4) - MPoly::constant(pts[i].b));
            }
            p.d = d;
            p.e = e;
            p.f = MPoly::zero();
            if (chance(0.5)) {
                p.a = MPoly::zero();
                p.b = MPoly::zero();
                p.c = mpoly(std::max(0, max_degree - 1));
            }
        }
        const VectorField x = clifford_build(p);
        if (!x.p1.is_zero() && !x.p2.is_zero() && !x.p3.is_zero() && !x.p4.is_zero()) return x;
    }
}

}  // namespace clifford
