#include "clifford/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace clifford {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kTwoPi = 6.2831853071795864769;

double coefficient_scale(const MPoly& p) {
    double s = 0.0;
    for (const auto& [m, c] : p.terms()) s += std::fabs(c.to_double());
    return s;
}

}  // namespace

std::array<double, 4> TorusPoint::embed() const {
    return {std::cos(theta) * kInvSqrt2, std::sin(theta) * kInvSqrt2, std::cos(phi) * kInvSqrt2,
            std::sin(phi) * kInvSqrt2};
}

ResidualReport sample_residual(const VectorField& x, int samples, uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("sample_residual: need at least one sample");
    const MPoly xf = lie_derivative(x, torus_f());
    const MPoly xg = lie_derivative(x, torus_g());
    ResidualReport rep;
    rep.samples = samples;
    rep.seed = seed;
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 gen(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(i + 1)));
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        const TorusPoint pt{angle(gen), angle(gen)};
        const auto y = pt.embed();
        rep.max_f = std::max(rep.max_f, std::fabs(xf.eval_double(y)));
        rep.max_g = std::max(rep.max_g, std::fabs(xg.eval_double(y)));
    }
    return rep;
}

DriftReport rk4_orbit_drift(const VectorField& x, const TorusPoint& start, double duration,
                            double step) {
    if (step <= 0.0 || duration <= 0.0)
        throw std::invalid_argument("rk4_orbit_drift: duration and step must be positive");
    const MPoly f = torus_f();
    const MPoly g = torus_g();
    auto rhs = [&x](const std::array<double, 4>& y) {
        return std::array<double, 4>{x.p1.eval_double(y), x.p2.eval_double(y),
                                     x.p3.eval_double(y), x.p4.eval_double(y)};
    };
    std::array<double, 4> y = start.embed();
    DriftReport rep;
    rep.duration = duration;
    rep.step = step;
    const long steps = static_cast<long>(std::ceil(duration / step));
    auto record = [&](const std::array<double, 4>& state) {
        rep.max_f = std::max(rep.max_f, std::fabs(f.eval_double(state)));
        rep.max_g = std::max(rep.max_g, std::fabs(g.eval_double(state)));
    };
    record(y);
    for (long n = 0; n < steps; ++n) {
        const auto k1 = rhs(y);
        std::array<double, 4> tmp;
        for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
        const auto k2 = rhs(tmp);
        for (int i = 0; i < 4; ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
        const auto k3 = rhs(tmp);
        for (int i = 0; i < 4; ++i) tmp[i] = y[i] + step * k3[i];
        const auto k4 = rhs(tmp);
        for (int i = 0; i < 4; ++i)
            y[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        record(y);
    }
    rep.step_too_large = std::max(rep.max_f, rep.max_g) > kDriftDiagnosticLimit;
    return rep;
}

std::vector<ScanHit> meridian_scan(const VectorField& x, int grid) {
    if (grid < 8) throw std::invalid_argument("meridian_scan: grid must be >= 8");

    // Sample points along the meridian circle; an odd count avoids hitting
    // only symmetric positions.
    constexpr int kCirclePoints = 17;
    std::array<std::array<double, 2>, kCirclePoints> circle;
    for (int j = 0; j < kCirclePoints; ++j) {
        const double t = kTwoPi * j / kCirclePoints + 0.1;
        circle[static_cast<size_t>(j)] = {std::cos(t) * kInvSqrt2, std::sin(t) * kInvSqrt2};
    }
    auto residual = [&](double psi) {
        const double a = std::cos(psi) * kInvSqrt2;
        const double b = std::sin(psi) * kInvSqrt2;
        double worst = 0.0;
        for (const auto& c : circle) {
            const std::array<double, 4> y{c[0], c[1], a, b};
            worst = std::max(worst,
                             std::fabs(x.p3.eval_double(y)) + std::fabs(x.p4.eval_double(y)));
        }
        return worst;
    };

    std::vector<double> values(static_cast<size_t>(grid));
    for (int i = 0; i < grid; ++i) values[static_cast<size_t>(i)] = residual(kTwoPi * i / grid);

    const double scale = 1.0 + coefficient_scale(x.p3) + coefficient_scale(x.p4);
    const double accept = 1e-7 * scale;

    std::vector<ScanHit> hits;
    const double golden = 0.6180339887498949;
    for (int i = 0; i < grid; ++i) {
        const double here = values[static_cast<size_t>(i)];
        const double prev = values[static_cast<size_t>((i + grid - 1) % grid)];
        const double next = values[static_cast<size_t>((i + 1) % grid)];
        if (here > prev || here > next) continue;  // not a local minimum
        // Golden-section refinement of the local minimum.
        double lo = kTwoPi * (i - 1) / grid;
        double hi = kTwoPi * (i + 1) / grid;
        double m1 = lo + (1.0 - golden) * (hi - lo);
        double m2 = lo + golden * (hi - lo);
        double f1 = residual(m1);
        double f2 = residual(m2);
        while (hi - lo > 1e-11) {
            if (f1 <= f2) {
                hi = m2;
                m2 = m1;
                f2 = f1;
                m1 = lo + (1.0 - golden) * (hi - lo);
                f1 = residual(m1);
            } else {
                lo = m1;
                m1 = m2;
                f1 = f2;
                m2 = lo + golden * (hi - lo);
                f2 = residual(m2);
            }
        }
        const double psi_min = 0.5 * (lo + hi);
        const double fmin = residual(psi_min);
        if (fmin >= accept) continue;
        double angle = std::fmod(psi_min, kTwoPi);
        if (angle < 0.0) angle += kTwoPi;
        ScanHit hit;
        hit.angle = angle;
        hit.a = std::cos(angle) * kInvSqrt2;
        hit.b = std::sin(angle) * kInvSqrt2;
        hit.residual = fmin;
        hits.push_back(hit);
    }

    // Deduplicate hits that refined into the same angle from adjacent cells.
    std::sort(hits.begin(), hits.end(),
              [](const ScanHit& p, const ScanHit& q) { return p.angle < q.angle; });
    std::vector<ScanHit> unique;
    for (const auto& h : hits) {
        if (!unique.empty()) {
            const double gap = h.angle - unique.back().angle;
            if (gap < 1e-6) {
                if (h.residual < unique.back().residual) unique.back() = h;
                continue;
            }
        }
        unique.push_back(h);
    }
    if (unique.size() >= 2) {
        const double wrap = unique.front().angle + kTwoPi - unique.back().angle;
        if (wrap < 1e-6) {
            if (unique.back().residual < unique.front().residual) unique.front() = unique.back();
            unique.pop_back();
        }
    }
    return unique;
}

}  // namespace clifford
