#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "clifford/vector_field.hpp"

namespace clifford {

/// Default residual tolerance for invariance checks on the torus; evaluation
/// uses compensated summation, so this is far above the noise floor for the
/// small rational coefficients used in practice.
inline constexpr double kResidualTol = 1e-9;

/// Drift level beyond which an integration is reported as diagnostic
/// failure (step too large or field not invariant).
inline constexpr double kDriftDiagnosticLimit = 1e-3;

/// Angles (theta, phi) parametrizing the torus point
/// (cos(theta)/sqrt2, sin(theta)/sqrt2, cos(phi)/sqrt2, sin(phi)/sqrt2).
struct TorusPoint {
    double theta = 0.0;
    double phi = 0.0;

    std::array<double, 4> embed() const;
};

struct ResidualReport {
    double max_f = 0.0;  // max |Xf| over the sample
    double max_g = 0.0;  // max |Xg|
    int samples = 0;
    uint64_t seed = 0;
};

/// Evaluates the two Lie derivatives at `samples` random torus points.
/// Each point derives its own generator from (seed, index), so results are
/// reproducible independently of evaluation order.
ResidualReport sample_residual(const VectorField& x, int samples, uint64_t seed);

struct DriftReport {
    double max_f = 0.0;  // max |f| along the orbit
    double max_g = 0.0;  // max |g|
    double duration = 0.0;
    double step = 0.0;
    bool step_too_large = false;  // diagnostic, not proof of non-invariance
};

/// Classic fourth-order Runge-Kutta integration from the embedded start
/// point; reports the worst constraint drift along the orbit.
DriftReport rk4_orbit_drift(const VectorField& x, const TorusPoint& start, double duration,
                            double step);

struct ScanHit {
    double angle = 0.0;  // psi with (a, b) = (cos(psi), sin(psi))/sqrt2
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;  // refined minimum of the meridian residual
};

/// Scans candidate meridian positions (a, b) = (cos(psi), sin(psi))/sqrt2
/// over a uniform grid, refining every local minimum of the sampled
/// |P3| + |P4| residual and flagging those that reach (numerical) zero.
/// Requires grid >= 8.
std::vector<ScanHit> meridian_scan(const VectorField& x, int grid);

}  // namespace clifford
