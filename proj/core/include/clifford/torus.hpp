#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifford/algebraic.hpp"
#include "clifford/vector_field.hpp"

namespace clifford {

/// The Clifford torus is not invariant under the field; carries the name of
/// the failing hypersurface ("f", "g" or "f,g").
class NotInvariantError : public std::runtime_error {
public:
    explicit NotInvariantError(std::string surface)
        : std::runtime_error("torus not invariant: hypersurface " + surface + " fails"),
          surface_(std::move(surface)) {}
    const std::string& surface() const { return surface_; }

private:
    std::string surface_;
};

/// Monic univariate polynomial whose real roots are exactly the real a with
/// (x_{index} - a) dividing p: the gcd of the coefficient family obtained by
/// collecting p over the other three variables. Degree 0 (constant 1) when
/// no common root exists. Throws std::domain_error when p is identically
/// zero (every value of x_{index} would qualify).
UPoly coordinate_root_poly(const MPoly& p, int index);

/// A real root a of coordinate_root_poly(p, index) together with the largest
/// k such that minpoly_a(x_{index})^k divides p (full multivariate
/// divisibility).
struct HyperplaneRoot {
    AlgebraicReal value;
    int multiplicity;
};

/// All hyperplane roots of p in x_{index}, sorted ascending; empty when p
/// has no hyperplane factor in that variable. Requires p != 0.
std::vector<HyperplaneRoot> hyperplane_roots(const MPoly& p, int index);

/// Point (a, b) with a^2 + b^2 = 1/2 certified exactly.
struct CirclePoint {
    AlgebraicReal a, b;

    /// Exact membership test; nullopt when a^2 + b^2 != 1/2.
    static std::optional<CirclePoint> on_circle(AlgebraicReal a, AlgebraicReal b);
};

/// Detected invariant circle: k1 and k2 are the hyperplane multiplicities of
/// the two fixed coordinates; the circle multiplicity is min(k1, k2).
struct CircleRecord {
    CirclePoint point;
    int k1 = 0;
    int k2 = 0;

    int multiplicity() const { return std::min(k1, k2); }
};

enum class BoundRule { Generic, ExceptionalDegree3 };

struct DetectionReport {
    enum class Kind { Meridians, Parallels };

    Kind kind = Kind::Meridians;
    std::vector<CircleRecord> records;
    int total_multiplicity = 0;
    int bound = 0;
    BoundRule rule = BoundRule::Generic;
    /// total_multiplicity <= bound; meaningful only when not degenerate.
    bool within_bound = true;
    /// Component index (1..4) that vanishes identically, making the count
    /// undefined (uncountably many invariant hyperplanes).
    std::optional<int> degenerate_component;

    bool degenerate() const { return degenerate_component.has_value(); }
};

/// All pairs (a, b) with a from `as`, b from `bs` and a^2 + b^2 = 1/2
/// exactly. Pairing is screened by the circle resultant of minpoly_a and
/// certified by exact equality of a^2 and 1/2 - b^2 as algebraic numbers.
std::vector<CircleRecord> pair_on_circle(const std::vector<HyperplaneRoot>& as,
                                         const std::vector<HyperplaneRoot>& bs);

/// Invariant meridians of x with multiplicities and the degree bound
/// verdict. Requires the torus to be invariant (NotInvariantError
/// otherwise); a vanishing P3 or P4 yields a degenerate report.
DetectionReport find_meridians(const VectorField& x);

/// Mirror of find_meridians for parallels: (P1, x1) and (P2, x2).
DetectionReport find_parallels(const VectorField& x);

struct RationalCirclePoint {
    Rational a, b;
};

/// Deterministic stream of rational points on a^2 + b^2 = 1/2 from the
/// conic parametrization (lines of rational slope through (1/2, 1/2)),
/// filtered so that all |a| and all |b| are pairwise distinct. Starts
/// (1/2, 1/2), (7/10, 1/10), ...
std::vector<RationalCirclePoint> rational_circle_points(size_t count);

/// Field with exactly the given meridians: D = k3 * prod (x3 - a_i),
/// E = k4 * prod (x4 - b_i), F = 0 and A = B = C = 0. Every point must lie
/// on the circle exactly; repeated points create multiplicity; distinct
/// points must differ in both coordinates. k3, k4 nonzero.
VectorField extremal_meridian_field(const std::vector<RationalCirclePoint>& points,
                                    const Rational& k3, const Rational& k4);

/// The cubic field with the four meridians at (0, ±sqrt(1/2)) and
/// (±sqrt(1/2), 0): built from D = 2k x3, E = -2k x4, F = k x3 x4.
/// Requires k != 0.
VectorField exceptional_field(const Rational& k);

/// The rotation field (-2 x2, 2 x1, -2 x4, 2 x3).
VectorField hopf_field();

}  // namespace clifford
