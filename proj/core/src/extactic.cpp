#include "clifford/extactic.hpp"

#include <cassert>

#include "clifford/torus.hpp"

namespace clifford {

MPoly iterated_lie(const VectorField& x, const MPoly& v, int j) {
    if (j < 0) throw std::invalid_argument("iterated_lie: negative order");
    MPoly cur = v;
    for (int i = 0; i < j; ++i) cur = lie_derivative(x, cur);
    return cur;
}

namespace {

// Coefficient matrix of the basis over the union of occurring monomials,
// reduced with exact Gaussian elimination. Returns the row echelon form of
// [basis | target] and the rank of the basis block.
struct SpanSystem {
    std::vector<std::vector<Rational>> rows;  // one row per monomial
    size_t basis_cols;
};

SpanSystem build_system(const std::vector<MPoly>& basis, const MPoly* target) {
    std::map<Monomial, size_t, GrlexDescending> index;
    auto note = [&index](const MPoly& p) {
        for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
    };
    for (const auto& v : basis) note(v);
    if (target) note(*target);
    size_t n = 0;
    for (auto& [m, i] : index) i = n++;

    const size_t cols = basis.size() + (target ? 1 : 0);
    SpanSystem sys{std::vector<std::vector<Rational>>(n, std::vector<Rational>(cols, Rational(0))),
                   basis.size()};
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [m, c] : basis[j].terms()) sys.rows[index.at(m)][j] = c;
    if (target)
        for (const auto& [m, c] : target->terms()) sys.rows[index.at(m)][basis.size()] = c;
    return sys;
}

// In-place reduction; returns pivot column per eliminated row.
std::vector<size_t> eliminate(std::vector<std::vector<Rational>>& rows, size_t limit_cols) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < limit_cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        const Rational inv = rows[row][col].reciprocal();
        for (auto& v : rows[row]) v *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col].is_zero()) continue;
            const Rational factor = rows[r][col];
            for (size_t c2 = 0; c2 < rows[r].size(); ++c2)
                rows[r][c2] -= factor * rows[row][c2];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> express_in_span(const std::vector<MPoly>& basis,
                                                     const MPoly& target) {
    if (basis.empty()) {
        if (target.is_zero()) return std::vector<Rational>{};
        return std::nullopt;
    }
    SpanSystem sys = build_system(basis, &target);
    const std::vector<size_t> pivots = eliminate(sys.rows, sys.basis_cols);
    // Inconsistent iff some row is (0 ... 0 | nonzero).
    for (const auto& r : sys.rows) {
        bool zero_lhs = true;
        for (size_t j = 0; j < sys.basis_cols; ++j)
            if (!r[j].is_zero()) {
                zero_lhs = false;
                break;
            }
        if (zero_lhs && !r.back().is_zero()) return std::nullopt;
    }
    std::vector<Rational> coeffs(sys.basis_cols, Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) coeffs[pivots[i]] = sys.rows[i].back();
    return coeffs;
}

bool linearly_independent(const std::vector<MPoly>& basis) {
    if (basis.empty()) return true;
    for (const auto& v : basis)
        if (v.is_zero()) return false;
    SpanSystem sys = build_system(basis, nullptr);
    return eliminate(sys.rows, sys.basis_cols).size() == basis.size();
}

namespace {

MPoly det_cofactor(const std::vector<std::vector<MPoly>>& m, std::vector<size_t>& cols, size_t row) {
    if (cols.size() == 1) return m[row][cols[0]];
    MPoly acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const size_t col = cols[k];
        if (m[row][col].is_zero()) continue;
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        const MPoly minor = det_cofactor(m, rest, row + 1);
        const MPoly contrib = m[row][col] * minor;
        acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

MPoly det_bareiss(std::vector<std::vector<MPoly>> m) {
    const size_t n = m.size();
    int sign = 1;
    MPoly prev = MPoly::constant(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MPoly::zero();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                const MPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = MPoly::divide_exact(num, prev);
                assert(q);
                m[i][j] = *q;
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k];
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

MPoly extactic_polynomial(const VectorField& x, const std::vector<MPoly>& basis) {
    const size_t l = basis.size();
    if (l < 2) throw std::invalid_argument("extactic_polynomial: basis must have >= 2 elements");
    std::vector<std::vector<MPoly>> m(l, std::vector<MPoly>(l));
    m[0] = basis;
    for (size_t j = 1; j < l; ++j)
        for (size_t i = 0; i < l; ++i) m[j][i] = lie_derivative(x, m[j - 1][i]);
    if (l <= 5) {
        std::vector<size_t> cols(l);
        for (size_t i = 0; i < l; ++i) cols[i] = i;
        return det_cofactor(m, cols, 0);
    }
    return det_bareiss(std::move(m));
}

int hypersurface_multiplicity(const VectorField& x, const MPoly& h,
                              const std::vector<MPoly>& basis) {
    if (h.is_constant())
        throw std::invalid_argument("hypersurface_multiplicity: constant hypersurface");
    const MPoly e = extactic_polynomial(x, basis);
    if (e.is_zero()) throw ExtacticZeroError();
    int k = 0;
    MPoly cur = e;
    while (auto q = MPoly::divide_exact(cur, h)) {
        cur = *q;
        ++k;
    }
    return k;
}

std::vector<InvariantMember> invariant_members(const VectorField& x,
                                               const std::vector<MPoly>& basis) {
    const MPoly e = extactic_polynomial(x, basis);
    if (e.is_zero()) throw ExtacticZeroError();
    std::vector<InvariantMember> out;
    if (!express_in_span(basis, MPoly::constant(Rational(1)))) return out;
    for (int i = 1; i <= 4; ++i) {
        if (!express_in_span(basis, MPoly::variable(i))) continue;
        for (const auto& hr : hyperplane_roots(e, i)) {
            InvariantMember m{i, hr.value, MPoly::from_upoly(hr.value.minpoly(), i),
                              hr.multiplicity};
            out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace clifford
