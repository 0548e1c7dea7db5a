#include "clifford/mpoly.hpp"

#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace clifford {

Monomial Monomial::var(int index, int power) {
    if (index < 1 || index > 4) throw std::invalid_argument("Monomial::var: index out of range");
    if (power < 0) throw std::invalid_argument("Monomial::var: negative power");
    Monomial m;
    m.e[static_cast<size_t>(index - 1)] = static_cast<uint16_t>(power);
    return m;
}

MPoly MPoly::constant(const Rational& c) {
    MPoly p;
    if (!c.is_zero()) p.t_.emplace(Monomial{}, c);
    return p;
}

MPoly MPoly::variable(int index) { return term(Monomial::var(index), Rational(1)); }

MPoly MPoly::term(const Monomial& m, const Rational& c) {
    MPoly p;
    if (!c.is_zero()) p.t_.emplace(m, c);
    return p;
}

MPoly MPoly::from_upoly(const UPoly& p, int index) {
    MPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (!p.coeff(i).is_zero()) out.t_.emplace(Monomial::var(index, i), p.coeff(i));
    }
    return out;
}

bool MPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
}

Rational MPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("MPoly::constant_value: not constant");
    return t_.empty() ? Rational(0) : t_.begin()->second;
}

int MPoly::total_degree() const { return t_.empty() ? 0 : t_.begin()->first.total_degree(); }

int MPoly::degree_in(int index) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.e[static_cast<size_t>(index - 1)]));
    return d;
}

const Rational& MPoly::coeff(const Monomial& m) const {
    static const Rational kZero(0);
    auto it = t_.find(m);
    return it == t_.end() ? kZero : it->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c *= s;
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly acc = MPoly::constant(Rational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MPoly MPoly::partial(int index) const {
    if (index < 1 || index > 4) throw std::invalid_argument("MPoly::partial: index out of range");
    const size_t k = static_cast<size_t>(index - 1);
    MPoly r;
    for (const auto& [m, c] : t_) {
        if (m.e[k] == 0) continue;
        Monomial dm = m;
        dm.e[k] = static_cast<uint16_t>(dm.e[k] - 1);
        r.add_term(dm, c * Rational(static_cast<long>(m.e[k])));
    }
    return r;
}

MPoly MPoly::substituted(int index, const Rational& value) const {
    const size_t k = static_cast<size_t>(index - 1);
    MPoly r;
    for (const auto& [m, c] : t_) {
        Monomial sm = m;
        const unsigned p = sm.e[k];
        sm.e[k] = 0;
        r.add_term(sm, c * value.pow(p));
    }
    return r;
}

Rational MPoly::eval(const std::array<Rational, 4>& x) const {
    Rational acc(0);
    for (const auto& [m, c] : t_) {
        Rational v = c;
        for (size_t i = 0; i < 4; ++i) v *= x[i].pow(m.e[i]);
        acc += v;
    }
    return acc;
}

double MPoly::eval_double(const std::array<double, 4>& x) const {
    double sum = 0.0;
    double comp = 0.0;
    for (const auto& [m, c] : t_) {
        double v = c.to_double();
        for (size_t i = 0; i < 4; ++i)
            for (unsigned p = 0; p < m.e[i]; ++p) v *= x[i];
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

std::vector<std::pair<int, MPoly>> MPoly::collect(int index) const {
    const size_t k = static_cast<size_t>(index - 1);
    std::map<int, MPoly> parts;
    for (const auto& [m, c] : t_) {
        Monomial rest = m;
        const int j = rest.e[k];
        rest.e[k] = 0;
        parts[j].add_term(rest, c);
    }
    std::vector<std::pair<int, MPoly>> out;
    out.reserve(parts.size());
    for (auto& [j, p] : parts) out.emplace_back(j, std::move(p));
    return out;
}

std::map<Monomial, UPoly, GrlexDescending> MPoly::univariate_coefficients(int index) const {
    const size_t k = static_cast<size_t>(index - 1);
    const std::string var = "x" + std::to_string(index);
    std::map<Monomial, std::vector<Rational>, GrlexDescending> groups;
    for (const auto& [m, c] : t_) {
        Monomial rest = m;
        const unsigned j = rest.e[k];
        rest.e[k] = 0;
        auto& v = groups[rest];
        if (v.size() <= j) v.resize(j + 1, Rational(0));
        v[j] += c;
    }
    std::map<Monomial, UPoly, GrlexDescending> out;
    for (auto& [m, v] : groups) out.emplace(m, UPoly(std::move(v), var));
    return out;
}

std::optional<UPoly> MPoly::as_univariate(int index) const {
    const size_t k = static_cast<size_t>(index - 1);
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : t_) {
        for (size_t i = 0; i < 4; ++i) {
            if (i != k && m.e[i] != 0) return std::nullopt;
        }
        const unsigned j = m.e[k];
        if (coeffs.size() <= j) coeffs.resize(j + 1, Rational(0));
        coeffs[j] = c;
    }
    return UPoly(std::move(coeffs), "x" + std::to_string(index));
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& p, const MPoly& d) {
    if (d.is_zero()) throw std::domain_error("MPoly::divide_exact: division by zero");
    MPoly q;
    MPoly r = p;
    const auto& dlt = *d.t_.begin();
    while (!r.is_zero()) {
        const auto& rlt = *r.t_.begin();
        if (!dlt.first.divides(rlt.first)) return std::nullopt;
        const Monomial qm = rlt.first / dlt.first;
        const Rational qc = rlt.second / dlt.second;
        q.add_term(qm, qc);
        r = r - d * MPoly::term(qm, qc);
    }
    return q;
}

std::pair<MPoly, MPoly> MPoly::divmod_in_var(const MPoly& p, const MPoly& d, int index) {
    if (d.is_zero()) throw std::domain_error("MPoly::divmod_in_var: division by zero");
    const int dd = d.degree_in(index);
    const auto d_parts = d.collect(index);
    const MPoly& d_lead = d_parts.back().second;
    if (d_parts.back().first != dd || !d_lead.is_constant())
        throw std::invalid_argument("MPoly::divmod_in_var: leading coefficient not constant");
    const Rational lead_inv = d_lead.constant_value().reciprocal();

    MPoly q;
    MPoly r = p;
    while (!r.is_zero() && r.degree_in(index) >= dd) {
        const auto r_parts = r.collect(index);
        const int rd = r_parts.back().first;
        if (rd < dd) break;
        const MPoly factor =
            r_parts.back().second * lead_inv * MPoly::term(Monomial::var(index, rd - dd), Rational(1));
        q = q + factor;
        r = r - factor * d;
    }
    return {q, r};
}

MPoly MPoly::permuted(const std::array<int, 4>& perm) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        Monomial pm;
        for (size_t i = 0; i < 4; ++i)
            pm.e[static_cast<size_t>(perm[i] - 1)] = m.e[i];
        r.add_term(pm, c);
    }
    return r;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_unit()) {
            os << mag.str();
            continue;
        }
        bool printed = false;
        if (!mag.is_one()) {
            os << mag.str();
            printed = true;
        }
        for (int i = 0; i < 4; ++i) {
            if (m.e[static_cast<size_t>(i)] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (m.e[static_cast<size_t>(i)] >= 2) os << "^" << m.e[static_cast<size_t>(i)];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace clifford
