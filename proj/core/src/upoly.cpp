#include "clifford/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace clifford {

UPoly::UPoly(std::vector<Rational> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
    normalize();
}

void UPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const Rational& c, std::string var) {
    return UPoly({c}, std::move(var));
}

UPoly UPoly::monomial(const Rational& c, int k, std::string var) {
    if (k < 0) throw std::invalid_argument("UPoly::monomial: negative power");
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return UPoly(std::move(v), std::move(var));
}

UPoly UPoly::linear_root(const Rational& r, std::string var) {
    return UPoly({-r, Rational(1)}, std::move(var));
}

const Rational& UPoly::coeff(int i) const {
    static const Rational kZero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& UPoly::leading() const {
    if (c_.empty()) throw std::domain_error("UPoly::leading: zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v), a.var_.empty() ? b.var_ : a.var_);
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly::zero(a.var_);
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v), a.var_);
}

UPoly UPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UPoly::zero(var_);
    UPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly::zero(var_);
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(v), var_);
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Interval UPoly::eval(const Interval& x) const {
    Interval acc{Rational(0)};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Interval(c_[i]);
    return acc;
}

double UPoly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().reciprocal();
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den) {
    if (den.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
    UPoly rem = num;
    if (num.degree() < den.degree()) return {UPoly::zero(num.var_), rem};
    std::vector<Rational> q(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const Rational lead_inv = den.leading().reciprocal();
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const int shift = rem.degree() - den.degree();
        const Rational factor = rem.leading() * lead_inv;
        q[static_cast<size_t>(shift)] = factor;
        // rem -= factor * t^shift * den
        for (int i = 0; i <= den.degree(); ++i) {
            rem.c_[static_cast<size_t>(i + shift)] -= factor * den.c_[static_cast<size_t>(i)];
        }
        rem.normalize();
    }
    return {UPoly(std::move(q), num.var_), rem};
}

std::optional<UPoly> UPoly::divide_exact(const UPoly& num, const UPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

UPoly UPoly::primitive_integer() const {
    if (is_zero()) return *this;
    mpz_class den_lcm(1);
    for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const auto& c : c_) {
        mpz_class scaled = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    const Rational scale(den_lcm, num_gcd);  // positive: preserves signs
    return *this * scale;
}

UPoly UPoly::compose_linear(const Rational& a, const Rational& b) const {
    const UPoly lin({a, b}, var_);
    UPoly acc = UPoly::zero(var_);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + UPoly::constant(c_[i], var_);
    return acc;
}

UPoly up_gcd(const UPoly& p, const UPoly& q) {
    if (p.is_zero() && q.is_zero()) return UPoly::zero(p.var());
    UPoly a = p.primitive_integer();
    UPoly b = q.primitive_integer();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        UPoly r = UPoly::divmod(a, b).second;
        a = b;
        b = r.primitive_integer();
    }
    return a.monic();
}

UPoly up_squarefree(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("up_squarefree: zero polynomial");
    if (p.degree() == 0) return UPoly::constant(Rational(1), p.var());
    const UPoly g = up_gcd(p, p.derivative());
    auto q = UPoly::divide_exact(p, g);
    assert(q);
    return q->monic();
}

int up_factor_multiplicity(const UPoly& p, const UPoly& d) {
    if (p.is_zero()) throw std::domain_error("up_factor_multiplicity: zero polynomial");
    if (d.is_constant()) throw std::invalid_argument("up_factor_multiplicity: constant divisor");
    int k = 0;
    UPoly cur = p;
    while (true) {
        auto q = UPoly::divide_exact(cur, d);
        if (!q) break;
        cur = *q;
        ++k;
    }
    return k;
}

namespace {

int sign_at_pos_inf(const UPoly& p) {
    return p.is_zero() ? 0 : p.leading().sign();
}

int sign_at_neg_inf(const UPoly& p) {
    if (p.is_zero()) return 0;
    return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
}

int count_variations(const std::vector<int>& signs) {
    int n = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++n;
        prev = s;
    }
    return n;
}

}  // namespace

SturmChain::SturmChain(const UPoly& p) {
    UPoly a = p.primitive_integer();
    if (a.is_zero()) {
        chain_.push_back(a);
        return;
    }
    chain_.push_back(a);
    UPoly b = a.derivative().primitive_integer();
    while (!b.is_zero()) {
        chain_.push_back(b);
        UPoly r = -UPoly::divmod(chain_[chain_.size() - 2], b).second;
        b = r.primitive_integer();
    }
}

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(q.eval(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign_at_neg_inf(q));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign_at_pos_inf(q));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    assert(lo <= hi);
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

Rational cauchy_root_bound(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    Rational m(0);
    const Rational lead = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(i).abs() / lead);
    return Rational(1) + m;
}

namespace {

// Bisection isolation of a polynomial with no rational roots: midpoints and
// the Cauchy bound endpoints are never roots, so plain Sturm counts apply.
std::vector<Interval> isolate_no_rational_roots(const UPoly& q) {
    std::vector<Interval> out;
    if (q.degree() < 1) return out;
    const SturmChain chain(q);
    const Rational bound = cauchy_root_bound(q);
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    const int total = chain.count_roots(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        const Rational mid = (s.lo + s.hi) / Rational(2);
        assert(!q.eval(mid).is_zero());
        const int left = chain.count_roots(s.lo, mid);
        const int right = s.count - left;
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
    return out;
}

// Shrinks an isolating interval of q until it excludes every rational in
// `avoid`; the isolated root is irrational so bisection terminates.
Interval exclude_points(const UPoly& q, const SturmChain& chain, Interval iv,
                        const std::vector<Rational>& avoid) {
    auto contains_avoided = [&](const Interval& v) {
        return std::any_of(avoid.begin(), avoid.end(),
                           [&](const Rational& r) { return v.contains(r); });
    };
    while (contains_avoided(iv)) {
        const Rational mid = iv.midpoint();
        if (chain.count_roots(iv.lo(), mid) == 1)
            iv = Interval(iv.lo(), mid);
        else
            iv = Interval(mid, iv.hi());
    }
    return iv;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<Rational> roots;
    UPoly sf = up_squarefree(p).primitive_integer();
    if (sf.degree() < 1) return roots;

    // root at zero
    if (sf.coeff(0).is_zero()) {
        roots.push_back(Rational(0));
        auto q = UPoly::divide_exact(sf, UPoly::monomial(Rational(1), 1, sf.var()));
        sf = q->primitive_integer();
    }

    // Finds one rational root of the current square-free remainder, or
    // nullopt if every remaining root is irrational.
    auto find_one = [](const UPoly& f) -> std::optional<Rational> {
        if (f.degree() < 1) return std::nullopt;
        const SturmChain chain(f);
        const Rational bound = cauchy_root_bound(f);
        // Denominator of any rational root divides the leading coefficient,
        // so a window narrower than 1/(2*lead^2) holds at most one candidate.
        const Rational lead = f.leading().abs();
        const Rational target = Rational(1) / (Rational(2) * lead * lead);

        struct Seg {
            Rational lo, hi;
            int count;
        };
        std::vector<Seg> stack;
        const int total = chain.count_roots(-bound, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            if (s.count == 1 && s.hi - s.lo <= target) {
                const Rational cand = simplest_rational_in(s.lo, s.hi);
                if (f.eval(cand).is_zero()) return cand;
                continue;  // the isolated root is irrational
            }
            const Rational mid = (s.lo + s.hi) / Rational(2);
            if (f.eval(mid).is_zero()) return mid;
            const int left = chain.count_roots(s.lo, mid);
            const int right = s.count - left;
            if (left > 0) stack.push_back({s.lo, mid, left});
            if (right > 0) stack.push_back({mid, s.hi, right});
        }
        return std::nullopt;
    };

    while (auto r = find_one(sf)) {
        roots.push_back(*r);
        auto q = UPoly::divide_exact(sf, UPoly::linear_root(*r, sf.var()));
        assert(q);
        sf = q->primitive_integer();
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Interval> isolate_real_roots(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    const UPoly sf = up_squarefree(p);
    const std::vector<Rational> rr = rational_roots(sf);
    UPoly rest = sf;
    for (const auto& r : rr) {
        auto q = UPoly::divide_exact(rest, UPoly::linear_root(r, rest.var()));
        assert(q);
        rest = *q;
    }
    std::vector<Interval> out;
    out.reserve(rr.size());
    for (const auto& r : rr) out.emplace_back(r);
    if (rest.degree() >= 1) {
        const SturmChain chain(rest);
        for (Interval iv : isolate_no_rational_roots(rest)) {
            out.push_back(exclude_points(rest, chain, iv, rr));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
    return out;
}

int count_real_roots_in(const UPoly& p, const Interval& iv) {
    if (p.is_zero()) throw std::domain_error("count_real_roots_in: zero polynomial");
    const UPoly sf = up_squarefree(p);
    if (iv.is_point()) return sf.eval(iv.lo()).is_zero() ? 1 : 0;
    int n = 0;
    UPoly rest = sf;
    for (const auto& r : rational_roots(sf)) {
        if (iv.contains(r)) ++n;
        auto q = UPoly::divide_exact(rest, UPoly::linear_root(r, rest.var()));
        rest = *q;
    }
    if (rest.degree() >= 1) n += SturmChain(rest).count_roots(iv.lo(), iv.hi());
    return n;
}

namespace {

// All positive divisors of |n| by trial-division factorization.
std::vector<mpz_class> divisors_of(mpz_class n) {
    n = abs(n);
    assert(n != 0);
    std::vector<std::pair<mpz_class, unsigned>> fac;
    mpz_class d(2);
    while (d * d <= n) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) fac.emplace_back(n, 1);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [prime, exp] : fac) {
        const size_t base = divs.size();
        mpz_class pw(1);
        for (unsigned e = 1; e <= exp; ++e) {
            pw *= prime;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return divs;
}

// Lagrange interpolation through integer nodes; nullopt if any coefficient
// is non-integral (integer factors of a primitive polynomial are integral).
std::optional<UPoly> interpolate_integer(const std::vector<long>& xs,
                                         const std::vector<mpz_class>& ys,
                                         const std::string& var) {
    UPoly acc = UPoly::zero(var);
    for (size_t i = 0; i < xs.size(); ++i) {
        UPoly basis = UPoly::constant(Rational(1), var);
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UPoly::linear_root(Rational(xs[j]), var);
            denom *= Rational(xs[i] - xs[j]);
        }
        acc = acc + basis * (Rational(mpz_class(ys[i]), mpz_class(1)) / denom);
    }
    for (const auto& c : acc.coeffs())
        if (!c.is_integer()) return std::nullopt;
    return acc;
}

// One pass of degree-d trial factor search over the integers (Kronecker).
// Returns a monic degree-d factor of q if one exists.
std::optional<UPoly> kronecker_find_factor(const UPoly& q, int d) {
    std::vector<long> xs;
    std::vector<mpz_class> vals;
    long next = 0;
    while (static_cast<int>(xs.size()) < d + 1) {
        const Rational v = q.eval(Rational(next));
        assert(!v.is_zero());  // rational roots were stripped beforehand
        xs.push_back(next);
        vals.push_back(v.num());
        next = (next > 0) ? -next : -next + 1;
    }
    std::vector<std::vector<mpz_class>> choices(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        for (const auto& dv : divisors_of(vals[i])) {
            choices[i].push_back(dv);
            if (i > 0) choices[i].push_back(-dv);  // fix sign at the first node
        }
    }
    std::vector<size_t> idx(xs.size(), 0);
    while (true) {
        std::vector<mpz_class> ys(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) ys[i] = choices[i][idx[i]];
        if (auto cand = interpolate_integer(xs, ys, q.var())) {
            if (cand->degree() == d && UPoly::divide_exact(q, *cand)) return cand->monic();
        }
        size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) return std::nullopt;
    }
}

}  // namespace

std::vector<UPoly> factor_squarefree(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("factor_squarefree: zero polynomial");
    std::vector<UPoly> factors;
    UPoly work = p;
    for (const auto& r : rational_roots(p)) {
        factors.push_back(UPoly::linear_root(r, p.var()));
        auto q = UPoly::divide_exact(work, factors.back());
        assert(q);
        work = *q;
    }
    while (work.degree() >= 2) {
        if (work.degree() <= 3) {
            // no linear factor left, so degree 2 and 3 remainders are irreducible
            factors.push_back(work.monic());
            break;
        }
        const UPoly wI = work.primitive_integer();
        std::optional<UPoly> found;
        for (int d = 2; d <= wI.degree() / 2 && !found; ++d) {
            found = kronecker_find_factor(wI, d);
        }
        if (!found) {
            factors.push_back(work.monic());
            break;
        }
        factors.push_back(*found);
        auto q = UPoly::divide_exact(work, *found);
        assert(q);
        work = *q;
    }
    std::sort(factors.begin(), factors.end(), [](const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        }
        return false;
    });
    return factors;
}

UPoly circle_resultant(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("circle_resultant: zero polynomial");
    const std::string var = "t";
    const int n = p.degree();
    // q(s) = s^2 + (t^2 - 1/2), coefficients in Q[t]
    const UPoly q2 = UPoly::constant(Rational(1), var);
    const UPoly q0 = UPoly({Rational(-1, 2), Rational(0), Rational(1)}, var);
    if (n == 0) return UPoly::constant(p.coeff(0) * p.coeff(0), var);

    const int size = n + 2;
    std::vector<std::vector<UPoly>> m(static_cast<size_t>(size),
                                      std::vector<UPoly>(static_cast<size_t>(size), UPoly::zero(var)));
    // two rows of p coefficients (degree of q in s is 2)
    for (int row = 0; row < 2; ++row)
        for (int k = 0; k <= n; ++k)
            m[static_cast<size_t>(row)][static_cast<size_t>(row + k)] =
                UPoly::constant(p.coeff(n - k), var);
    // n rows of q coefficients
    for (int row = 0; row < n; ++row) {
        m[static_cast<size_t>(2 + row)][static_cast<size_t>(row)] = q2;
        m[static_cast<size_t>(2 + row)][static_cast<size_t>(row + 2)] = q0;
    }

    // Bareiss fraction-free elimination over Q[t]
    int sign = 1;
    UPoly prev = UPoly::constant(Rational(1), var);
    for (int k = 0; k < size - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i) {
                if (!m[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return UPoly::zero(var);
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                UPoly num = m[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                            m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                auto div = UPoly::divide_exact(num, prev);
                assert(div);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = *div;
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = UPoly::zero(var);
        }
        prev = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    UPoly det = m[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    if (sign < 0) det = -det;
    return det;
}

UPoly squared_roots_poly(const UPoly& p) {
    if (p.is_zero()) throw std::domain_error("squared_roots_poly: zero polynomial");
    std::vector<Rational> even, odd;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i % 2 == 0)
            even.push_back(p.coeff(i));
        else
            odd.push_back(p.coeff(i));
    }
    const UPoly e(std::move(even), p.var());
    const UPoly o(std::move(odd), p.var());
    return e * e - UPoly::monomial(Rational(1), 1, p.var()) * o * o;
}

namespace {

mpz_class floor_q(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

mpz_class ceil_q(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return r;
}

// Stern-Brocot descent for 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
    const mpz_class c = ceil_q(lo);
    if (Rational(c, mpz_class(1)) <= hi) return Rational(c, mpz_class(1));
    const mpz_class n = floor_q(lo);
    const Rational nq(n, mpz_class(1));
    const Rational inner =
        simplest_positive((Rational(1) / (hi - nq)), Rational(1) / (lo - nq));
    return nq + inner.reciprocal();
}

}  // namespace

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (lo.sign() > 0) return simplest_positive(lo, hi);
    return -simplest_positive(-hi, -lo);
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag.is_one();
        if (i == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << var_;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace clifford
