#pragma once

#include <optional>
#include <vector>

#include "qshuffle/rational.hpp"
#include "qshuffle/rng.hpp"
#include "qshuffle/unipoly.hpp"

namespace qshuffle {

/// (m,n) with color bookkeeping. Colors are 1-based and reduced mod m+n in
/// one place (off-by-one wheel bugs are the dominant risk); fermionic colors
/// are m and m+n when n >= 1.
struct AlgebraSignature {
    int m = 1;
    int n = 0;

    AlgebraSignature() = default;
    AlgebraSignature(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n < 0 || m == n)
            throw std::invalid_argument("signature requires m >= 1, n >= 0, m != n");
    }

    int K() const { return m + n; }
    /// any integer index -> color in 1..K
    int color(int i) const {
        int k = K();
        int c = (i - 1) % k;
        if (c < 0) c += k;
        return c + 1;
    }
    bool fermionic(int i) const {
        if (n == 0) return false;
        int c = color(i);
        return c == m || c == K();
    }
    bool before_equator(int i) const {
        int c = color(i);
        return 1 <= c && c <= m - 1;
    }
    bool after_equator(int i) const {
        int c = color(i);
        return m + 1 <= c && c <= K() - 1;
    }
    friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
        return a.m == b.m && a.n == b.n;
    }
};

/// Exact parameter point: q, d (q1 = d/q, q2 = q^2, q3 = 1/(qd), so
/// q1 q2 q3 = 1 identically), s_1..s_K with product 1 extended cyclically,
/// and an optional root witness kappa for fusion.
template <Field F>
struct ParamPoint {
    F q;
    F d;
    std::vector<F> s;
    std::optional<F> kappa;

    ParamPoint() : q(F::one()), d(F::one()) {}
    ParamPoint(F q_, F d_, std::vector<F> s_) : q(std::move(q_)), d(std::move(d_)), s(std::move(s_)) {}

    F q1() const { return d / q; }
    F q2() const { return q * q; }
    F q3() const { return F::one() / (q * d); }

    F s_at(int i) const {
        int k = static_cast<int>(s.size());
        int c = (i - 1) % k;
        if (c < 0) c += k;
        return s[c];
    }
    /// bold s_i = s_1 ... s_{i-1}; s_cum(1) = 1; cyclic-safe since prod(s)=1
    F s_cum(int i) const {
        F r = F::one();
        if (i >= 1) {
            for (int j = 1; j < i; ++j) r = r * s_at(j);
        } else {
            for (int j = i; j < 1; ++j) r = r / s_at(j);
        }
        return r;
    }

    template <Field G, class Conv>
    ParamPoint<G> map(Conv&& conv) const {
        ParamPoint<G> r;
        r.q = conv(q);
        r.d = conv(d);
        r.s.reserve(s.size());
        for (const auto& v : s) r.s.push_back(conv(v));
        if (kappa) r.kappa = conv(*kappa);
        return r;
    }
};

/// lift a rational parameter point into the rational-function field
inline ParamPoint<QX> lift_to_ratfn(const ParamPoint<Rat>& p) {
    return p.map<QX>([](const Rat& v) { return QX(v); });
}

/// sample q, d, s_1..s_{K-1}; s_K fixed by prod(s) = 1
inline ParamPoint<Rat> sample_generic_point(const AlgebraSignature& sig, Rng& rng, long bound) {
    ParamPoint<Rat> p;
    p.q = random_scalar(rng, bound);
    p.d = random_scalar(rng, bound);
    Rat prod(1);
    p.s.clear();
    for (int i = 1; i < sig.K(); ++i) {
        Rat si = random_scalar(rng, bound);
        prod = prod * si;
        p.s.push_back(si);
    }
    p.s.push_back(prod.inv());
    return p;
}

template <Field F>
const F& nonzero(const F& v) {
    if (v.is_zero()) throw DivisionByZero("omega denominator vanished");
    return v;
}

/// structure function table, all degenerations included. The m=1 and m=2
/// (n=0) tables carry no d prefactor; the general tables do.
template <Field F>
F omega(const AlgebraSignature& sig, const ParamPoint<F>& p, int i, int j, const F& x, const F& y) {
    const int K = sig.K();
    i = sig.color(i);
    j = sig.color(j);
    const F q1 = p.q1(), q2 = p.q2(), q3 = p.q3();
    if (sig.n == 0) {
        if (sig.m == 1) {
            F dxy = x - y;
            if (dxy.is_zero()) throw DivisionByZero("omega at x=y");
            return (x - q1 * y) * (x - q2 * y) * (x - q3 * y) / (dxy * dxy * dxy);
        }
        if (sig.m == 2) {
            F dxy = x - y;
            if (i == j) {
                if (dxy.is_zero()) throw DivisionByZero("omega at x=y");
                return (x - q2 * y) / dxy;
            }
            if (dxy.is_zero()) throw DivisionByZero("omega at x=y");
            return (x - q1 * y) * (x - q3 * y) / (dxy * dxy);
        }
        if (i == j) return (x - q2 * y) / nonzero(x - y);
        if (j == i % K + 1) return (x - q1 * y) / nonzero(x - y);
        if (i == j % K + 1) return p.d * (x - q3 * y) / nonzero(x - y);
        return F::one();
    }
    if (i == j) {
        if (1 <= i && i <= sig.m - 1) return (x - q2 * y) / nonzero(x - y);
        if (sig.m + 1 <= i && i <= K - 1) return (x - y / q2) / nonzero(x - y);
        return F::one();  // fermionic colors
    }
    if (j == i % K + 1) {  // pair (j-1, j)
        if (j <= sig.m) return (x - q1 * y) / nonzero(x - y);
        return (x - y / q1) / nonzero(x - y);
    }
    if (i == j % K + 1) {  // pair (i, i-1)
        if (i <= sig.m) return p.d * (x - q3 * y) / nonzero(x - y);
        return (x - y / q3) / (nonzero(x - y) * p.d);
    }
    return F::one();
}

}  // namespace qshuffle
