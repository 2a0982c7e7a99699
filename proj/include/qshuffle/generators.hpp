#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qshuffle/ifunc.hpp"
#include "qshuffle/signature.hpp"

namespace qshuffle {

template <Field F>
using VarGroups = std::vector<std::vector<F>>;  // by color, 1-based color i at [i-1]

template <Field F>
const std::vector<F>& group_at(const AlgebraSignature& sig, const VarGroups<F>& x, int i) {
    return x[sig.color(i) - 1];
}

/// eps_N(x; q_i) = prod_{a<b} (x_a - q_i x_b)(x_a - x_b/q_i)/(x_a - x_b)^2
template <Field F>
F eval_eps(const std::vector<F>& xs, const F& qi) {
    F r = F::one();
    for (size_t a = 0; a < xs.size(); ++a) {
        for (size_t b = a + 1; b < xs.size(); ++b) {
            F den = xs[a] - xs[b];
            if (den.is_zero()) throw DivisionByZero("eval_eps at coincident point");
            r = r * (xs[a] - qi * xs[b]) * (xs[a] - xs[b] / qi) / (den * den);
        }
    }
    return r;
}

/// the common denominator prod_i prod_{a,b} (x_{i,a} - x_{i+1,b}); for the
/// one-color bosonic algebra it degenerates to prod_{a<b}(x_a - x_b)^2
template <Field F>
F canonical_denominator(const AlgebraSignature& sig, const VarGroups<F>& x) {
    if (sig.n == 0 && sig.m == 1) {
        F r = F::one();
        const auto& xs = x[0];
        for (size_t a = 0; a < xs.size(); ++a)
            for (size_t b = a + 1; b < xs.size(); ++b) {
                F dd = xs[a] - xs[b];
                r = r * dd * dd;
            }
        return r;
    }
    F r = F::one();
    for (int i = 1; i <= sig.K(); ++i) {
        const auto& xi = x[i - 1];
        const auto& xn = group_at(sig, x, i + 1);
        for (const auto& a : xi)
            for (const auto& b : xn) r = r * (a - b);
    }
    return r;
}

/// P^{m|n}_N, or the starred variant when star is set
template <Field F>
F eval_P(const AlgebraSignature& sig, const ParamPoint<F>& p, const VarGroups<F>& x, bool star) {
    const int m = sig.m, n = sig.n, K = sig.K();
    if (star && n == 0) throw std::invalid_argument("P* needs n >= 1");
    const F q2 = p.q2();
    if (n == 0 && m == 1) return eval_eps(x[0], q2);
    F num = F::one();
    if (!star) {
        int hi = (n >= 1) ? m - 1 : m;
        for (int i = 1; i <= hi; ++i)
            for (const auto& a : x[i - 1])
                for (const auto& b : x[i - 1]) num = num * (a - q2 * b);
    } else {
        for (int i = m + 1; i <= K - 1; ++i)
            for (const auto& a : x[i - 1])
                for (const auto& b : x[i - 1]) num = num * (a - b / q2);
    }
    F den = canonical_denominator(sig, x);
    if (den.is_zero()) throw DivisionByZero("eval_P: pole of the common denominator");
    F r = num / den;
    if (n >= 1) {
        const auto& xf = star ? x[K - 1] : x[m - 1];
        r = r * product_all(xf) * vandermonde(x[m - 1]) * vandermonde(x[K - 1]);
    }
    return r;
}

/// t_i(s) = bold-s_i * xbar_{i-1} / xbar_i
template <Field F>
F eval_t(const AlgebraSignature& sig, const ParamPoint<F>& p, const VarGroups<F>& x, int i) {
    F num = product_all(group_at(sig, x, i - 1));
    F den = product_all(group_at(sig, x, i));
    if (den.is_zero()) throw DivisionByZero("eval_t: xbar_i = 0");
    return p.s_cum(i) * num / den;
}

/// J^c_i(s) = (-bold-s_i d^N)^c Itilde^{c+1}_{N,N}(d x_{i-1}, x_i);
/// the starred variant uses d^{-N} and d^{-1} x_{i-1}
template <Field F>
F eval_J(const AlgebraSignature& sig, const ParamPoint<F>& p, const VarGroups<F>& x, int i,
         long c, bool star) {
    const long N = static_cast<long>(x[0].size());
    std::vector<F> prev = group_at(sig, x, i - 1);
    for (auto& v : prev) v = star ? v / p.d : v * p.d;
    F pref = pow_int(-p.s_cum(i) * pow_int(p.d, star ? -N : N), c);
    return pref * eval_Itilde(p.q, c + 1, prev, group_at(sig, x, i));
}

/// tableau terms of G_{r,N}: a subset {i_1<...<i_p} of the at-most-once
/// colors and multiplicities c on the repeating colors, p + sum c = r
struct TableauTerm {
    std::vector<int> subset;
    std::vector<int> mults;
};

inline std::vector<TableauTerm> tableau_terms(int r, const std::vector<int>& subset_colors,
                                              int mult_count) {
    std::vector<TableauTerm> out;
    const int ns = static_cast<int>(subset_colors.size());
    for (unsigned bits = 0; bits < (1u << ns); ++bits) {
        std::vector<int> sub;
        for (int i = 0; i < ns; ++i)
            if (bits >> i & 1u) sub.push_back(subset_colors[i]);
        int rem = r - static_cast<int>(sub.size());
        if (rem < 0) continue;
        if (mult_count == 0) {
            if (rem == 0) out.push_back({sub, {}});
            continue;
        }
        std::vector<int> cs(mult_count, 0);
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx == mult_count - 1) {
                cs[idx] = left;
                out.push_back({sub, cs});
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cs[idx] = v;
                rec(idx + 1, left - v);
            }
        };
        rec(0, rem);
    }
    return out;
}

/// G^{m|n}_{r,N}(s) (or G* when star): P * sum over tableau terms of
/// t-factors times J-factors
template <Field F>
F eval_G(const AlgebraSignature& sig, const ParamPoint<F>& p, const VarGroups<F>& x, int r,
         bool star) {
    const int m = sig.m, n = sig.n, K = sig.K();
    if (star && n == 0) throw std::invalid_argument("G* needs n >= 1");
    std::vector<int> subset_colors;
    std::vector<int> mult_colors;
    if (!star) {
        for (int i = 1; i <= m; ++i) subset_colors.push_back(i);
        for (int i = m + 1; i <= K; ++i) mult_colors.push_back(i);
    } else {
        for (int i = m + 1; i <= K; ++i) subset_colors.push_back(i);
        for (int i = 1; i <= m; ++i) mult_colors.push_back(i);
    }
    F total = F::zero();
    for (const auto& term : tableau_terms(r, subset_colors, static_cast<int>(mult_colors.size()))) {
        F t = F::one();
        for (int i : term.subset) t = t * eval_t(sig, p, x, i);
        for (size_t k = 0; k < mult_colors.size(); ++k)
            t = t * eval_J(sig, p, x, mult_colors[k], term.mults[k], star);
        total = total + t;
    }
    return eval_P(sig, p, x, star) * total;
}

/// generating series value at exact u via the closed rational-in-u forms:
///   J_i(u;s)  = sum_l (-1)^l q^{N-2l} / (1 - s_i/(q2^l q3^N u)) Itilde_{N,N,l}(d x_{i-1}, x_i)
///   J*_i(u;s) = sum_l (-1)^l q^{N-2l} / (1 - s_i/(q2^l q1^N u)) Itilde_{N,N,l}(x_{i-1}/d, x_i)
template <Field F>
F eval_G_series_at(const AlgebraSignature& sig, const ParamPoint<F>& p, const VarGroups<F>& x,
                   const F& u, bool star) {
    const int m = sig.m, n = sig.n, K = sig.K();
    const long N = static_cast<long>(x[0].size());
    if (star && n == 0) throw std::invalid_argument("G* series needs n >= 1");
    F r = eval_P(sig, p, x, star);
    const F q2 = p.q2();
    const F head = star ? p.q1() : p.q3();
    int t_lo = star ? m + 1 : 1, t_hi = star ? K : m;
    for (int i = t_lo; i <= t_hi; ++i) r = r * (F::one() - eval_t(sig, p, x, i) / u);
    int j_lo = star ? 1 : m + 1, j_hi = star ? m : K;
    for (int i = j_lo; i <= j_hi; ++i) {
        std::vector<F> prev = group_at(sig, x, i - 1);
        for (auto& v : prev) v = star ? v / p.d : v * p.d;
        const auto& cur = group_at(sig, x, i);
        F acc = F::zero();
        for (long l = 0; l <= N; ++l) {
            F den = F::one() - p.s_cum(i) / (pow_int(q2, l) * pow_int(head, N) * u);
            if (den.is_zero()) throw PoleInU("eval_G_series_at: u hits a series pole");
            F t = pow_int(p.q, N - 2 * l) / den *
                  eval_Itilde_l(p.q, static_cast<int>(N), static_cast<int>(N),
                                static_cast<int>(l), prev, cur);
            acc = (l % 2) ? acc - t : acc + t;
        }
        r = r * acc;
    }
    return r;
}

/// truncated expansion of the generating series in w = 1/u up to order wmax;
/// coefficient of w^r equals (-1)^r G_{r,N}
template <Field F>
std::vector<F> eval_G_series_coeffs(const AlgebraSignature& sig, const ParamPoint<F>& p,
                                    const VarGroups<F>& x, int wmax, bool star) {
    const int m = sig.m, K = sig.K();
    const long N = static_cast<long>(x[0].size());
    auto mul_trunc = [&](const std::vector<F>& a, const std::vector<F>& b) {
        std::vector<F> c(wmax + 1, F::zero());
        for (int i = 0; i <= wmax; ++i)
            for (int j = 0; i + j <= wmax; ++j) c[i + j] = c[i + j] + a[i] * b[j];
        return c;
    };
    std::vector<F> acc(wmax + 1, F::zero());
    acc[0] = eval_P(sig, p, x, star);
    const F q2 = p.q2();
    const F head = star ? p.q1() : p.q3();
    int t_lo = star ? m + 1 : 1, t_hi = star ? K : m;
    for (int i = t_lo; i <= t_hi; ++i) {
        std::vector<F> f(wmax + 1, F::zero());
        f[0] = F::one();
        if (wmax >= 1) f[1] = -eval_t(sig, p, x, i);
        acc = mul_trunc(acc, f);
    }
    int j_lo = star ? 1 : m + 1, j_hi = star ? m : K;
    for (int i = j_lo; i <= j_hi; ++i) {
        std::vector<F> prev = group_at(sig, x, i - 1);
        for (auto& v : prev) v = star ? v / p.d : v * p.d;
        const auto& cur = group_at(sig, x, i);
        std::vector<F> f(wmax + 1, F::zero());
        for (long l = 0; l <= N; ++l) {
            F geo = p.s_cum(i) / (pow_int(q2, l) * pow_int(head, N));
            F it = pow_int(p.q, N - 2 * l) *
                   eval_Itilde_l(p.q, static_cast<int>(N), static_cast<int>(N),
                                 static_cast<int>(l), prev, cur);
            if (l % 2) it = -it;
            F g = F::one();
            for (int k = 0; k <= wmax; ++k) {
                f[k] = f[k] + it * g;
                g = g * geo;
            }
        }
        acc = mul_trunc(acc, f);
    }
    return acc;
}

/// dim of the degree-N component of a free polynomial algebra on K
/// generators in each positive degree: [t^N] prod_{v>=1} (1-t^v)^{-K}
inline std::vector<std::uint64_t> dim_R_table(int K, int N) {
    std::vector<std::uint64_t> dp(N + 1, 0);
    dp[0] = 1;
    for (int copy = 0; copy < K; ++copy)
        for (int v = 1; v <= N; ++v)
            for (int t = v; t <= N; ++t) dp[t] += dp[t - v];
    return dp;
}

inline std::uint64_t dim_R(int K, int N) { return dim_R_table(K, N)[N]; }

}  // namespace qshuffle
