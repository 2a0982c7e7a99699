#pragma once

#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// [n] = (q^n - q^{-n})/(q - q^{-1})
template <Field F>
F qint(const F& q, long n) {
    return (pow_int(q, n) - pow_int(q, -n)) / (q - F::one() / q);
}

template <Field F>
F vandermonde(const std::vector<F>& y) {
    F r = F::one();
    for (size_t a = 0; a < y.size(); ++a)
        for (size_t b = a + 1; b < y.size(); ++b) r = r * (y[a] - y[b]);
    return r;
}

template <Field F>
F product_all(const std::vector<F>& y) {
    F r = F::one();
    for (const auto& v : y) r = r * v;
    return r;
}

template <Field F>
F cross_product(const std::vector<F>& y, const std::vector<F>& z) {
    F r = F::one();
    for (const auto& a : y)
        for (const auto& b : z) r = r * (a - b);
    return r;
}

/// I^c_{M,N}(y,z): the full q-difference operator expanded as a 2^M subset
/// sum, each subset choosing which y_a are shifted by q^{-1} instead of q.
template <Field F>
F eval_Ic(const F& q, long c, const std::vector<F>& y, const std::vector<F>& z) {
    const int M = static_cast<int>(y.size());
    F total = F::zero();
    for (unsigned bits = 0; bits < (1u << M); ++bits) {
        std::vector<F> ys(y);
        int sz = 0;
        for (int a = 0; a < M; ++a) {
            if (bits >> a & 1u) {
                ys[a] = ys[a] / q;
                ++sz;
            } else {
                ys[a] = ys[a] * q;
            }
        }
        F coef = pow_int(q, c * (M - 2 * sz));
        if (sz % 2) coef = -coef;
        F pi = cross_product(ys, z);
        if (pi.is_zero()) throw DivisionByZero("eval_Ic: shifted Pi vanished");
        total = total + coef * vandermonde(ys) / pi;
    }
    F dy = vandermonde(y);
    if (dy.is_zero()) throw DivisionByZero("eval_Ic: coincident y");
    return total / (pow_int(q - F::one() / q, M) * dy);
}

/// the c-independent pieces of the q^c-Laurent expansion of Itilde
template <Field F>
F eval_Itilde_l(const F& q, int M, int N, int l, const std::vector<F>& y,
                const std::vector<F>& z) {
    long e = static_cast<long>(M - l) * (M - l - 1) / 2 - static_cast<long>(l) * (l - 1) / 2;
    F pref = pow_int(q, e);
    F total = F::zero();
    std::vector<int> idx(l);
    for (int i = 0; i < l; ++i) idx[i] = i;
    auto emit = [&]() {
        std::vector<bool> in(M, false);
        for (int i : idx) in[i] = true;
        F t = F::one();
        for (int a = 0; a < M; ++a) {
            if (!in[a]) continue;
            for (int b = 0; b < M; ++b) {
                if (in[b] || a == b) continue;
                F den = y[a] - y[b];
                if (den.is_zero()) throw DivisionByZero("eval_Itilde_l: coincident y");
                t = t * (y[a] / q - q * y[b]) / den;
            }
        }
        for (int a = 0; a < M; ++a) {
            for (int b = 0; b < N; ++b)
                t = t * (in[a] ? q * y[a] - z[b] : y[a] / q - z[b]);
        }
        total = total + t;
    };
    if (l == 0 || l == M) {
        emit();
    } else {
        while (true) {
            emit();
            int i = l - 1;
            while (i >= 0 && idx[i] == M - l + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < l; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return pref * total;
}

/// Itilde^c_{M,N}(y,z) = sum_l (-1)^l q^{(M-2l)c} Itilde_{M,N,l}(y,z);
/// a polynomial in (y,z) of total degree MN.
template <Field F>
F eval_Itilde(const F& q, long c, const std::vector<F>& y, const std::vector<F>& z) {
    const int M = static_cast<int>(y.size());
    const int N = static_cast<int>(z.size());
    F total = F::zero();
    for (int l = 0; l <= M; ++l) {
        F t = pow_int(q, (M - 2 * l) * c) * eval_Itilde_l(q, M, N, l, y, z);
        total = (l % 2) ? total - t : total + t;
    }
    return total;
}

/// prefactor relating the two: Itilde = (q-1/q)^M prod (q y_a - z_b)(y_a/q - z_b) * Ic
template <Field F>
F itilde_prefactor(const F& q, const std::vector<F>& y, const std::vector<F>& z) {
    F r = pow_int(q - F::one() / q, static_cast<long>(y.size()));
    for (const auto& a : y)
        for (const auto& b : z) r = r * (q * a - b) * (a / q - b);
    return r;
}

}  // namespace qshuffle
