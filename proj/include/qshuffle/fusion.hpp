#pragma once

#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/checks.hpp"
#include "qshuffle/element.hpp"

namespace qshuffle {

/// Which correction-factor normalization to use. `corrected` fixes the two
/// places where the displayed factors are inconsistent with the homomorphism
/// property (a y_m/y_{m-1} swap in the n=1 C factor, and per-pair constants
/// when a tensor-factor target algebra uses a d-less degenerate table);
/// `as_printed` evaluates the displays verbatim so the discrepancy is
/// observable and reportable.
enum class FusionVariant { as_printed, corrected };

/// per-component constant patch c_y^{C(L,2)} c_z^{C(Nz,2)} c_yz^{L Nz}
struct FusionPatch {
    Rat cy{1};
    Rat cz{1};
    Rat cyz{1};

    template <Field F>
    F value(int L, int Nz) const {
        F r = F::one();
        r = r * pow_int(F(cy), static_cast<long>(L) * (L - 1) / 2);
        r = r * pow_int(F(cz), static_cast<long>(Nz) * (Nz - 1) / 2);
        r = r * pow_int(F(cyz), static_cast<long>(L) * Nz);
        return r;
    }
};

// ---------------------------------------------------------------------------
// super fusion: Sh0_{m|n} -> Sh0_{m|n-1}(qbar) (x) Sh_1, m >= n+1, n >= 1
// ---------------------------------------------------------------------------

struct SuperFusion {
    AlgebraSignature source;       // (m, n)
    AlgebraSignature target_y;     // (m, n-1)
    ParamPoint<Rat> p;             // source parameters, kappa set
    Rat kappa;                     // q1 = kappa^{-(m-n+1)}
    Rat qbar1, qbar3;
    ParamPoint<Rat> target_y_params;     // (q, q*qbar1, s-transport)
    std::array<Rat, 3> z_triple;         // Sh_1 factor parameters
    ParamPoint<Rat> z_params;            // same triple realized as (q^{-1}, d)
    FusionVariant variant = FusionVariant::corrected;

    /// source parameters are built from the root: q1 := kappa^{-(m-n+1)}, d = q q1
    SuperFusion(const AlgebraSignature& sig, Rat kappa_, Rat q, std::vector<Rat> s,
                FusionVariant v = FusionVariant::corrected)
        : source(sig), target_y(sig.m, sig.n - 1), kappa(std::move(kappa_)), variant(v) {
        if (sig.n < 1 || sig.m < sig.n + 1)
            throw std::invalid_argument("super fusion needs m >= n+1, n >= 1");
        const int m = sig.m, n = sig.n;
        Rat q1 = pow_int(kappa, -(m - n + 1));
        p = ParamPoint<Rat>(q, q * q1, std::move(s));
        p.kappa = kappa;
        qbar1 = q1 * kappa;
        qbar3 = p.q3() / kappa;
        // y-target: q2 preserved, so q_t = q and d_t = q * qbar1
        std::vector<Rat> st;
        for (int i = 1; i <= source.K() - 2; ++i) st.push_back(p.s_at(i));
        st.push_back(p.s_at(source.K() - 1) * p.s_at(source.K()));
        target_y_params = ParamPoint<Rat>(p.q, p.q * qbar1, std::move(st));
        // Sh_1 factor: (q1^{-1} q3^{-(m-n)-1}, q2^{-1}, q3^{m-n})
        z_triple = {p.q1().inv() * pow_int(p.q3(), -(m - n) - 1), p.q2().inv(),
                    pow_int(p.q3(), m - n)};
        z_params = ParamPoint<Rat>(p.q.inv(), p.q.inv() * z_triple[0], {Rat(1)});
    }

    FusionPatch patch() const {
        FusionPatch pa;
        if (variant == FusionVariant::corrected && target_y.n == 0 && target_y.m == 2) {
            Rat dbar = p.q * qbar1;
            pa.cy = dbar * dbar;  // the d-less two-color table drops one dbar per cross pair
        }
        return pa;
    }

    /// specialization of the source variables into q-strings; component
    /// (L, N-L) has y-groups of size L and a z-group of size N-L
    template <Field F>
    VarTable<F> specialize_vars(int L, int N, const VarGroups<F>& y,
                                const std::vector<F>& z) const {
        const int m = source.m, n = source.n, K = source.K();
        const F q1 = F(p.q1()), q3 = F(p.q3()), kap = F(kappa);
        VarTable<F> x;
        x.v.assign(K, std::vector<F>(N, F::zero()));
        for (int a = 0; a < L; ++a) {
            for (int i = 1; i <= K; ++i) {
                if (i <= m) {
                    x.v[i - 1][a] = q1 * pow_int(kap, i) * y[i - 1][a];
                } else if (i <= m + n - 1) {
                    x.v[i - 1][a] = q1 * pow_int(kap, 2 * m - i) * y[i - 1][a];
                } else {
                    x.v[i - 1][a] = q1 * y[K - 2][a];
                }
            }
        }
        for (int b = L; b < N; ++b) {
            const F& zb = z[b - L];
            for (int i = 1; i <= K; ++i) {
                int ii = (i == K) ? 0 : i;
                if (ii <= m - 1) {
                    x.v[i - 1][b] = pow_int(q3, ii - 1) * zb;
                } else {
                    x.v[i - 1][b] = pow_int(q3, 2 * m - ii - 1) * zb;
                }
            }
        }
        return x;
    }

    /// the displayed correction factors A, B, C (n>1 and n=1 variants)
    template <Field F>
    F correction(int L, int N, const VarGroups<F>& y, const std::vector<F>& z) const {
        const int m = source.m, n = source.n;
        const int Kt = source.K() - 1;
        const F q1 = F(p.q1()), q2 = F(p.q2()), q3 = F(p.q3()), d = F(p.d), kap = F(kappa);
        const F one = F::one();
        F A = one;
        for (int i = 0; i <= m - 1; ++i) {
            const auto& yi = y[((i - 1) % Kt + Kt) % Kt];
            const auto& yi1 = y[i];
            for (int a = 0; a < L; ++a)
                for (int b = 0; b < L; ++b)
                    A = A * (yi[a] - yi1[b]) / nonzero(yi[a] - kap * yi1[b]);
        }
        for (int i = m; i <= m + n - 2; ++i) {
            const auto& yi = y[i - 1];
            const auto& yi1 = y[i % Kt];
            for (int a = 0; a < L; ++a)
                for (int b = 0; b < L; ++b)
                    A = A * (yi[a] - yi1[b]) / nonzero(yi[a] - yi1[b] / kap);
        }
        if (n == 1) {
            const auto& ym = y[m - 1];
            for (int a = 0; a < L; ++a)
                for (int b = a + 1; b < L; ++b)
                    A = A * (ym[a] - ym[b]) * (ym[a] - ym[b]) /
                        nonzero((ym[a] - q1 * ym[b]) * (ym[a] - ym[b] / q1)) / d;
        } else {
            const auto& w = y[Kt - 1];
            for (int a = 0; a < L; ++a)
                for (int b = a + 1; b < L; ++b)
                    A = A * (w[a] - q2 * w[b]) * (w[a] - w[b] / q2) /
                        nonzero((w[a] - q1 * w[b]) * (w[a] - w[b] / q1)) / d;
        }
        F B = one;
        for (int a = 0; a < N - L; ++a) {
            for (int b = a + 1; b < N - L; ++b) {
                const F &za = z[a], &zb = z[b];
                B = B * pow_int(d, m - n);
                B = B * pow_int((za - q2 * zb) / nonzero(za - q3 * zb) * (za - zb / q2) /
                                    nonzero(za - zb / q3),
                                m + n - 2);
                B = B * (za - zb) * (za - zb) /
                    nonzero((za - q3 * zb) * (za - zb / q3));
                B = B * (za - zb) * (za - zb) /
                    nonzero((za - pow_int(q3, m - n + 1) * zb) *
                            (za - pow_int(q3, -(m - n + 1)) * zb));
            }
        }
        F C = one;
        for (int i = 1; i <= m - 1; ++i) {
            for (int a = 0; a < L; ++a) {
                for (int b = 0; b < N - L; ++b) {
                    F Y = q1 * pow_int(kap, i) * y[i - 1][a];
                    const F& zb = z[b];
                    C = C * d * (Y - q2 * pow_int(q3, i - 1) * zb) *
                        (Y - pow_int(q3, i - 1) / q2 * zb) /
                        nonzero((Y - pow_int(q3, i) * zb) * (Y - pow_int(q3, i - 2) * zb));
                }
            }
        }
        if (n == 1) {
            const auto& ym = y[m - 1];
            const auto& ym1 = y[(m >= 2 ? m - 2 : m - 1)];
            const bool fix = variant == FusionVariant::corrected;
            for (int a = 0; a < L; ++a) {
                for (int b = 0; b < N - L; ++b) {
                    const F& zb = z[b];
                    F first_den = (fix ? ym[a] : ym1[a]) - pow_int(q3, m - 2) * zb;
                    C = C * (ym[a] - pow_int(q3, m - 2) / q1 * zb) *
                        (ym[a] - pow_int(q3, m - 1) * zb) /
                        nonzero(first_den * (ym[a] - pow_int(q3, m - 1) / q1 * zb));
                    C = C * (ym[a] - q2 * zb) * (ym[a] - zb) /
                        nonzero((ym[a] - zb / q3) * (ym[a] - zb / q1));
                }
            }
        } else {
            for (int a = 0; a < L; ++a) {
                for (int b = 0; b < N - L; ++b) {
                    F Y = q1 * pow_int(kap, m) * y[m - 1][a];
                    const F& zb = z[b];
                    // the repeated q3^{m-2} factor is correct as printed
                    C = C * (Y - pow_int(q3, m - 1) * zb) * (Y - q2 * pow_int(q3, m - 1) * zb) /
                        nonzero((Y - pow_int(q3, m - 2) * zb) * (Y - pow_int(q3, m - 2) * zb)) /
                        d;
                }
            }
            for (int i = m + 1; i <= m + n - 2; ++i) {
                for (int a = 0; a < L; ++a) {
                    for (int b = 0; b < N - L; ++b) {
                        F Y = q1 * pow_int(kap, 2 * m - i) * y[i - 1][a];
                        const F& zb = z[b];
                        F zc = pow_int(q3, 2 * m - i - 1) * zb;
                        C = C * (Y - q2 * zc) * (Y - zc / q2) /
                            nonzero((Y - q3 * zc) * (Y - zc / q3)) / d;
                    }
                }
            }
            const auto& w = y[Kt - 1];
            for (int a = 0; a < L; ++a) {
                for (int b = 0; b < N - L; ++b) {
                    const F& zb = z[b];
                    F zc = pow_int(q3, m - n) * zb;
                    C = C * (w[a] - q2 * zc) * (w[a] - zc / q2) /
                        nonzero((w[a] - q3 * zc) * (w[a] - zc / q1));
                    C = C * (w[a] - q2 * zb) * (w[a] - zb) /
                        nonzero((w[a] - zb / q3) * (w[a] - zb / q1));
                }
            }
        }
        return A * B * C * patch().template value<F>(L, N - L);
    }
};

// ---------------------------------------------------------------------------
// tilde fusion: Sh0_m -> Sh0_{m-1}(qtilde) (x) Sh_1, m >= 2
// ---------------------------------------------------------------------------

struct TildeFusion {
    AlgebraSignature source;    // (m, 0)
    AlgebraSignature target_y;  // (m-1, 0)
    ParamPoint<Rat> p;
    Rat kappa;                  // q1 = kappa^{m-1}
    Rat qt1, qt3;
    ParamPoint<Rat> target_y_params;
    std::array<Rat, 3> z_triple;
    ParamPoint<Rat> z_params;
    FusionVariant variant = FusionVariant::corrected;

    TildeFusion(const AlgebraSignature& sig, Rat kappa_, Rat q, std::vector<Rat> s,
                FusionVariant v = FusionVariant::corrected)
        : source(sig), target_y(sig.m - 1 >= 1 ? sig.m - 1 : 1, 0), kappa(std::move(kappa_)),
          variant(v) {
        if (sig.n != 0 || sig.m < 2) throw std::invalid_argument("tilde fusion needs n=0, m>=2");
        const int m = sig.m;
        Rat q1 = pow_int(kappa, m - 1);
        p = ParamPoint<Rat>(q, q * q1, std::move(s));
        p.kappa = kappa;
        qt1 = q1 * kappa;
        qt3 = p.q3() / kappa;
        // s-transport: s~_1 = (s_2...s_{m-1})^{-1}, s~_i = s_i (2 <= i <= m-2),
        // last entry fixed by prod = 1
        std::vector<Rat> st;
        if (m - 1 >= 1) {
            Rat s1t(1);
            for (int j = 2; j <= m - 1; ++j) s1t = s1t * p.s_at(j);
            st.push_back(s1t.inv());
            for (int i = 2; i <= m - 2; ++i) st.push_back(p.s_at(i));
            if (m - 1 >= 2) {
                Rat prod(1);
                for (const auto& v2 : st) prod = prod * v2;
                st.push_back(prod.inv());
            }
        }
        target_y_params = ParamPoint<Rat>(p.q, p.q * qt1, std::move(st));
        z_triple = {p.q1() * pow_int(p.q3(), -(m - 1)), p.q2(), pow_int(p.q3(), m)};
        z_params = ParamPoint<Rat>(p.q, p.q * z_triple[0], {Rat(1)});
    }

    FusionPatch patch() const {
        FusionPatch pa;
        if (variant != FusionVariant::corrected) return pa;
        if (target_y.m == 2) {
            Rat dt = p.q * qt1;
            pa.cy = dt * dt;
        } else if (target_y.m == 1) {
            pa.cy = p.q.inv();
            pa.cz = (p.d * p.d).inv();
            pa.cyz = pa.cz;
        }
        return pa;
    }

    template <Field F>
    VarTable<F> specialize_vars(int L, int N, const VarGroups<F>& y,
                                const std::vector<F>& z) const {
        const int m = source.m;
        const F q3 = F(p.q3()), kap = F(kappa);
        VarTable<F> x;
        x.v.assign(m, std::vector<F>(N, F::zero()));
        for (int a = 0; a < L; ++a) {
            for (int i = 1; i <= m; ++i) {
                const auto& yi = (i <= m - 1) ? y[i - 1] : y[0];  // y_m = y_1
                x.v[i - 1][a] = pow_int(kap, -(m - i)) * yi[a];
            }
        }
        for (int b = L; b < N; ++b)
            for (int i = 1; i <= m; ++i) x.v[i - 1][b] = pow_int(q3, i - 1) * z[b - L];
        return x;
    }

    /// the displayed product relating the specialization to the image; the
    /// last z-block is taken over unordered pairs (as printed, with ordered
    /// pairs, it is identically zero)
    template <Field F>
    F correction(int L, int N, const VarGroups<F>& y, const std::vector<F>& z) const {
        const int m = source.m;
        const F q1 = F(p.q1()), q2 = F(p.q2()), q3 = F(p.q3()), d = F(p.d), kap = F(kappa);
        F r = F::one();
        const auto& y1 = y[0];
        for (int a = 0; a < L; ++a)
            for (int b = a + 1; b < L; ++b)
                r = r * d * (y1[a] - q2 * y1[b]) * (y1[a] - y1[b] / q2) /
                    nonzero((y1[a] - q1 * y1[b]) * (y1[a] - y1[b] / q1));
        for (int a = 0; a < L; ++a) {
            for (int b = 0; b < L; ++b) {
                for (int i = 1; i <= m - 1; ++i) {
                    const auto& yi1 = (i <= m - 2) ? y[i] : y[0];
                    if (i == m - 1 && m == 2 && a == b) continue;  // identically zero factor
                    r = r * (y[i - 1][a] - yi1[b]) / nonzero(y[i - 1][a] - kap * yi1[b]);
                }
            }
        }
        for (int a = 0; a < N - L; ++a)
            for (int b = a + 1; b < N - L; ++b)
                r = r * pow_int(d * (z[a] - q2 * z[b]) * (z[a] - z[b] / q2) /
                                    nonzero((z[a] - q3 * z[b]) * (z[a] - z[b] / q3)),
                                m - 1);
        for (int a = 0; a < N - L; ++a)
            for (int b = a + 1; b < N - L; ++b)
                r = r * d * (z[a] - z[b]) * (z[a] - z[b]) /
                    nonzero((z[a] - pow_int(q3, m - 1) * z[b]) *
                            (z[a] - pow_int(q3, -(m - 1)) * z[b]));
        for (int a = 0; a < L; ++a) {
            for (int b = 0; b < N - L; ++b) {
                const F& zb = z[b];
                for (int i = 2; i <= m - 1; ++i) {
                    F Y = pow_int(kap, -(m - i)) * y[i - 1][a];
                    r = r * d * (Y - q1 * pow_int(q3, i) * zb) /
                        nonzero(Y - pow_int(q3, i) * zb) *
                        (Y - pow_int(q3, i - 2) / q1 * zb) /
                        nonzero(Y - pow_int(q3, i - 2) * zb);
                }
                const F& Y1 = y1[a];
                r = r * d * d;
                r = r * (Y1 - q1 * q1 * q3 * zb) * (Y1 - zb / q3) /
                    nonzero((Y1 - q1 * q3 * zb) * (Y1 - zb));
                r = r * (Y1 - pow_int(q3, m - 2) / q1 * zb) * (Y1 - q1 * pow_int(q3, m) * zb) /
                    nonzero((Y1 - pow_int(q3, m - 2) * zb) * (Y1 - q1 * pow_int(q3, m - 1) * zb));
            }
        }
        return r * patch().template value<F>(L, N - L);
    }
};

// ---------------------------------------------------------------------------
// pi components, target products, homomorphism check
// ---------------------------------------------------------------------------

/// evaluator on the target side: a joint function of the y-groups and the z group
template <Field F>
using TensorEvaluator = std::function<F(const VarGroups<F>&, const std::vector<F>&)>;

template <class Fusion, Field F>
TensorEvaluator<F> pi_component(const Fusion& fus, const ElemPtr& e, int L,
                                const ParamPoint<F>& pf) {
    const int N = e->degree.counts[0];
    return [fus, e, L, N, pf](const VarGroups<F>& y, const std::vector<F>& z) {
        VarTable<F> x = fus.template specialize_vars<F>(L, N, y, z);
        F corr = fus.template correction<F>(L, N, y, z);
        if (corr.is_zero()) throw DivisionByZero("fusion correction vanished");
        return evaluate<F>(*e, pf, x) / corr;
    };
}

/// shuffle product in the tensor algebra target_y (x) Sh_1: independent
/// per-color partitions of the y's and of the z's, no cross factors
template <Field F>
F tensor_shuffle_value(const AlgebraSignature& sig_y, const ParamPoint<F>& py,
                       const std::array<Rat, 3>& z_triple, const TensorEvaluator<F>& fe,
                       int fy, int fz, const TensorEvaluator<F>& ge, int gy, int gz,
                       const VarGroups<F>& y, const std::vector<F>& z) {
    const int Kt = sig_y.K();
    DegreeVector dFy = DegreeVector::uniform(Kt, fy), dGy = DegreeVector::uniform(Kt, gy);
    auto ysubs = detail::color_subsets(dFy, dGy);
    std::vector<std::vector<int>> zsubs;
    {
        std::vector<int> idx(fz);
        for (int i = 0; i < fz; ++i) idx[i] = i;
        do {
            zsubs.push_back(idx);
        } while (fz > 0 && detail::next_combination(idx, fz + gz));
    }
    auto om1 = [&](const F& a, const F& b) {
        F den = a - b;
        if (den.is_zero()) throw DivisionByZero("Sh_1 structure function at a=b");
        return (a - F(z_triple[0]) * b) * (a - F(z_triple[1]) * b) * (a - F(z_triple[2]) * b) /
               (den * den * den);
    };
    F total = F::zero();
    std::vector<size_t> pick(Kt, 0);
    while (true) {
        std::vector<std::vector<int>> I(Kt), J(Kt);
        for (int i = 0; i < Kt; ++i) {
            I[i] = ysubs[i][pick[i]];
            std::vector<bool> used(fy + gy, false);
            for (int a : I[i]) used[a] = true;
            for (int b = 0; b < fy + gy; ++b)
                if (!used[b]) J[i].push_back(b);
        }
        int sgn = 1;
        if (sig_y.n >= 1)
            sgn = sgn_pair(I[sig_y.m - 1], J[sig_y.m - 1]) * sgn_pair(I[Kt - 1], J[Kt - 1]);
        F wy = F::one();
        for (int i = 1; i <= Kt; ++i)
            for (int j = 1; j <= Kt; ++j)
                for (int a : I[i - 1])
                    for (int b : J[j - 1])
                        wy = wy * omega(sig_y, py, i, j, y[i - 1][a], y[j - 1][b]);
        for (const auto& zi : zsubs) {
            std::vector<bool> zin(fz + gz, false);
            for (int a : zi) zin[a] = true;
            VarGroups<F> yF(Kt), yG(Kt);
            for (int i = 0; i < Kt; ++i) {
                for (int a : I[i]) yF[i].push_back(y[i][a]);
                for (int b : J[i]) yG[i].push_back(y[i][b]);
            }
            std::vector<F> zF, zG;
            for (int a = 0; a < fz + gz; ++a) (zin[a] ? zF : zG).push_back(z[a]);
            F wz = F::one();
            for (int a = 0; a < fz + gz; ++a)
                for (int b = 0; b < fz + gz; ++b)
                    if (zin[a] && !zin[b]) wz = wz * om1(z[a], z[b]);
            F term = fe(yF, zF) * ge(yG, zG) * wy * wz;
            total = (sgn < 0) ? total - term : total + term;
        }
        int i = Kt - 1;
        while (i >= 0 && pick[i] + 1 == ysubs[i].size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    return total;
}

struct HomomorphismReport {
    bool passed = true;
    int cases = 0;
    std::string witness;
};

/// pi_{M+N,L}(F*G) = sum_k pi_{M,k}(F) * pi_{N,L-k}(G), exactly, per L
template <class Fusion>
HomomorphismReport homomorphism_check(const Fusion& fus, const ElemPtr& F, const ElemPtr& G,
                                      Rng& rng, int trials, long bound, int resample_budget) {
    HomomorphismReport rep;
    const int M = F->degree.counts[0];
    const int N = G->degree.counts[0];
    ElemPtr FG = prod(F, G);
    const int Kt = fus.target_y.K();
    ParamPoint<Rat> py = fus.target_y_params;
    for (int L = 0; L <= M + N; ++L) {
        const int Nz = M + N - L;
        for (int t = 0; t < trials; ++t) {
            bool done = false;
            for (int retry = 0; retry < resample_budget && !done; ++retry) {
                try {
                    VarGroups<Rat> y(Kt);
                    for (int i = 0; i < Kt; ++i)
                        for (int a = 0; a < L; ++a) y[i].push_back(random_scalar(rng, bound));
                    std::vector<Rat> z;
                    for (int b = 0; b < Nz; ++b) z.push_back(random_scalar(rng, bound));
                    Rat lhs = pi_component<Fusion, Rat>(fus, FG, L, fus.p)(y, z);
                    Rat rhs(0);
                    for (int k = std::max(0, L - N); k <= std::min(M, L); ++k) {
                        auto piF = pi_component<Fusion, Rat>(fus, F, k, fus.p);
                        auto piG = pi_component<Fusion, Rat>(fus, G, L - k, fus.p);
                        rhs = rhs + tensor_shuffle_value<Rat>(fus.target_y, py, fus.z_triple,
                                                              piF, k, M - k, piG, L - k,
                                                              N - (L - k), y, z);
                    }
                    ++rep.cases;
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "L=" << L << ": pi(F*G) = " << lhs.str() << " but sum pi*pi = "
                           << rhs.str();
                        if (rep.passed) rep.witness = os.str();
                        rep.passed = false;
                    }
                    done = true;
                } catch (const DivisionByZero&) {
                    continue;
                }
            }
            if (!done) {
                rep.passed = false;
                if (rep.witness.empty()) rep.witness = "resample budget exhausted";
            }
        }
    }
    return rep;
}

/// the y-part of a pi-image component as a subject of the y-target algebra,
/// z-variables frozen to given values; target wheel/symmetry checks run on it
template <class Fusion>
CheckSubject pi_image_y_subject(const Fusion& fus, const ElemPtr& e, int L,
                                std::vector<Rat> zfrozen) {
    CheckSubject s;
    s.sig = fus.target_y;
    s.degree = DegreeVector::uniform(fus.target_y.K(), L);
    s.params = fus.target_y_params;
    auto at = pi_component<Fusion, Rat>(fus, e, L, fus.p);
    s.at = [at, zfrozen](const VarTable<Rat>& x) { return at(x.v, zfrozen); };
    ParamPoint<QX> pxq = lift_to_ratfn(fus.p);
    auto at_xi = pi_component<Fusion, QX>(fus, e, L, pxq);
    std::vector<QX> zq;
    for (const auto& v : zfrozen) zq.push_back(QX(v));
    s.at_xi = [at_xi, zq](const VarTable<QX>& x) { return at_xi(x.v, zq); };
    return s;
}

/// the z-part as a subject of the rank-one factor algebra, y frozen
template <class Fusion>
CheckSubject pi_image_z_subject(const Fusion& fus, const ElemPtr& e, int L,
                                VarGroups<Rat> yfrozen) {
    const int N = e->degree.counts[0];
    CheckSubject s;
    s.sig = AlgebraSignature(1, 0);
    s.degree = DegreeVector::uniform(1, N - L);
    s.params = fus.z_params;
    auto at = pi_component<Fusion, Rat>(fus, e, L, fus.p);
    s.at = [at, yfrozen](const VarTable<Rat>& x) { return at(yfrozen, x.v[0]); };
    ParamPoint<QX> pxq = lift_to_ratfn(fus.p);
    auto at_xi = pi_component<Fusion, QX>(fus, e, L, pxq);
    VarGroups<QX> yq(yfrozen.size());
    for (size_t i = 0; i < yfrozen.size(); ++i)
        for (const auto& v : yfrozen[i]) yq[i].push_back(QX(v));
    s.at_xi = [at_xi, yq](const VarTable<QX>& x) { return at_xi(yq, x.v[0]); };
    return s;
}

}  // namespace qshuffle
