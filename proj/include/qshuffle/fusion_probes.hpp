#pragma once

#include <set>
#include <vector>

#include "qshuffle/fusion.hpp"

namespace qshuffle {

struct ProbeReport {
    bool passed = true;
    bool skipped = false;
    std::string note;
    std::string constant;  // the extracted proportionality constant

    void record_ratio(const Rat& r) {
        if (constant.empty()) {
            constant = r.str();
        } else if (constant != r.str()) {
            passed = false;
            note = "ratio varies: " + constant + " vs " + r.str();
        }
    }
};

namespace detail {

/// pi(G_N(u))-component evaluated through the closed series form
template <class Fusion>
Rat pi_series_component(const Fusion& fus, int L, int N, const Rat& u, bool star,
                        const VarGroups<Rat>& y, const std::vector<Rat>& z) {
    VarTable<Rat> x = fus.template specialize_vars<Rat>(L, N, y, z);
    Rat corr = fus.template correction<Rat>(L, N, y, z);
    if (corr.is_zero()) throw DivisionByZero("fusion correction vanished");
    return eval_G_series_at(fus.source, fus.p, x.v, u, star) / corr;
}

inline VarGroups<Rat> random_groups(int K, int L, Rng& rng, long bound) {
    VarGroups<Rat> y(K);
    for (int i = 0; i < K; ++i)
        for (int a = 0; a < L; ++a) y[i].push_back(random_scalar(rng, bound));
    return y;
}

}  // namespace detail

/// (N,0)-projection of the generating series for the one-row fusion:
/// pi(G_N(u))_{N,0} = C (1 - q1^N/u) Gtilde_N(q1^{N/(m-1)} s_m u) (x) 1.
/// The s_m twist of the argument is required (checked to be: without it the
/// ratio is point-dependent for s != 1).
inline ProbeReport probe_tilde_top(const TildeFusion& fus, int N, const std::vector<Rat>& us,
                                   Rng& rng, int points, long bound, int budget) {
    ProbeReport rep;
    const int m = fus.source.m;
    for (const Rat& u : us) {
        for (int t = 0; t < points; ++t) {
            bool done = false;
            for (int k = 0; k < budget && !done; ++k) {
                try {
                    auto y = detail::random_groups(fus.target_y.K(), N, rng, bound);
                    Rat lhs = detail::pi_series_component(fus, N, N, u, false, y, {});
                    Rat arg = pow_int(fus.kappa, N) * fus.p.s_at(m) * u;
                    Rat tg = (m - 1 == 1)
                                 ? eval_G_series_at(fus.target_y, fus.target_y_params, y, arg,
                                                    false)
                                 : eval_G_series_at(fus.target_y, fus.target_y_params, y, arg,
                                                    false);
                    Rat pref = Rat(1) - pow_int(fus.p.q1(), N) / u;
                    if ((pref * tg).is_zero()) throw DivisionByZero("degenerate probe point");
                    rep.record_ratio(lhs / (pref * tg));
                    done = true;
                } catch (const DivisionByZero&) {
                    continue;
                } catch (const PoleInU&) {
                    throw;
                }
            }
            if (!done) {
                rep.passed = false;
                rep.note = "resample budget exhausted";
            }
        }
    }
    return rep;
}

/// (0,N)-projection: C' (1 - q3^{(m-1)N}/u) prod_{i=2}^{m} (1 - ss_i q3^{-N}/u)
/// tensor eps_N^{(2)}(z). The cumulative-s index runs 2..m (with 1..m-1 the
/// ratio is point-dependent).
inline ProbeReport probe_tilde_bottom(const TildeFusion& fus, int N, const std::vector<Rat>& us,
                                      Rng& rng, int points, long bound, int budget) {
    ProbeReport rep;
    const int m = fus.source.m;
    VarGroups<Rat> ey(std::max(fus.target_y.K(), 1));
    for (const Rat& u : us) {
        for (int t = 0; t < points; ++t) {
            bool done = false;
            for (int k = 0; k < budget && !done; ++k) {
                try {
                    std::vector<Rat> z;
                    for (int b = 0; b < N; ++b) z.push_back(random_scalar(rng, bound));
                    Rat lhs = detail::pi_series_component(fus, 0, N, u, false, ey, z);
                    Rat pref = Rat(1) - pow_int(fus.p.q3(), (m - 1) * N) / u;
                    for (int i = 2; i <= m; ++i)
                        pref = pref * (Rat(1) - fus.p.s_cum(i) * pow_int(fus.p.q3(), -N) / u);
                    Rat eps = eval_eps(z, fus.z_triple[1]);
                    if ((pref * eps).is_zero()) throw DivisionByZero("degenerate probe point");
                    rep.record_ratio(lhs / (pref * eps));
                    done = true;
                } catch (const DivisionByZero&) {
                    continue;
                }
            }
            if (!done) {
                rep.passed = false;
                rep.note = "resample budget exhausted";
            }
        }
    }
    return rep;
}

/// super (N,0)-projection: pi(G_N(u))_{N,0} (1 - ss_K q1^N/u) = C1
/// Gbar_N(kappa^N u) with the transported s
inline ProbeReport probe_super_top(const SuperFusion& fus, int N, bool star,
                                   const std::vector<Rat>& us, Rng& rng, int points, long bound,
                                   int budget) {
    ProbeReport rep;
    const int K = fus.source.K();
    if (star && fus.target_y.n == 0) {
        rep.skipped = true;
        rep.note = "starred generators are undefined in the purely bosonic target";
        return rep;
    }
    for (const Rat& u : us) {
        for (int t = 0; t < points; ++t) {
            bool done = false;
            for (int k = 0; k < budget && !done; ++k) {
                try {
                    auto y = detail::random_groups(fus.target_y.K(), N, rng, bound);
                    Rat lhs = detail::pi_series_component(fus, N, N, u, star, y, {});
                    Rat W, tg;
                    if (!star) {
                        W = lhs * (Rat(1) - fus.p.s_cum(K) * pow_int(fus.p.q1(), N) / u);
                        tg = eval_G_series_at(fus.target_y, fus.target_y_params, y,
                                              pow_int(fus.kappa, N) * u, false);
                    } else {
                        W = lhs / (Rat(1) - fus.p.s_cum(K) * pow_int(fus.p.q1(), -N) / u);
                        tg = eval_G_series_at(fus.target_y, fus.target_y_params, y,
                                              pow_int(fus.kappa, -N) * u, true);
                    }
                    if (tg.is_zero()) throw DivisionByZero("degenerate probe point");
                    rep.record_ratio(W / tg);
                    done = true;
                } catch (const DivisionByZero&) {
                    continue;
                }
            }
            if (!done) {
                rep.passed = false;
                rep.note = "resample budget exhausted";
            }
        }
    }
    return rep;
}

/// super starred (0,N)-projection: the C4 display, as printed
inline ProbeReport probe_super_bottom_star(const SuperFusion& fus, int N,
                                           const std::vector<Rat>& us, Rng& rng, int points,
                                           long bound, int budget) {
    ProbeReport rep;
    const int m = fus.source.m, K = fus.source.K();
    VarGroups<Rat> ey(fus.target_y.K());
    for (const Rat& u : us) {
        for (int t = 0; t < points; ++t) {
            bool done = false;
            for (int k = 0; k < budget && !done; ++k) {
                try {
                    std::vector<Rat> z;
                    for (int b = 0; b < N; ++b) z.push_back(random_scalar(rng, bound));
                    Rat lhs = detail::pi_series_component(fus, 0, N, u, true, ey, z);
                    Rat num = Rat(1) -
                              fus.p.s_cum(K) * pow_int(fus.p.q3(), (m - fus.source.n + 1) * N) / u;
                    for (int i = m + 1; i <= K - 1; ++i)
                        num = num * (Rat(1) - fus.p.s_cum(i) * pow_int(fus.p.q3(), N) / u);
                    Rat den(1);
                    for (int i = 1; i <= m; ++i)
                        den = den * (Rat(1) - fus.p.s_cum(i) * pow_int(fus.p.q3(), N) / u);
                    Rat eps = eval_eps(z, fus.z_triple[1]);
                    Rat rhs = num / den * eps;
                    if (rhs.is_zero()) throw DivisionByZero("degenerate probe point");
                    rep.record_ratio(lhs / rhs);
                    done = true;
                } catch (const DivisionByZero&) {
                    continue;
                }
            }
            if (!done) {
                rep.passed = false;
                rep.note = "resample budget exhausted";
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// iterated fusion with an exact root tower
// ---------------------------------------------------------------------------

struct IteratedSuper {
    std::vector<SuperFusion> stages;

    /// composed component: Ls[0] >= Ls[1] >= ... picks the y-degree kept at
    /// each stage; zs[j] are the stage-(j+1) split-off variables
    Rat component(const ElemPtr& e, const std::vector<int>& Ls, const VarGroups<Rat>& y,
                  const std::vector<std::vector<Rat>>& zs) const {
        const int depth = static_cast<int>(stages.size());
        VarGroups<Rat> cur = y;
        Rat corr(1);
        for (int j = depth - 1; j >= 0; --j) {
            int L = Ls[j];
            int Nsrc = (j == 0) ? e->degree.counts[0] : Ls[j - 1];
            corr = corr * stages[j].correction<Rat>(L, Nsrc, cur, zs[j]);
            cur = stages[j].specialize_vars<Rat>(L, Nsrc, cur, zs[j]).v;
        }
        VarTable<Rat> x;
        x.v = cur;
        if (corr.is_zero()) throw DivisionByZero("iterated correction vanished");
        return evaluate<Rat>(*e, stages[0].p, x) / corr;
    }
};

/// builds the stage tower; the master root rho realizes every stage's
/// fractional power exactly: q1 := rho^{prod of stage orders}
inline IteratedSuper make_iterated_super(const AlgebraSignature& sig, int depth, const Rat& rho,
                                         const Rat& q, const std::vector<Rat>& s,
                                         FusionVariant variant = FusionVariant::corrected) {
    if (depth < 1 || depth > sig.n) throw std::invalid_argument("iterate depth must be in 1..n");
    const int m = sig.m, n = sig.n;
    long P = 1;
    for (int j = 1; j <= depth; ++j) P *= (m - n + j);
    IteratedSuper it;
    long e_prev = P;  // q1 of the current stage source = rho^{e_prev}
    std::vector<Rat> scur = s;
    for (int j = 1; j <= depth; ++j) {
        const int order = m - (n - j + 1) + 1;  // m - n_src + 1
        if (e_prev % order != 0) throw std::logic_error("root tower exponent not integral");
        Rat kap = pow_int(rho, -(e_prev / order));
        AlgebraSignature src(m, n - j + 1);
        SuperFusion st(src, kap, q, scur, variant);
        if (!it.stages.empty()) {
            // parameter transport consistency between stages
            if (!(st.p.q1() == it.stages.back().qbar1))
                throw std::logic_error("stage q1 does not match previous qbar1");
        }
        scur = st.target_y_params.s;
        e_prev = e_prev - e_prev / order;  // qbar1 = q1 * kappa
        it.stages.push_back(std::move(st));
    }
    return it;
}

}  // namespace qshuffle
