#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/checks.hpp"

namespace qshuffle {

/// one scaling direction: 0 <= k_i <= N_i per color
struct ScalingVector {
    std::vector<int> k;
};

inline std::vector<ScalingVector> all_scaling_vectors(const DegreeVector& deg) {
    std::vector<ScalingVector> out;
    std::vector<int> cur(deg.counts.size(), 0);
    while (true) {
        out.push_back({cur});
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[i] == deg.counts[i]) {
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

/// F^k_xi: x_{i,a} -> xi * base for a <= k_i, else base
template <Field F>
VarTable<RatFn<F>> scaled_assignment(const VarTable<F>& base, const ScalingVector& k) {
    VarTable<RatFn<F>> x;
    x.v.resize(base.v.size());
    for (size_t i = 0; i < base.v.size(); ++i) {
        for (size_t a = 0; a < base.v[i].size(); ++a) {
            RatFn<F> v(base.v[i][a]);
            if (static_cast<int>(a) < k.k[i]) v = v * RatFn<F>::xi();
            x.v[i].push_back(v);
        }
    }
    return x;
}

/// the required ratio F^k_inf / F^k_0 = prod s_i^{k_i} * d^{2N(k_m - k_{m+n})}
/// (d-power absent when n = 0)
inline Rat membership_target(const AlgebraSignature& sig, const ParamPoint<Rat>& p,
                             const ScalingVector& k, int N) {
    Rat t(1);
    for (int i = 1; i <= sig.K(); ++i) t = t * pow_int(p.s_at(i), k.k[i - 1]);
    if (sig.n >= 1) {
        long e = 2L * N * (k.k[sig.m - 1] - k.k[sig.K() - 1]);
        t = t * pow_int(p.d, e);
    }
    return t;
}

struct ScalingRecord {
    ScalingVector k;
    bool limit0_exists = false;
    bool limitinf_exists = false;
    bool ratio_ok = false;
    std::string detail;
};

struct MembershipVerdict {
    bool passed = true;
    std::vector<ScalingRecord> failures;
    int checked = 0;
};

/// ratio-of-limits test over every scaling vector at `trials` base points
inline MembershipVerdict membership_check(const CheckSubject& s, Rng& rng, int trials, long bound,
                                          int resample_budget) {
    MembershipVerdict verdict;
    const int N = s.degree.counts.empty() ? 0 : s.degree.counts[0];
    for (const auto& k : all_scaling_vectors(s.degree)) {
        Rat target = membership_target(s.sig, s.params, k, N);
        for (int t = 0; t < trials; ++t) {
            bool done = false;
            for (int retry = 0; retry < resample_budget && !done; ++retry) {
                try {
                    VarTable<Rat> base = VarTable<Rat>::random(s.degree, rng, bound);
                    QX fx = s.at_xi(scaled_assignment(base, k));
                    auto l0 = limit_at_zero(fx);
                    auto li = limit_at_infinity(fx);
                    ++verdict.checked;
                    bool ok = l0 && li && (*li == target * *l0);
                    if (!ok) {
                        ScalingRecord rec;
                        rec.k = k;
                        rec.limit0_exists = l0.has_value();
                        rec.limitinf_exists = li.has_value();
                        rec.ratio_ok = false;
                        std::ostringstream os;
                        os << "k=(";
                        for (size_t i = 0; i < k.k.size(); ++i)
                            os << (i ? "," : "") << k.k[i];
                        os << ") limit0=" << (l0 ? l0->str() : "none")
                           << " limitinf=" << (li ? li->str() : "none")
                           << " target=" << target.str();
                        rec.detail = os.str();
                        verdict.failures.push_back(std::move(rec));
                        verdict.passed = false;
                    }
                    done = true;
                } catch (const DivisionByZero&) {
                    continue;
                }
            }
            if (!done) {
                verdict.passed = false;
                ScalingRecord rec;
                rec.k = k;
                rec.detail = "resample budget exhausted";
                verdict.failures.push_back(std::move(rec));
            }
        }
    }
    return verdict;
}

/// diagnostic for non-uniform degrees: such elements are expected to fail
inline MembershipVerdict nonsquare_degree_probe(const CheckSubject& s, Rng& rng, int trials,
                                                long bound, int resample_budget) {
    return membership_check(s, rng, trials, bound, resample_budget);
}

}  // namespace qshuffle
