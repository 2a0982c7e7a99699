#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/element.hpp"

namespace qshuffle {

template <Field F>
using Evaluator = std::function<F(const VarTable<F>&)>;

/// Anything the structural checks can probe: an element of a given algebra
/// at fixed parameters, evaluable over Rat and over RatFn in xi.
struct CheckSubject {
    AlgebraSignature sig;
    DegreeVector degree;
    ParamPoint<Rat> params;
    Evaluator<Rat> at;
    Evaluator<QX> at_xi;
};

inline CheckSubject subject_of(const ElemPtr& e, const ParamPoint<Rat>& p) {
    CheckSubject s;
    s.sig = e->sig;
    s.degree = e->degree;
    s.params = p;
    s.at = [e, p](const VarTable<Rat>& x) { return evaluate<Rat>(*e, p, x); };
    ParamPoint<QX> px = lift_to_ratfn(p);
    s.at_xi = [e, px](const VarTable<QX>& x) { return evaluate<QX>(*e, px, x); };
    return s;
}

struct CheckResult {
    bool passed = true;
    int cases = 0;
    std::string witness;  // first failure, human-readable

    void fail(const std::string& w) {
        if (passed) witness = w;
        passed = false;
    }
};

namespace detail {

template <class Fn>
bool with_resampling(int budget, Fn&& fn) {
    for (int k = 0; k < budget; ++k) {
        try {
            fn();
            return true;
        } catch (const DivisionByZero&) {
            continue;
        }
    }
    return false;
}

}  // namespace detail

/// bosonic swaps leave the value fixed; fermionic swaps negate it
inline CheckResult check_symmetry(const CheckSubject& s, Rng& rng, int trials, long bound,
                                  int resample_budget) {
    CheckResult res;
    for (int t = 0; t < trials; ++t) {
        bool ok = detail::with_resampling(resample_budget, [&] {
            VarTable<Rat> x = VarTable<Rat>::random(s.degree, rng, bound);
            Rat base = s.at(x);
            for (int i = 1; i <= s.sig.K(); ++i) {
                int Ni = s.degree.at(i);
                for (int a = 0; a < Ni; ++a) {
                    for (int b = a + 1; b < Ni; ++b) {
                        VarTable<Rat> y = x;
                        std::swap(y.v[i - 1][a], y.v[i - 1][b]);
                        Rat v = s.at(y);
                        Rat want = s.sig.fermionic(i) ? -base : base;
                        ++res.cases;
                        if (v != want) {
                            std::ostringstream os;
                            os << "swap color " << i << " slots " << a + 1 << "," << b + 1
                               << ": got " << v.str() << " expected " << want.str();
                            res.fail(os.str());
                        }
                    }
                }
            }
        });
        if (!ok) res.fail("resample budget exhausted");
    }
    return res;
}

enum class QFactor { One, Q1, Q2, Q3, Q1inv, Q2inv, Q3inv };

inline Rat qfactor_value(const ParamPoint<Rat>& p, QFactor f) {
    switch (f) {
        case QFactor::One: return Rat(1);
        case QFactor::Q1: return p.q1();
        case QFactor::Q2: return p.q2();
        case QFactor::Q3: return p.q3();
        case QFactor::Q1inv: return p.q1().inv();
        case QFactor::Q2inv: return p.q2().inv();
        case QFactor::Q3inv: return p.q3().inv();
    }
    return Rat(1);
}

/// one vanishing condition: a chain of variables, each a fixed multiple of
/// the previous; chain[0].factor is unused (free root)
struct WheelCondition {
    char label;  // 'a'..'f', 'z' for the coincident-fermion zeros
    std::vector<int> colors;
    std::vector<QFactor> factors;
};

/// conditions applicable to the signature; n=0 wraps (a),(b) around all
/// colors cyclically, n>=1 keeps them strictly inside the equators and adds
/// the quartic junction conditions (c),(f) and the trivial fermionic zeros
inline std::vector<WheelCondition> wheel_conditions(const AlgebraSignature& sig) {
    std::vector<WheelCondition> out;
    const int m = sig.m, K = sig.K();
    auto col = [&](int i) { return sig.color(i); };
    if (sig.n == 0) {
        for (int i = 1; i <= m; ++i) {
            out.push_back({'a', {col(i - 1), i, i}, {QFactor::One, QFactor::Q3, QFactor::Q2}});
            out.push_back({'b', {i, i, col(i + 1)}, {QFactor::One, QFactor::Q2, QFactor::Q3}});
        }
        return out;
    }
    for (int i = 1; i <= m - 1; ++i) {
        out.push_back({'a', {col(i - 1), i, i}, {QFactor::One, QFactor::Q3, QFactor::Q2}});
        out.push_back({'b', {i, i, i + 1}, {QFactor::One, QFactor::Q2, QFactor::Q3}});
    }
    out.push_back({'c',
                   {col(m - 1), m, m + 1, m},
                   {QFactor::One, QFactor::Q3, QFactor::Q3inv, QFactor::Q1inv}});
    for (int i = m + 1; i <= K - 1; ++i) {
        out.push_back({'d', {col(i - 1), i, i}, {QFactor::One, QFactor::Q3inv, QFactor::Q2inv}});
        out.push_back({'e', {i, i, col(i + 1)}, {QFactor::One, QFactor::Q2inv, QFactor::Q3inv}});
    }
    out.push_back(
        {'f', {K - 1, K, 1, K}, {QFactor::One, QFactor::Q3inv, QFactor::Q3, QFactor::Q1}});
    out.push_back({'z', {m, m}, {QFactor::One, QFactor::One}});
    out.push_back({'z', {K, K}, {QFactor::One, QFactor::One}});
    return out;
}

namespace detail {

/// all ways to place the chain's variables into slots, same-color entries
/// pairwise distinct
inline void slot_tuples(const WheelCondition& c, const DegreeVector& deg, size_t at,
                        std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (at == c.colors.size()) {
        out.push_back(cur);
        return;
    }
    int color = c.colors[at];
    for (int s = 1; s <= deg.at(color); ++s) {
        bool clash = false;
        for (size_t j = 0; j < at; ++j)
            if (c.colors[j] == color && cur[j] == s) clash = true;
        if (clash) continue;
        cur.push_back(s);
        slot_tuples(c, deg, at + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// numerator-level vanishing on the constrained locus: evaluates
/// (F * Pi)(x(xi)) along the exact path x = locus * (1 + u xi) and asserts
/// the xi->0 limit is exactly 0. The junction conditions at K=3 place the
/// locus inside the polar divisor of Pi, so F alone cannot be evaluated
/// there; F*Pi is a Laurent polynomial and its limit is path-independent.
inline CheckResult check_wheel(const CheckSubject& s, Rng& rng, int trials, long bound,
                               int resample_budget) {
    CheckResult res;
    ParamPoint<QX> px = lift_to_ratfn(s.params);
    for (const auto& cond : wheel_conditions(s.sig)) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        detail::slot_tuples(cond, s.degree, 0, cur, tuples);
        for (const auto& slots : tuples) {
            for (int t = 0; t < trials; ++t) {
                bool ok = detail::with_resampling(resample_budget, [&] {
                    VarTable<Rat> base = VarTable<Rat>::random(s.degree, rng, bound);
                    for (size_t j = 1; j < cond.colors.size(); ++j) {
                        const Rat f = qfactor_value(s.params, cond.factors[j]);
                        base.v[cond.colors[j] - 1][slots[j] - 1] =
                            f * base.v[cond.colors[j - 1] - 1][slots[j - 1] - 1];
                    }
                    // only the chain variables move with xi: F*Pi is a
                    // Laurent polynomial, so any path into the locus computes
                    // the same limit, and constant spectators keep degrees low
                    VarTable<QX> xq;
                    xq.v.resize(s.degree.counts.size());
                    for (size_t i = 0; i < base.v.size(); ++i)
                        for (const auto& v : base.v[i]) xq.v[i].push_back(QX(v));
                    for (size_t j = 0; j < cond.colors.size(); ++j) {
                        QX& slot = xq.v[cond.colors[j] - 1][slots[j] - 1];
                        slot = slot * (QX::one() + QX(Rat(static_cast<long>(j) + 1)) * QX::xi());
                    }
                    QX val = s.at_xi(xq) * canonical_denominator(s.sig, xq.v);
                    auto lim = limit_at_zero(val);
                    ++res.cases;
                    if (!lim || !lim->is_zero()) {
                        std::ostringstream os;
                        os << "wheel (" << cond.label << ") colors";
                        for (size_t j = 0; j < cond.colors.size(); ++j)
                            os << " " << cond.colors[j] << ":" << slots[j];
                        os << " -> " << (lim ? lim->str() : std::string("no limit"));
                        res.fail(os.str());
                    }
                });
                if (!ok) res.fail("resample budget exhausted");
            }
        }
    }
    return res;
}

/// multiplies by the canonical denominator, restricts to a random affine
/// line, and requires every pole of the restriction to sit at a coordinate
/// zero (Laurent numerators allowed, nothing else)
inline CheckResult check_pole_shape(const CheckSubject& s, Rng& rng, int trials, long bound,
                                    int resample_budget) {
    CheckResult res;
    for (int t = 0; t < trials; ++t) {
        bool ok = detail::with_resampling(resample_budget, [&] {
            std::vector<QP> coords;
            VarTable<QX> xq;
            xq.v.resize(s.degree.counts.size());
            for (size_t i = 0; i < xq.v.size(); ++i) {
                for (int a = 0; a < s.degree.counts[i]; ++a) {
                    QP line(std::vector<Rat>{random_scalar(rng, bound), random_scalar(rng, bound)});
                    coords.push_back(line);
                    xq.v[i].push_back(QX(line, QP::one()));
                }
            }
            QX val = s.at_xi(xq) * canonical_denominator(s.sig, xq.v);
            ++res.cases;
            QP den = val.den();
            bool changed = true;
            while (changed && den.degree() > 0) {
                changed = false;
                for (const auto& c : coords) {
                    while (true) {
                        auto [q, r] = divrem(den, c);
                        if (r.is_zero() && !q.is_zero()) {
                            den = q;
                            changed = true;
                        } else {
                            break;
                        }
                    }
                }
            }
            if (den.degree() > 0) {
                res.fail("restricted denominator keeps a non-coordinate factor of degree " +
                         std::to_string(den.degree()));
            }
        });
        if (!ok) res.fail("resample budget exhausted");
    }
    return res;
}

/// Schwartz-Zippel style equality of two evaluators on a common degree
inline bool agree_at_random_points(const DegreeVector& deg, const Evaluator<Rat>& a,
                                   const Evaluator<Rat>& b, Rng& rng, int trials, long bound,
                                   int resample_budget, std::string* witness = nullptr) {
    for (int t = 0; t < trials; ++t) {
        bool done = false;
        for (int k = 0; k < resample_budget && !done; ++k) {
            try {
                VarTable<Rat> x = VarTable<Rat>::random(deg, rng, bound);
                Rat va = a(x), vb = b(x);
                if (va != vb) {
                    if (witness) {
                        std::ostringstream os;
                        os << "trial " << t << ": " << va.str() << " != " << vb.str();
                        *witness = os.str();
                    }
                    return false;
                }
                done = true;
            } catch (const DivisionByZero&) {
                continue;
            }
        }
        if (!done) {
            if (witness) *witness = "resample budget exhausted";
            return false;
        }
    }
    return true;
}

}  // namespace qshuffle
