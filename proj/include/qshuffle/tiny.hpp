#pragma once

#include <map>
#include <string>
#include <vector>

#include "qshuffle/element.hpp"
#include "qshuffle/membership.hpp"

namespace qshuffle {

/// symbolic evaluation context: every x-variable and parameter is a catalog
/// variable; q1, q2, q3 and s_K are expanded through their definitions so
/// q1 q2 q3 = 1 and prod(s) = 1 hold identically
struct TinyContext {
    AlgebraSignature sig;
    DegreeVector degree;
    Catalog cat;
    ParamPoint<SymbolicRational> params;
    VarTable<SymbolicRational> vars;
};

inline TinyContext make_tiny_context(const AlgebraSignature& sig, const DegreeVector& deg,
                                     int max_x_vars = 6) {
    if (deg.total() > max_x_vars)
        throw SizeExceeded("symbolic backend capped at " + std::to_string(max_x_vars) +
                           " variables");
    TinyContext ctx;
    ctx.sig = sig;
    ctx.degree = deg;
    ctx.cat = explicit_catalog(sig, deg);
    const int nx = deg.total();
    auto sym = [&](int idx) { return SymbolicRational(SparseLaurent::variable(ctx.cat, idx)); };
    ctx.params.q = sym(nx);
    ctx.params.d = sym(nx + 1);
    ctx.params.s.clear();
    // s_K is the monomial inverse of the others so prod(s) = 1 identically
    SparseLaurent::Exps last(ctx.cat->size(), 0);
    for (int i = 0; i < sig.K() - 1; ++i) {
        ctx.params.s.push_back(sym(nx + 2 + i));
        last[nx + 2 + i] = -1;
    }
    ctx.params.s.push_back(SymbolicRational(SparseLaurent::monomial(ctx.cat, last, Rat(1))));
    ctx.vars.v.resize(sig.K());
    int at = 0;
    for (int i = 0; i < sig.K(); ++i)
        for (int a = 0; a < deg.counts[i]; ++a) ctx.vars.v[i].push_back(sym(at++));
    return ctx;
}

/// fully symbolic value of an element over the canonical denominator
inline SymbolicRational materialize_tiny(const ElemPtr& e, int max_x_vars = 6) {
    TinyContext ctx = make_tiny_context(e->sig, e->degree, max_x_vars);
    return evaluate<SymbolicRational>(*e, ctx.params, ctx.vars);
}

/// numerator of a materialized element against the canonical denominator:
/// value * Pi as an exact polynomial division
inline SparseLaurent tiny_numerator(const ElemPtr& e, int max_x_vars = 6) {
    TinyContext ctx = make_tiny_context(e->sig, e->degree, max_x_vars);
    SymbolicRational v = evaluate<SymbolicRational>(*e, ctx.params, ctx.vars);
    SymbolicRational pi(SparseLaurent::one());
    {
        VarGroups<SymbolicRational> g = ctx.vars.v;
        pi = canonical_denominator(ctx.sig, g);
    }
    SymbolicRational f = v * pi;
    auto q = SparseLaurent::try_divide_exact(f.num(), f.den());
    if (!q) throw std::logic_error("tiny_numerator: value * Pi is not polynomial");
    return *q;
}

/// the sub-polynomial in the non-x variables multiplying a given x-monomial
inline SparseLaurent coefficient_of_x_monomial(const SparseLaurent& f, int nx,
                                               const std::vector<int>& xexp) {
    SparseLaurent out;
    const Catalog& cat = f.catalog();
    for (const auto& [e, c] : f.terms()) {
        bool match = true;
        for (int i = 0; i < nx; ++i)
            if (e[i] != xexp[i]) {
                match = false;
                break;
            }
        if (!match) continue;
        SparseLaurent::Exps rest = e;
        for (int i = 0; i < nx; ++i) rest[i] = 0;
        out = out + SparseLaurent::monomial(cat, rest, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// tiny membership solver: impose existence and ratio of all scaled limits on
// a general numerator with per-variable degree <= 2N and total degree K N^2,
// as exact linear conditions over Q(q, d, s_1..s_{K-1})
// ---------------------------------------------------------------------------

struct TinySolveResult {
    int dimension = 0;
    std::vector<std::vector<SymbolicRational>> basis;  // coefficient vectors over the monomials
    std::vector<SparseLaurent::Exps> monomials;        // x-exponent patterns, catalog-sized
    Catalog cat;
};

namespace detail {

/// polynomial in xi with SparseLaurent coefficients
using XiPoly = std::map<int, SparseLaurent>;

inline XiPoly xipoly_mul(const XiPoly& a, const XiPoly& b) {
    XiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            SparseLaurent prod = ca * cb;
            auto it = r.find(ea + eb);
            if (it == r.end()) {
                if (!prod.is_zero()) r.emplace(ea + eb, std::move(prod));
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

/// Gaussian elimination over the symbolic fraction field; returns a nullspace basis
inline std::vector<std::vector<SymbolicRational>> nullspace(
    std::vector<std::vector<SymbolicRational>> rows, int ncols) {
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int pr = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        SymbolicRational inv = SymbolicRational::one() / rows[rank][col];
        for (int c = col; c < ncols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            SymbolicRational f = rows[r][col];
            for (int c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<SymbolicRational>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<SymbolicRational> v(ncols, SymbolicRational::zero());
        v[free] = SymbolicRational::one();
        for (int r = 0; r < rank; ++r)
            v[pivot_col_of_row[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline void enumerate_monomials(int nx, int total, int per_var, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == nx) {
        if (total == 0) out.push_back(cur);
        return;
    }
    int remaining_slots = nx - static_cast<int>(cur.size());
    for (int e = 0; e <= std::min(per_var, total); ++e) {
        if (total - e > per_var * (remaining_slots - 1)) continue;
        cur.push_back(e);
        enumerate_monomials(nx, total - e, per_var, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// full symbolic membership space for a uniform tiny degree; parameters stay
/// symbolic in q, d, s_1..s_{K-1}
inline TinySolveResult membership_solve_tiny(const AlgebraSignature& sig, int N,
                                             int max_x_vars = 6) {
    const int K = sig.K();
    DegreeVector deg = DegreeVector::uniform(K, N);
    if (deg.total() > max_x_vars) throw SizeExceeded("membership_solve_tiny cap");
    TinyContext ctx = make_tiny_context(sig, deg, max_x_vars);
    const int nx = deg.total();

    // candidate numerator monomials: total degree K N^2, per-variable <= 2N
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    detail::enumerate_monomials(nx, K * N * N, 2 * N, cur, monos);
    const int nc = static_cast<int>(monos.size());

    // color of each flattened x slot
    std::vector<int> slot_color(nx);
    {
        int at = 0;
        for (int i = 1; i <= K; ++i)
            for (int a = 0; a < N; ++a) slot_color[at++] = i;
    }

    std::vector<std::vector<SymbolicRational>> rows;
    for (const auto& k : all_scaling_vectors(deg)) {
        // Pi under the scaling, as a polynomial in xi
        detail::XiPoly D{{0, SparseLaurent::one()}};
        {
            int at_i = 0;
            std::vector<std::pair<int, int>> slots;  // (flat index, color)
            for (int i = 1; i <= K; ++i)
                for (int a = 0; a < N; ++a) slots.emplace_back(at_i++, i);
            for (int i = 1; i <= K; ++i) {
                int j = i % K + 1;
                for (int a = 0; a < N; ++a) {
                    for (int b = 0; b < N; ++b) {
                        int ia = (i - 1) * N + a;
                        int ib = (j - 1) * N + b;
                        int oa = a < k.k[i - 1] ? 1 : 0;
                        int ob = b < k.k[j - 1] ? 1 : 0;
                        auto va = SparseLaurent::variable(ctx.cat, ia);
                        auto vb = SparseLaurent::variable(ctx.cat, ib);
                        detail::XiPoly f;
                        if (oa == ob) {
                            f[oa] = va - vb;
                        } else {
                            f[oa] = va;
                            f[ob] = SparseLaurent::zero() - vb;
                        }
                        D = detail::xipoly_mul(D, f);
                    }
                }
            }
        }
        const int lo = D.begin()->first;
        const int hi = D.rbegin()->first;
        const SparseLaurent& Dlo = D.begin()->second;
        const SparseLaurent& Dhi = D.rbegin()->second;

        // numerator monomial xi-weights
        std::vector<long> w(nc);
        for (int j = 0; j < nc; ++j) {
            long acc = 0;
            for (int t = 0; t < nx; ++t)
                if (monos[j][t] > 0 && 0 < k.k[slot_color[t] - 1] &&
                    (t % N) < k.k[slot_color[t] - 1])
                    acc += monos[j][t];
            w[j] = acc;
        }

        // existence: monomials escaping [lo, hi] must vanish
        for (int j = 0; j < nc; ++j) {
            if (w[j] < lo || w[j] > hi) {
                std::vector<SymbolicRational> row(nc, SymbolicRational::zero());
                row[j] = SymbolicRational::one();
                rows.push_back(std::move(row));
            }
        }

        // ratio: (sum_{w=hi} c_j m_j) D_lo = target (sum_{w=lo} c_j m_j) D_hi
        SymbolicRational target = SymbolicRational::one();
        for (int i = 1; i <= K; ++i)
            target = target * pow_int(ctx.params.s_at(i), k.k[i - 1]);
        if (sig.n >= 1)
            target = target *
                     pow_int(ctx.params.d, 2L * N * (k.k[sig.m - 1] - k.k[K - 1]));
        // target is a Laurent monomial in the parameters
        SparseLaurent tnum = target.num();
        std::map<SparseLaurent::Exps, std::vector<SymbolicRational>> per_monomial;
        auto add_terms = [&](const SparseLaurent& coef, const std::vector<int>& xm, int j,
                             bool negate) {
            SparseLaurent m = SparseLaurent::monomial(
                ctx.cat, [&] {
                    SparseLaurent::Exps e(ctx.cat->size(), 0);
                    for (int t = 0; t < nx; ++t) e[t] = xm[t];
                    return e;
                }(),
                Rat(1));
            SparseLaurent full = m * coef;
            for (const auto& [e, c] : full.terms()) {
                // split exponents into x-part (key) and parameter part
                SparseLaurent::Exps xpart(ctx.cat->size(), 0);
                SparseLaurent::Exps ppart(ctx.cat->size(), 0);
                for (size_t t = 0; t < e.size(); ++t)
                    (static_cast<int>(t) < nx ? xpart[t] : ppart[t]) = e[t];
                auto& row = per_monomial[xpart];
                if (row.empty()) row.assign(nc, SymbolicRational::zero());
                SymbolicRational v(SparseLaurent::monomial(ctx.cat, ppart, c));
                row[j] = negate ? row[j] - v : row[j] + v;
            }
        };
        for (int j = 0; j < nc; ++j) {
            if (w[j] == hi && hi >= lo) add_terms(Dlo, monos[j], j, false);
            if (w[j] == lo) add_terms(Dhi * tnum, monos[j], j, true);
        }
        for (auto& [xm, row] : per_monomial) rows.push_back(std::move(row));
    }

    TinySolveResult res;
    res.cat = ctx.cat;
    for (const auto& m : monos) {
        SparseLaurent::Exps e(ctx.cat->size(), 0);
        for (int t = 0; t < nx; ++t) e[t] = m[t];
        res.monomials.push_back(e);
    }
    res.basis = detail::nullspace(std::move(rows), nc);
    res.dimension = static_cast<int>(res.basis.size());
    return res;
}

/// does the numerator (a polynomial in the x's with parameter coefficients)
/// lie in the solved space? checked by appending it to the basis and
/// re-eliminating
inline bool tiny_space_contains(const TinySolveResult& res, const SparseLaurent& numerator,
                                int nx) {
    // write the numerator in the monomial coordinates
    std::vector<SymbolicRational> coords(res.monomials.size(), SymbolicRational::zero());
    SparseLaurent rest = numerator;
    for (size_t j = 0; j < res.monomials.size(); ++j) {
        // collect terms with the j-th x-exponent pattern
        SparseLaurent coef;
        for (const auto& [e, c] : rest.terms()) {
            bool match = true;
            for (int t = 0; t < nx; ++t)
                if (e[t] != res.monomials[j][t]) {
                    match = false;
                    break;
                }
            if (match) {
                SparseLaurent::Exps pp = e;
                for (int t = 0; t < nx; ++t) pp[t] = 0;
                coef = coef + SparseLaurent::monomial(res.cat, pp, c);
            }
        }
        coords[j] = SymbolicRational(coef);
    }
    // residual check: numerator minus its coordinate expansion must be zero
    {
        SparseLaurent recon;
        for (size_t j = 0; j < res.monomials.size(); ++j) {
            if (coords[j].is_zero()) continue;
            if (!(coords[j].den() == SparseLaurent::one())) return false;
            recon = recon + coords[j].num() * SparseLaurent::monomial(res.cat, res.monomials[j], Rat(1));
        }
        if (!(recon == numerator)) return false;
    }
    // rank test
    std::vector<std::vector<SymbolicRational>> rows = res.basis;
    const int ncols = static_cast<int>(res.monomials.size());
    auto rank_of = [&](std::vector<std::vector<SymbolicRational>> m) {
        int rank = 0;
        for (int col = 0; col < ncols && rank < static_cast<int>(m.size()); ++col) {
            int pr = -1;
            for (int r = rank; r < static_cast<int>(m.size()); ++r)
                if (!m[r][col].is_zero()) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(m[rank], m[pr]);
            SymbolicRational inv = SymbolicRational::one() / m[rank][col];
            for (int c = col; c < ncols; ++c) m[rank][c] = m[rank][c] * inv;
            for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
                if (m[r][col].is_zero()) continue;
                SymbolicRational f = m[r][col];
                for (int c = col; c < ncols; ++c) m[r][c] = m[r][c] - f * m[rank][c];
            }
            ++rank;
        }
        return rank;
    };
    int base_rank = rank_of(rows);
    rows.push_back(coords);
    return rank_of(rows) == base_rank;
}

}  // namespace qshuffle
