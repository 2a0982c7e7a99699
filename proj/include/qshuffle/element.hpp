#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "qshuffle/generators.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/signature.hpp"

namespace qshuffle {

struct DegreeVector {
    std::vector<int> counts;  // per color, size K

    DegreeVector() = default;
    explicit DegreeVector(std::vector<int> c) : counts(std::move(c)) {}
    static DegreeVector zero(int K) { return DegreeVector(std::vector<int>(K, 0)); }
    static DegreeVector uniform(int K, int N) { return DegreeVector(std::vector<int>(K, N)); }
    static DegreeVector unit(int K, int color) {
        DegreeVector d = zero(K);
        d.counts[color - 1] = 1;
        return d;
    }

    int at(int color) const { return counts[color - 1]; }
    int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }
    bool is_uniform() const {
        for (int c : counts)
            if (c != counts[0]) return false;
        return true;
    }
    friend DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
        DegreeVector r = a;
        for (size_t i = 0; i < r.counts.size(); ++i) r.counts[i] += b.counts[i];
        return r;
    }
    friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
        return a.counts == b.counts;
    }
};

template <Field F>
struct VarTable {
    VarGroups<F> v;  // v[color-1][slot]

    VarTable() = default;
    explicit VarTable(VarGroups<F> g) : v(std::move(g)) {}

    static VarTable random(const DegreeVector& deg, Rng& rng, long bound) {
        VarGroups<F> g(deg.counts.size());
        for (size_t i = 0; i < deg.counts.size(); ++i)
            for (int a = 0; a < deg.counts[i]; ++a) g[i].push_back(F(random_scalar(rng, bound)));
        return VarTable(std::move(g));
    }

    bool matches(const DegreeVector& deg) const {
        if (v.size() != deg.counts.size()) return false;
        for (size_t i = 0; i < v.size(); ++i)
            if (static_cast<int>(v[i].size()) != deg.counts[i]) return false;
        return true;
    }
    const F& at(int color, int slot) const { return v[color - 1][slot - 1]; }
};

enum class NodeKind { Generator, Sum, ScalarMul, Product, Builtin, Explicit };
enum class BuiltinKind { P, Pstar, T, J, Jstar, G, Gstar, EpsN, Ic, Itilde };

struct BuiltinSpec {
    BuiltinKind kind = BuiltinKind::G;
    int i = 0;      // color for T/J
    long c = 0;     // exponent for J / I-functions
    int r = 0;      // order for G
    int N = 0;      // uniform degree (or M for I-functions' first group)
    int N2 = 0;     // second group size for I-functions
    int which = 2;  // q_i choice for EpsN
};

class Elem;
using ElemPtr = std::shared_ptr<const Elem>;

/// Immutable shuffle-element expression tree; evaluable over any exact field.
class Elem {
  public:
    AlgebraSignature sig;
    DegreeVector degree;
    NodeKind kind;
    int gen_color = 0;
    long gen_exp = 0;
    Rat scalar;
    BuiltinSpec builtin;
    SparseLaurent numerator;  // Explicit nodes
    std::vector<ElemPtr> kids;

    Elem(AlgebraSignature s, DegreeVector d, NodeKind k)
        : sig(s), degree(std::move(d)), kind(k) {}
};

inline ElemPtr unit(const AlgebraSignature& sig) {
    auto e = std::make_shared<Elem>(sig, DegreeVector::zero(sig.K()), NodeKind::Explicit);
    e->numerator = SparseLaurent::one();
    return e;
}

inline ElemPtr gen(const AlgebraSignature& sig, int color, long exp) {
    auto e = std::make_shared<Elem>(sig, DegreeVector::unit(sig.K(), sig.color(color)),
                                    NodeKind::Generator);
    e->gen_color = sig.color(color);
    e->gen_exp = exp;
    return e;
}

inline ElemPtr sum(std::vector<ElemPtr> terms) {
    if (terms.empty()) throw std::invalid_argument("sum of nothing");
    for (const auto& t : terms)
        if (!(t->degree == terms[0]->degree) || !(t->sig == terms[0]->sig))
            throw DegreeMismatch("sum requires equal signature and degree");
    auto e = std::make_shared<Elem>(terms[0]->sig, terms[0]->degree, NodeKind::Sum);
    e->kids = std::move(terms);
    return e;
}

inline ElemPtr smul(Rat c, ElemPtr t) {
    auto e = std::make_shared<Elem>(t->sig, t->degree, NodeKind::ScalarMul);
    e->scalar = std::move(c);
    e->kids = {std::move(t)};
    return e;
}

inline ElemPtr prod(ElemPtr a, ElemPtr b) {
    if (!(a->sig == b->sig)) throw DegreeMismatch("product across different signatures");
    auto e = std::make_shared<Elem>(a->sig, a->degree + b->degree, NodeKind::Product);
    e->kids = {std::move(a), std::move(b)};
    return e;
}

inline ElemPtr prod_chain(const std::vector<ElemPtr>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty product chain");
    ElemPtr acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) acc = prod(acc, factors[i]);
    return acc;
}

inline ElemPtr commutator(const ElemPtr& a, const ElemPtr& b) {
    return sum({prod(a, b), smul(Rat(-1), prod(b, a))});
}

inline ElemPtr builtin_elem(const AlgebraSignature& sig, BuiltinSpec spec, DegreeVector deg) {
    auto e = std::make_shared<Elem>(sig, std::move(deg), NodeKind::Builtin);
    e->builtin = spec;
    return e;
}

inline ElemPtr builtin_P(const AlgebraSignature& sig, int N, bool star = false) {
    if (star && sig.n == 0) throw std::invalid_argument("P* needs n >= 1");
    return builtin_elem(sig, {star ? BuiltinKind::Pstar : BuiltinKind::P, 0, 0, 0, N, 0, 2},
                        DegreeVector::uniform(sig.K(), N));
}
inline ElemPtr builtin_t(const AlgebraSignature& sig, int i, int N) {
    return builtin_elem(sig, {BuiltinKind::T, sig.color(i), 0, 0, N, 0, 2},
                        DegreeVector::uniform(sig.K(), N));
}
inline ElemPtr builtin_J(const AlgebraSignature& sig, int i, long c, int N, bool star = false) {
    return builtin_elem(sig,
                        {star ? BuiltinKind::Jstar : BuiltinKind::J, sig.color(i), c, 0, N, 0, 2},
                        DegreeVector::uniform(sig.K(), N));
}
inline ElemPtr builtin_G(const AlgebraSignature& sig, int r, int N, bool star = false) {
    if (star && sig.n == 0) throw std::invalid_argument("G* needs n >= 1");
    if (r < 0) throw std::invalid_argument("G needs r >= 0");
    return builtin_elem(sig, {star ? BuiltinKind::Gstar : BuiltinKind::G, 0, 0, r, N, 0, 2},
                        DegreeVector::uniform(sig.K(), N));
}
inline ElemPtr builtin_eps(const AlgebraSignature& sig, int N, int which) {
    if (sig.m != 1 || sig.n != 0) throw std::invalid_argument("eps_N lives in the one-color algebra");
    if (which < 1 || which > 3) throw std::invalid_argument("eps_N parameter choice in {1,2,3}");
    return builtin_elem(sig, {BuiltinKind::EpsN, 0, 0, 0, N, 0, which},
                        DegreeVector::uniform(1, N));
}
inline ElemPtr builtin_I(const AlgebraSignature& sig, long c, int M, int N, bool tilde) {
    if (sig.K() < 2) throw std::invalid_argument("I-function element needs two colors");
    DegreeVector d = DegreeVector::zero(sig.K());
    d.counts[0] = M;
    d.counts[1] = N;
    return builtin_elem(sig, {tilde ? BuiltinKind::Itilde : BuiltinKind::Ic, 0, c, 0, M, N, 2},
                        std::move(d));
}

/// variable catalog for explicit numerators: x{i}_{a} per slot, then q, d, s1..sK
inline Catalog explicit_catalog(const AlgebraSignature& sig, const DegreeVector& deg) {
    std::vector<std::string> names;
    for (int i = 1; i <= sig.K(); ++i)
        for (int a = 1; a <= deg.at(i); ++a)
            names.push_back("x" + std::to_string(i) + "_" + std::to_string(a));
    names.emplace_back("q");
    names.emplace_back("d");
    for (int i = 1; i <= sig.K(); ++i) names.push_back("s" + std::to_string(i));
    return make_catalog(std::move(names));
}

/// element with an explicit Laurent-polynomial numerator over the canonical
/// denominator (the catalog may reference q, d, s_i as well as the x's)
inline ElemPtr explicit_elem(const AlgebraSignature& sig, const DegreeVector& deg,
                             SparseLaurent num) {
    auto e = std::make_shared<Elem>(sig, deg, NodeKind::Explicit);
    e->numerator = std::move(num);
    return e;
}

/// sgn(I,J): signature of the concatenation (I asc, J asc)
inline int sgn_pair(const std::vector<int>& I, const std::vector<int>& J) {
    long inv = 0;
    for (int a : I)
        for (int b : J)
            if (a > b) ++inv;
    return (inv & 1) ? -1 : 1;
}

namespace detail {

inline bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

inline std::vector<std::vector<std::vector<int>>> color_subsets(const DegreeVector& dF,
                                                                const DegreeVector& dG) {
    const size_t K = dF.counts.size();
    std::vector<std::vector<std::vector<int>>> out(K);
    for (size_t i = 0; i < K; ++i) {
        const int M = dF.counts[i], tot = M + dG.counts[i];
        std::vector<int> idx(M);
        for (int a = 0; a < M; ++a) idx[a] = a;
        do {
            out[i].push_back(idx);
        } while (M > 0 && next_combination(idx, tot));
        if (M == 0) { /* single empty subset already pushed */ }
    }
    return out;
}

}  // namespace detail

/// the shuffle product of two evaluators at a point: sum over per-color
/// partitions with fermionic sgn factors and structure-function weights
template <Field F, class EvF, class EvG>
F shuffle_pair_value(const AlgebraSignature& sig, const ParamPoint<F>& p, EvF&& fe,
                     const DegreeVector& dF, EvG&& ge, const DegreeVector& dG,
                     const VarTable<F>& x) {
    const int K = sig.K();
    auto subsets = detail::color_subsets(dF, dG);
    std::vector<size_t> pick(K, 0);
    F total = F::zero();
    while (true) {
        std::vector<std::vector<int>> I(K), J(K);
        for (int i = 0; i < K; ++i) {
            I[i] = subsets[i][pick[i]];
            std::vector<bool> used(dF.counts[i] + dG.counts[i], false);
            for (int a : I[i]) used[a] = true;
            for (int b = 0; b < static_cast<int>(used.size()); ++b)
                if (!used[b]) J[i].push_back(b);
        }
        int sgn = 1;
        if (sig.n >= 1) {
            sgn = sgn_pair(I[sig.m - 1], J[sig.m - 1]) * sgn_pair(I[K - 1], J[K - 1]);
        }
        VarTable<F> xF, xG;
        xF.v.resize(K);
        xG.v.resize(K);
        for (int i = 0; i < K; ++i) {
            for (int a : I[i]) xF.v[i].push_back(x.v[i][a]);
            for (int b : J[i]) xG.v[i].push_back(x.v[i][b]);
        }
        F w = F::one();
        for (int i = 1; i <= K; ++i) {
            for (int j = 1; j <= K; ++j) {
                for (int a : I[i - 1])
                    for (int b : J[j - 1]) w = w * omega(sig, p, i, j, x.v[i - 1][a], x.v[j - 1][b]);
            }
        }
        F term = fe(xF) * ge(xG) * w;
        total = (sgn < 0) ? total - term : total + term;
        int i = K - 1;
        while (i >= 0 && pick[i] + 1 == subsets[i].size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++pick[i];
    }
    return total;
}

template <Field F>
F to_field(const Rat& c) {
    return F(c);
}
template <>
inline Rat to_field<Rat>(const Rat& c) {
    return c;
}

template <Field F>
F evaluate(const Elem& e, const ParamPoint<F>& p, const VarTable<F>& x);

namespace detail {
template <Field F>
F eval_builtin(const Elem& e, const ParamPoint<F>& p, const VarTable<F>& x) {
    const auto& b = e.builtin;
    switch (b.kind) {
        case BuiltinKind::P:
            return eval_P(e.sig, p, x.v, false);
        case BuiltinKind::Pstar:
            return eval_P(e.sig, p, x.v, true);
        case BuiltinKind::T:
            return eval_t(e.sig, p, x.v, b.i);
        case BuiltinKind::J:
            return eval_J(e.sig, p, x.v, b.i, b.c, false);
        case BuiltinKind::Jstar:
            return eval_J(e.sig, p, x.v, b.i, b.c, true);
        case BuiltinKind::G:
            return eval_G(e.sig, p, x.v, b.r, false);
        case BuiltinKind::Gstar:
            return eval_G(e.sig, p, x.v, b.r, true);
        case BuiltinKind::EpsN: {
            F qi = b.which == 1 ? p.q1() : (b.which == 2 ? p.q2() : p.q3());
            return eval_eps(x.v[0], qi);
        }
        case BuiltinKind::Ic:
            return eval_Ic(p.q, b.c, x.v[0], x.v[1]);
        case BuiltinKind::Itilde:
            return eval_Itilde(p.q, b.c, x.v[0], x.v[1]);
    }
    throw std::logic_error("unreachable builtin kind");
}
}  // namespace detail

template <Field F>
F evaluate(const Elem& e, const ParamPoint<F>& p, const VarTable<F>& x) {
    if (!x.matches(e.degree)) throw DegreeMismatch("assignment does not match element degree");
    switch (e.kind) {
        case NodeKind::Generator:
            return pow_int(x.at(e.gen_color, 1), e.gen_exp);
        case NodeKind::Sum: {
            F acc = F::zero();
            for (const auto& k : e.kids) acc = acc + evaluate(*k, p, x);
            return acc;
        }
        case NodeKind::ScalarMul:
            return to_field<F>(e.scalar) * evaluate(*e.kids[0], p, x);
        case NodeKind::Product: {
            const Elem& a = *e.kids[0];
            const Elem& b = *e.kids[1];
            return shuffle_pair_value(
                e.sig, p, [&](const VarTable<F>& xa) { return evaluate(a, p, xa); }, a.degree,
                [&](const VarTable<F>& xb) { return evaluate(b, p, xb); }, b.degree, x);
        }
        case NodeKind::Builtin:
            return detail::eval_builtin(e, p, x);
        case NodeKind::Explicit: {
            std::vector<F> vals;
            for (const auto& grp : x.v)
                for (const auto& v : grp) vals.push_back(v);
            vals.push_back(p.q);
            vals.push_back(p.d);
            for (int i = 1; i <= e.sig.K(); ++i) vals.push_back(p.s_at(i));
            F num = e.numerator.is_zero() ? F::zero() : e.numerator.template eval<F>(vals);
            if (e.degree.total() == 0) return num;
            F den = canonical_denominator(e.sig, x.v);
            if (den.is_zero()) throw DivisionByZero("explicit element at a pole of Pi");
            return num / den;
        }
    }
    throw std::logic_error("unreachable node kind");
}

}  // namespace qshuffle
