#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

using Catalog = std::shared_ptr<const std::vector<std::string>>;

inline Catalog make_catalog(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Terms are keyed by integer exponent vectors (one slot per catalog
/// variable); no zero coefficient is stored. A constant may carry a null
/// catalog and unifies with any other catalog on demand.
class SparseLaurent {
  public:
    using Exps = std::vector<int>;

    SparseLaurent() = default;
    SparseLaurent(long c) { *this = constant(Rat(c)); }  // NOLINT
    explicit SparseLaurent(Rat c) { *this = constant(std::move(c)); }

    static SparseLaurent zero() { return SparseLaurent(); }
    static SparseLaurent one() { return constant(Rat(1)); }
    static SparseLaurent constant(Rat c) {
        SparseLaurent p;
        if (!c.is_zero()) p.terms_[{}] = std::move(c);
        return p;
    }
    static SparseLaurent variable(const Catalog& cat, int index, int exp = 1) {
        SparseLaurent p;
        p.cat_ = cat;
        Exps e(cat->size(), 0);
        e[index] = exp;
        p.terms_[std::move(e)] = Rat(1);
        return p;
    }
    static SparseLaurent monomial(const Catalog& cat, Exps e, Rat c) {
        SparseLaurent p;
        p.cat_ = cat;
        if (!c.is_zero()) p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    }
    Rat constant_value() const {
        return terms_.empty() ? Rat(0) : terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }
    const Catalog& catalog() const { return cat_; }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    Rat coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    SparseLaurent operator-() const {
        SparseLaurent r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend SparseLaurent operator+(const SparseLaurent& a, const SparseLaurent& b) {
        auto [x, y] = unify(a, b);
        for (const auto& [e, c] : y.terms_) {
            auto it = x.terms_.find(e);
            if (it == x.terms_.end()) {
                x.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) x.terms_.erase(it);
            }
        }
        return x;
    }
    friend SparseLaurent operator-(const SparseLaurent& a, const SparseLaurent& b) {
        return a + (-b);
    }
    friend SparseLaurent operator*(const SparseLaurent& a, const SparseLaurent& b) {
        auto [x, y] = unify(a, b);
        SparseLaurent r;
        r.cat_ = x.cat_;
        const size_t nv = x.cat_ ? x.cat_->size() : 0;
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                Exps e(nv, 0);
                for (size_t k = 0; k < nv; ++k) e[k] = ea[k] + eb[k];
                Rat c = ca * cb;
                auto it = r.terms_.find(e);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(std::move(e), std::move(c));
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    friend SparseLaurent operator*(const Rat& s, const SparseLaurent& p) {
        if (s.is_zero()) return SparseLaurent();
        SparseLaurent r = p;
        for (auto& [e, c] : r.terms_) c = s * c;
        return r;
    }
    friend bool operator==(const SparseLaurent& a, const SparseLaurent& b) {
        auto [x, y] = unify(a, b);
        return x.terms_ == y.terms_;
    }

    SparseLaurent pow(long e) const {
        if (e < 0) throw std::invalid_argument("SparseLaurent::pow negative; use monomial inverse");
        SparseLaurent acc = one();
        SparseLaurent b = *this;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * b;
            if (k > 1) b = b * b;
        }
        return acc;
    }

    /// substitute exact values for every variable (Laurent-safe)
    template <Field F>
    F eval(const std::vector<F>& values) const {
        F acc = F::zero();
        for (const auto& [e, c] : terms_) {
            F t = from_rat<F>(c);
            for (size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) t = t * pow_int(values[k], e[k]);
            acc = acc + t;
        }
        return acc;
    }

    /// substitute a scalar for one variable, keeping the catalog
    SparseLaurent substitute_scalar(int index, const Rat& v) const {
        SparseLaurent r;
        r.cat_ = cat_;
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            Rat c2 = c;
            if (index < static_cast<int>(e.size()) && e[index] != 0) {
                int k = e[index];
                e2[index] = 0;
                if (k > 0) {
                    c2 = c2 * pow_int(v, k);
                } else {
                    if (v.is_zero()) throw DivisionByZero("substitute 0 at negative exponent");
                    c2 = c2 * pow_int(v, k);
                }
            }
            auto it = r.terms_.find(e2);
            if (it == r.terms_.end()) {
                if (!c2.is_zero()) r.terms_.emplace(std::move(e2), std::move(c2));
            } else {
                it->second += c2;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    /// total degree of the highest term (0 for constants/zero)
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int k : e) t += k;
            d = std::max(d, t);
        }
        return d;
    }
    int degree_in(int index) const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            if (index < static_cast<int>(e.size())) d = std::max(d, e[index]);
        return d;
    }

    /// exact division: returns the quotient iff den divides num exactly.
    /// Works on monomial-shifted copies so both operands are honest
    /// polynomials; exact divisibility then implies every leading-term step
    /// divides, which bounds the loop.
    static std::optional<SparseLaurent> try_divide_exact(const SparseLaurent& num,
                                                         const SparseLaurent& den) {
        if (den.is_zero()) throw DivisionByZero("try_divide_exact by 0");
        if (num.is_zero()) return SparseLaurent();
        auto [n, d] = unify(num, den);
        const size_t nv = n.cat_ ? n.cat_->size() : 0;
        Exps shift_n = min_exps(n, nv);
        Exps shift_d = min_exps(d, nv);
        n = n.shifted(shift_n, -1);
        d = d.shifted(shift_d, -1);
        SparseLaurent q;
        q.cat_ = n.cat_;
        const auto lead = *d.terms_.rbegin();
        while (!n.terms_.empty()) {
            const auto top = *n.terms_.rbegin();
            Exps e = top.first;
            for (size_t k = 0; k < nv; ++k) {
                e[k] -= lead.first[k];
                if (e[k] < 0) return std::nullopt;
            }
            SparseLaurent t;
            t.cat_ = n.cat_;
            t.terms_[e] = top.second / lead.second;
            q = q + t;
            n = n - t * d;
        }
        Exps unshift(nv, 0);
        for (size_t k = 0; k < nv; ++k) unshift[k] = shift_n[k] - shift_d[k];
        return q.shifted(unshift, +1);
    }

    /// deterministic rendering, terms in descending key order
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                os << "*" << (*cat_)[k];
                if (e[k] != 1) os << "^" << e[k];
            }
        }
        return os.str();
    }

  private:
    template <Field F>
    static F from_rat(const Rat& c);

    static Exps min_exps(const SparseLaurent& p, size_t nv) {
        Exps m(nv, 0);
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            for (size_t k = 0; k < nv; ++k)
                m[k] = first ? e[k] : std::min(m[k], e[k]);
            first = false;
        }
        return m;
    }
    SparseLaurent shifted(const Exps& by, int dir) const {
        SparseLaurent r;
        r.cat_ = cat_;
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            for (size_t k = 0; k < by.size(); ++k) e2[k] += dir * by[k];
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    static std::pair<SparseLaurent, SparseLaurent> unify(const SparseLaurent& a,
                                                         const SparseLaurent& b) {
        SparseLaurent x = a;
        SparseLaurent y = b;
        if (!x.cat_ && y.cat_) x.adopt(y.cat_);
        if (!y.cat_ && x.cat_) y.adopt(x.cat_);
        if (x.cat_ && y.cat_ && x.cat_ != y.cat_ && *x.cat_ != *y.cat_)
            throw std::invalid_argument("SparseLaurent catalog mismatch");
        return {std::move(x), std::move(y)};
    }
    void adopt(const Catalog& cat) {
        cat_ = cat;
        std::map<Exps, Rat> t2;
        for (auto& [e, c] : terms_) {
            Exps e2 = e;
            e2.resize(cat->size(), 0);
            t2.emplace(std::move(e2), std::move(c));
        }
        terms_ = std::move(t2);
    }

    Catalog cat_;
    std::map<Exps, Rat> terms_;
};

template <>
inline Rat SparseLaurent::from_rat<Rat>(const Rat& c) {
    return c;
}
template <Field F>
F SparseLaurent::from_rat(const Rat& c) {
    return F(c);
}

/// Fraction of sparse Laurent polynomials; equality by cross-multiplication.
/// No polynomial gcd is attempted (non-goal); monomial/scalar normalization
/// only, which is enough to keep tiny computations tiny.
class SymbolicRational {
  public:
    SymbolicRational() : num_(), den_(SparseLaurent::one()) {}
    SymbolicRational(long c) : num_(SparseLaurent(c)), den_(SparseLaurent::one()) {}  // NOLINT
    explicit SymbolicRational(Rat c) : num_(SparseLaurent(std::move(c))), den_(SparseLaurent::one()) {}
    explicit SymbolicRational(SparseLaurent n)
        : num_(std::move(n)), den_(SparseLaurent::one()) {}
    SymbolicRational(SparseLaurent n, SparseLaurent d)
        : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero("SymbolicRational with zero denominator");
        normalize();
    }

    static SymbolicRational zero() { return SymbolicRational(); }
    static SymbolicRational one() { return SymbolicRational(1); }

    bool is_zero() const { return num_.is_zero(); }
    const SparseLaurent& num() const { return num_; }
    const SparseLaurent& den() const { return den_; }

    SymbolicRational operator-() const { return SymbolicRational(-num_, den_); }
    friend SymbolicRational operator+(const SymbolicRational& a, const SymbolicRational& b) {
        return SymbolicRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend SymbolicRational operator-(const SymbolicRational& a, const SymbolicRational& b) {
        return a + (-b);
    }
    friend SymbolicRational operator*(const SymbolicRational& a, const SymbolicRational& b) {
        return SymbolicRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend SymbolicRational operator/(const SymbolicRational& a, const SymbolicRational& b) {
        if (b.is_zero()) throw DivisionByZero("SymbolicRational / 0");
        return SymbolicRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const SymbolicRational& a, const SymbolicRational& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }

    template <Field F>
    F eval(const std::vector<F>& values) const {
        F d = den_.eval(values);
        if (d.is_zero()) throw DivisionByZero("SymbolicRational::eval denominator");
        return num_.eval(values) / d;
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = SparseLaurent::one();
            return;
        }
        // cancel full denominator when it divides the numerator
        if (auto q = SparseLaurent::try_divide_exact(num_, den_)) {
            num_ = std::move(*q);
            den_ = SparseLaurent::one();
            return;
        }
        // otherwise make the denominator's leading coefficient 1
        Rat lc = den_.terms().rbegin()->second;
        if (!lc.is_one()) {
            Rat inv = lc.inv();
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
    SparseLaurent num_;
    SparseLaurent den_;
};

}  // namespace qshuffle
