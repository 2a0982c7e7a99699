#pragma once

#include <optional>
#include <vector>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// Univariate polynomial over an exact field, coefficients lowest-degree
/// first, no trailing zeros (zero polynomial = empty vector, degree -1).
template <Field F>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(F c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(F::one()); }
    /// c * xi^k
    static UniPoly monomial(F c, int k) {
        UniPoly p;
        if (c.is_zero()) return p;
        p.c_.assign(k + 1, F::zero());
        p.c_[k] = std::move(c);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : F::zero();
    }
    const F& lead() const { return c_.back(); }

    /// order of vanishing at 0 (index of lowest nonzero coefficient); -1 for 0
    int low_order() const {
        for (int i = 0; i < static_cast<int>(c_.size()); ++i)
            if (!c_[i].is_zero()) return i;
        return -1;
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const F& s, const UniPoly& p) {
        UniPoly r = p;
        for (auto& c : r.c_) c = s * c;
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// quotient and remainder; divisor must be nonzero
    friend std::pair<UniPoly, UniPoly> divrem(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw DivisionByZero("UniPoly divrem by zero");
        UniPoly q;
        q.c_.assign(std::max<int>(a.degree() - b.degree() + 1, 0), F::zero());
        while (!a.is_zero() && a.degree() >= b.degree()) {
            F c = a.lead() / b.lead();
            int k = a.degree() - b.degree();
            q.c_[k] = c;
            for (size_t i = 0; i < b.c_.size(); ++i)
                a.c_[i + k] = a.c_[i + k] - c * b.c_[i];
            a.trim();
        }
        q.trim();
        return {std::move(q), std::move(a)};
    }

    /// monic gcd; remainders are re-normalized each step to curb coefficient
    /// growth in the Euclid chain
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divrem(std::move(a), b);
            (void)q;
            if (!r.is_zero()) r = (F::one() / r.lead()) * r;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = (F::one() / a.lead()) * a;
        return a;
    }

    F eval(const F& x) const {
        F acc = F::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// coefficient reversal xi -> 1/xi scaled by xi^degree
    UniPoly reversed() const {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return UniPoly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Rational function in one formal variable xi, canonical form:
/// gcd(num, den) = 1 and den monic.
template <Field F>
class RatFn {
  public:
    RatFn() : num_(), den_(UniPoly<F>::one()) {}
    RatFn(long n) : num_(UniPoly<F>(F(n))), den_(UniPoly<F>::one()) {}  // NOLINT
    explicit RatFn(F c) : num_(UniPoly<F>(std::move(c))), den_(UniPoly<F>::one()) {}
    RatFn(UniPoly<F> n, UniPoly<F> d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw DivisionByZero("RatFn with zero denominator");
        reduce();
    }

    static RatFn zero() { return RatFn(); }
    static RatFn one() { return RatFn(F::one()); }
    /// the formal variable
    static RatFn xi() { return RatFn(UniPoly<F>::monomial(F::one(), 1), UniPoly<F>::one()); }

    bool is_zero() const { return num_.is_zero(); }
    const UniPoly<F>& num() const { return num_; }
    const UniPoly<F>& den() const { return den_; }

    RatFn operator-() const { return RatFn(-num_, den_, 0); }
    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        // common-denominator shortcut keeps the gcd inputs small
        UniPoly<F> g = gcd(a.den_, b.den_);
        if (g.degree() < 1)
            return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        UniPoly<F> da = divrem(a.den_, g).first;
        UniPoly<F> db = divrem(b.den_, g).first;
        return RatFn(a.num_ * db + b.num_ * da, a.den_ * db);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        // cross-cancel first so the post-multiplication gcd is trivial
        UniPoly<F> g1 = gcd(a.num_, b.den_);
        UniPoly<F> g2 = gcd(b.num_, a.den_);
        UniPoly<F> n1 = g1.degree() > 0 ? divrem(a.num_, g1).first : a.num_;
        UniPoly<F> d2 = g1.degree() > 0 ? divrem(b.den_, g1).first : b.den_;
        UniPoly<F> n2 = g2.degree() > 0 ? divrem(b.num_, g2).first : b.num_;
        UniPoly<F> d1 = g2.degree() > 0 ? divrem(a.den_, g2).first : a.den_;
        return RatFn(n1 * n2, d1 * d2);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw DivisionByZero("RatFn / 0");
        return a * RatFn(b.den_, b.num_);
    }
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

  private:
    RatFn(UniPoly<F> n, UniPoly<F> d, int) : num_(std::move(n)), den_(std::move(d)) {}
    void reduce() {
        UniPoly<F> g = gcd(num_, den_);
        if (!g.is_zero() && g.degree() >= 1) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
        if (den_.is_zero()) throw DivisionByZero("RatFn reduce");
        F lc = den_.lead();
        if (!lc.is_one()) {
            F inv = F::one() / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }
    UniPoly<F> num_;
    UniPoly<F> den_;
};

/// lim_{xi->0}: compare orders of vanishing; nullopt = no finite limit
template <Field F>
std::optional<F> limit_at_zero(const RatFn<F>& f) {
    if (f.is_zero()) return F::zero();
    int a = f.num().low_order();
    int b = f.den().low_order();
    if (a > b) return F::zero();
    if (a == b) return f.num().coeff(a) / f.den().coeff(b);
    return std::nullopt;
}

/// lim_{xi->inf}: compare degrees
template <Field F>
std::optional<F> limit_at_infinity(const RatFn<F>& f) {
    if (f.is_zero()) return F::zero();
    int a = f.num().degree();
    int b = f.den().degree();
    if (a < b) return F::zero();
    if (a == b) return f.num().lead() / f.den().lead();
    return std::nullopt;
}

using QP = UniPoly<Rat>;
using QX = RatFn<Rat>;

}  // namespace qshuffle
