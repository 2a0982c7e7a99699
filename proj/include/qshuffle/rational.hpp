#pragma once

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>

namespace qshuffle {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : std::invalid_argument {
    explicit DegreeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeExceeded : std::runtime_error {
    explicit SizeExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct PoleInU : std::runtime_error {
    explicit PoleInU(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (mpq_class keeps that canonical form for us).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZero("Rat(n, 0)");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rat(const std::string& s) : v_(s) { v_.canonicalize(); }

    static Rat zero() { return Rat(); }
    static Rat one() { return Rat(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZero("Rat / 0");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat inv() const {
        if (is_zero()) throw DivisionByZero("Rat::inv of 0");
        return Rat(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

/// Exact field: value semantics, total arithmetic except division by zero,
/// decidable equality. Models: Rat, RatFn<Rat>, SymbolicRational.
template <class F>
concept Field = std::regular<F> && requires(F a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
};

template <Field F>
F pow_int(const F& base, long e) {
    if (e == 0) return F::one();
    if (e < 0) return F::one() / pow_int(base, -e);
    F acc = F::one();
    F b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) acc = acc * b;
        if (k > 1) b = b * b;
    }
    return acc;
}

}  // namespace qshuffle
