#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "toda/error.hpp"

namespace toda {

using Int = mpz_class;

/// Arbitrary-precision rational, always in canonical form: denominator
/// positive, gcd(|num|, den) = 1, zero stored as 0/1.  Backed by GMP's
/// mpq_class, which maintains exactly this form.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(const Int& n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { canonicalize(); }
    Rational(const Int& n, const Int& d) : q_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational::raw(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw Error(ErrorCode::SingularMatrix, "inverse of zero");
        return Rational::raw(1 / q_);
    }

    Rational abs() const { return Rational::raw(::abs(q_)); }

    double to_double() const { return q_.get_d(); }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_str();
    }

    /// Parses "p" or "p/q"; rejects anything else (decimals in particular).
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (s.empty() || q.set_str(s, 10) != 0)
            throw Error(ErrorCode::NonRationalCoefficient, "not a rational: '" + s + "'");
        if (q.get_den() == 0)
            throw Error(ErrorCode::NonRationalCoefficient, "zero denominator: '" + s + "'");
        q.canonicalize();
        return Rational::raw(q);
    }

  private:
    static Rational raw(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }
    void canonicalize() {
        if (q_.get_den() == 0)
            throw Error(ErrorCode::NonRationalCoefficient, "zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

/// Complex rational a + bi; the coefficient field for Herglotz-side
/// rational functions.  Real rationals embed with im = 0.
class GaussRational {
  public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        if (b.is_zero()) throw Error(ErrorCode::SingularMatrix, "complex division by zero");
        Rational n = b.norm2();
        GaussRational p = a * b.conj();
        return {p.re_ / n, p.im_ / n};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    GaussRational& operator/=(const GaussRational& o) { return *this = *this / o; }

    GaussRational inverse() const { return GaussRational(Rational(1)) / *this; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  private:
    Rational re_;
    Rational im_;
};

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace toda
