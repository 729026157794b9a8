#pragma once

#include <complex>
#include <vector>

#include "toda/rational.hpp"

namespace toda {

/// Dense univariate polynomial over a field K, coefficients stored low to
/// high with trailing zeros trimmed.  The zero polynomial has an empty
/// coefficient list and degree -1.
template <typename K>
class Poly {
  public:
    Poly() = default;
    Poly(K constant) { coeffs_.push_back(std::move(constant)); trim(); }
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    /// The monomial k * z^m.
    static Poly monomial(K k, int m) {
        std::vector<K> c(static_cast<size_t>(m) + 1);
        c[static_cast<size_t>(m)] = std::move(k);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of z^i (zero beyond the stored range).
    const K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return K(0);
        return coeffs_[static_cast<size_t>(i)];
    }
    const std::vector<K>& coeffs() const { return coeffs_; }

    const K& leading() const { return coeffs_.back(); }

    K at_zero() const { return coeff(0); }

    Poly operator-() const {
        std::vector<K> c(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> c(std::max(a.coeffs_.size(), b.coeffs_.size()), K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.coeffs_.size() + b.coeffs_.size() - 1, K(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const K& k, const Poly& p) {
        std::vector<K> c(p.coeffs_.size());
        for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] = k * p.coeffs_[i];
        return Poly(std::move(c));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; requires a nonzero divisor.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
        if (b.is_zero()) throw Error(ErrorCode::SingularMatrix, "polynomial division by zero");
        quot = Poly();
        rem = a;
        K inv_lead = K(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int shift = rem.degree() - b.degree();
            K factor = rem.leading() * inv_lead;
            Poly t = Poly::monomial(factor, shift);
            quot += t;
            rem -= t * b;
        }
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (K(1) / leading()) * *this;
    }

    /// Monic Euclidean gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    template <typename T>
    T eval(const T& z) const {
        T acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * z + convert_coeff<T>(coeffs_[i]);
        return acc;
    }

    std::complex<double> eval_c(const std::complex<double>& z) const {
        return eval<std::complex<double>>(z);
    }

  private:
    template <typename T>
    static T convert_coeff(const K& k) {
        if constexpr (std::is_same_v<K, Rational> &&
                      std::is_same_v<T, std::complex<double>>) {
            return T(k.to_double(), 0.0);
        } else if constexpr (std::is_same_v<K, GaussRational> &&
                             std::is_same_v<T, std::complex<double>>) {
            return k.to_complex();
        } else {
            return T(k);
        }
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

using PolyQ = Poly<Rational>;
using PolyG = Poly<GaussRational>;

inline PolyG promote(const PolyQ& p) {
    std::vector<GaussRational> c;
    c.reserve(p.coeffs().size());
    for (const auto& k : p.coeffs()) c.emplace_back(k);
    return PolyG(std::move(c));
}

}  // namespace toda
