#pragma once

#include "toda/poly.hpp"

namespace toda {

/// Quotient of polynomials over the Gaussian rationals, kept in canonical
/// form: gcd(num, den) = 1 and den monic.  The constant infinity (num = 1,
/// den = 0) is representable and flagged; it arises as a Toda image when
/// the denominator of the fraction collapses identically.
class RatFunc {
  public:
    RatFunc() : num_(PolyG::zero()), den_(PolyG::one()) {}
    RatFunc(PolyG num, PolyG den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static RatFunc constant(GaussRational c) { return RatFunc(PolyG(std::move(c)), PolyG::one()); }
    static RatFunc from_real(const PolyQ& num, const PolyQ& den) {
        return RatFunc(promote(num), promote(den));
    }
    static RatFunc infinity() {
        RatFunc f;
        f.num_ = PolyG::one();
        f.den_ = PolyG::zero();
        return f;
    }

    const PolyG& num() const { return num_; }
    const PolyG& den() const { return den_; }

    bool is_infinite() const { return den_.is_zero(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    /// True when every coefficient of num and den is real.
    bool is_real() const {
        for (const auto& c : num_.coeffs())
            if (!c.is_real()) return false;
        for (const auto& c : den_.coeffs())
            if (!c.is_real()) return false;
        return true;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::complex<double> eval(std::complex<double> z) const {
        if (is_infinite())
            return {std::numeric_limits<double>::infinity(), 0.0};
        return num_.eval_c(z) / den_.eval_c(z);
    }

  private:
    void reduce() {
        if (den_.is_zero()) {
            if (num_.is_zero())
                throw Error(ErrorCode::IdenticallyInfinite, "0/0 rational function");
            num_ = PolyG::one();
            return;
        }
        PolyG g = PolyG::gcd(num_, den_);
        if (g.degree() > 0) {
            PolyG q, r;
            PolyG::divmod(num_, g, q, r);
            num_ = q;
            PolyG::divmod(den_, g, q, r);
            den_ = q;
        }
        GaussRational lead_inv = den_.leading().inverse();
        num_ = lead_inv * num_;
        den_ = lead_inv * den_;
    }

    PolyG num_;
    PolyG den_;
};

}  // namespace toda
