#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

#include "qpd/errors.hpp"

namespace qpd {

/// Element of Q(i): re + i*im with exact rational components.
class GaussRational {
public:
    GaussRational() : re_(0), im_(0) {}
    GaussRational(long v) : re_(v), im_(0) {}
    GaussRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(0, 1); }
    static GaussRational rational(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRational operator+(const GaussRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussRational operator-(const GaussRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussRational inverse() const;
    GaussRational operator/(const GaussRational& o) const { return *this * o.inverse(); }
    GaussRational pow(long k) const;

    bool operator==(const GaussRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }
    // Lexicographic; used only to order containers deterministically.
    bool operator<(const GaussRational& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& g);

/// Dense polynomial in the formal parameter hb over Q(i).
/// Invariant: no trailing zero coefficients (zero polynomial is empty).
class HbarPoly {
public:
    HbarPoly() = default;
    explicit HbarPoly(GaussRational c);
    static HbarPoly variable(); // the polynomial hb

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const GaussRational& leading() const { return coeffs_.back(); }
    GaussRational coeff(int k) const;
    const std::vector<GaussRational>& coeffs() const { return coeffs_; }

    HbarPoly operator+(const HbarPoly& o) const;
    HbarPoly operator-(const HbarPoly& o) const;
    HbarPoly operator-() const;
    HbarPoly operator*(const HbarPoly& o) const;
    HbarPoly scaled(const GaussRational& c) const;
    HbarPoly shifted(int k) const; // multiply by hb^k, k >= 0

    /// Quotient and remainder with respect to a nonzero divisor.
    static void divmod(const HbarPoly& a, const HbarPoly& b, HbarPoly& q, HbarPoly& r);
    /// Monic gcd; gcd(0, 0) = 0.
    static HbarPoly gcd(HbarPoly a, HbarPoly b);

    GaussRational eval(const GaussRational& v) const;

    bool operator==(const HbarPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const HbarPoly& o) const { return !(*this == o); }

private:
    void trim();
    std::vector<GaussRational> coeffs_;
};

/// Rational function in hb over Q(i), the coefficient field of the whole engine.
/// Canonical form: gcd(num, den) = 1, den monic and nonzero.
class HbarScalar {
public:
    HbarScalar() : num_(), den_(HbarPoly(GaussRational(1))) {}
    HbarScalar(long v) : HbarScalar(GaussRational(v)) {}
    explicit HbarScalar(GaussRational c) : num_(HbarPoly(std::move(c))), den_(HbarPoly(GaussRational(1))) {}
    HbarScalar(HbarPoly num, HbarPoly den);

    static HbarScalar zero() { return HbarScalar(); }
    static HbarScalar one() { return HbarScalar(GaussRational(1)); }
    static HbarScalar i() { return HbarScalar(GaussRational::i()); }
    static HbarScalar hbar() { return HbarScalar(HbarPoly::variable(), HbarPoly(GaussRational(1))); }
    /// h = 2i*hb, the original deformation parameter of the brackets.
    static HbarScalar h();
    static HbarScalar rational(long num, long den) { return HbarScalar(GaussRational::rational(num, den)); }

    const HbarPoly& num() const { return num_; }
    const HbarPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when den = 1 and num is a constant.
    bool is_gauss() const { return den_.degree() == 0 && num_.degree() <= 0; }
    GaussRational as_gauss() const;

    HbarScalar operator+(const HbarScalar& o) const;
    HbarScalar operator-(const HbarScalar& o) const;
    HbarScalar operator-() const;
    HbarScalar operator*(const HbarScalar& o) const;
    HbarScalar inverse() const;
    HbarScalar operator/(const HbarScalar& o) const { return *this * o.inverse(); }
    HbarScalar pow(long k) const;

    /// Exact evaluation at hb = v; throws pole_error when the denominator vanishes.
    GaussRational substitute_hbar(const GaussRational& v) const;

    bool operator==(const HbarScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const HbarScalar& o) const { return !(*this == o); }

private:
    void canonicalize();
    HbarPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const HbarScalar& s);

} // namespace qpd
