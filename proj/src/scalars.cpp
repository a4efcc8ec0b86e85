#include "qpd/scalars.hpp"

#include <ostream>

namespace qpd {

GaussRational GaussRational::rational(long num, long den) {
    if (den == 0) throw division_by_zero("rational literal with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRational(q);
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero Gaussian rational");
    mpq_class n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussRational GaussRational::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    GaussRational acc(1);
    GaussRational base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& g) {
    if (g.is_zero()) return os << "0";
    bool wrote = false;
    if (g.re() != 0) {
        os << g.re().get_str();
        wrote = true;
    }
    if (g.im() != 0) {
        if (wrote && g.im() > 0) os << "+";
        if (g.im() == -1)
            os << "-";
        else if (g.im() != 1)
            os << g.im().get_str() << "*";
        os << "i";
    }
    return os;
}

HbarPoly::HbarPoly(GaussRational c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

HbarPoly HbarPoly::variable() {
    HbarPoly p;
    p.coeffs_ = {GaussRational(0), GaussRational(1)};
    return p;
}

GaussRational HbarPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return GaussRational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

void HbarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

HbarPoly HbarPoly::operator+(const HbarPoly& o) const {
    HbarPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        GaussRational c = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
        r.coeffs_[k] = std::move(c);
    }
    r.trim();
    return r;
}

HbarPoly HbarPoly::operator-(const HbarPoly& o) const { return *this + (-o); }

HbarPoly HbarPoly::operator-() const {
    HbarPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

HbarPoly HbarPoly::operator*(const HbarPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    HbarPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, GaussRational(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            r.coeffs_[a + b] = r.coeffs_[a + b] + coeffs_[a] * o.coeffs_[b];
    r.trim();
    return r;
}

HbarPoly HbarPoly::scaled(const GaussRational& c) const {
    if (c.is_zero()) return {};
    HbarPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
}

HbarPoly HbarPoly::shifted(int k) const {
    if (is_zero()) return {};
    HbarPoly r;
    r.coeffs_.assign(static_cast<std::size_t>(k), GaussRational(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

void HbarPoly::divmod(const HbarPoly& a, const HbarPoly& b, HbarPoly& q, HbarPoly& r) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    q = HbarPoly();
    r = a;
    const GaussRational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        GaussRational c = r.leading() * lead_inv;
        HbarPoly term = HbarPoly(c).shifted(shift);
        q = q + term;
        r = r - b * term;
    }
}

HbarPoly HbarPoly::gcd(HbarPoly a, HbarPoly b) {
    while (!b.is_zero()) {
        HbarPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inverse());
    return a;
}

GaussRational HbarPoly::eval(const GaussRational& v) const {
    GaussRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

HbarScalar::HbarScalar(HbarPoly num, HbarPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("scalar with zero denominator");
    canonicalize();
}

HbarScalar HbarScalar::h() { return HbarScalar(GaussRational(0, 2)) * hbar(); }

void HbarScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = HbarPoly(GaussRational(1));
        return;
    }
    HbarPoly g = HbarPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        HbarPoly q, r;
        HbarPoly::divmod(num_, g, q, r);
        num_ = q;
        HbarPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    GaussRational lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

bool HbarScalar::is_one() const { return den_.degree() == 0 && num_ == den_; }

GaussRational HbarScalar::as_gauss() const {
    if (!is_gauss()) throw std::logic_error("scalar is not a Gaussian rational");
    return num_.coeff(0);
}

HbarScalar HbarScalar::operator+(const HbarScalar& o) const {
    return HbarScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

HbarScalar HbarScalar::operator-(const HbarScalar& o) const {
    return HbarScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

HbarScalar HbarScalar::operator-() const {
    HbarScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

HbarScalar HbarScalar::operator*(const HbarScalar& o) const {
    return HbarScalar(num_ * o.num_, den_ * o.den_);
}

HbarScalar HbarScalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero scalar");
    return HbarScalar(den_, num_);
}

HbarScalar HbarScalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    HbarScalar acc = one();
    HbarScalar base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

GaussRational HbarScalar::substitute_hbar(const GaussRational& v) const {
    GaussRational d = den_.eval(v);
    if (d.is_zero()) throw pole_error("denominator vanishes at the substituted value of hb");
    return num_.eval(v) * d.inverse();
}

std::ostream& operator<<(std::ostream& os, const HbarScalar& s) {
    auto write_poly = [&os](const HbarPoly& p) {
        if (p.is_zero()) {
            os << "0";
            return;
        }
        bool first = true;
        for (int k = p.degree(); k >= 0; --k) {
            GaussRational c = p.coeff(k);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            os << "(" << c << ")";
            if (k >= 1) os << "*hb";
            if (k >= 2) os << "^" << k;
            first = false;
        }
    };
    write_poly(s.num());
    if (!(s.den().degree() == 0 && s.den().coeff(0).is_one())) {
        os << " / [";
        write_poly(s.den());
        os << "]";
    }
    return os;
}

} // namespace qpd
