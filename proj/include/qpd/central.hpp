#pragma once

#include "qpd/qpdmap.hpp"
#include "qpd/report.hpp"

namespace qpd {

/// Matrix with a central right denominator; the shape every negative
/// mu-power lands in. Equality is decided by cross-multiplication.
struct MatrixFraction {
    DerivMatrix num;
    NCPoly den; // central element of the extended algebra

    static MatrixFraction whole(DerivMatrix m);
    MatrixFraction operator*(const MatrixFraction& o) const;
    bool operator==(const MatrixFraction& o) const;
    bool operator!=(const MatrixFraction& o) const { return !(*this == o); }
};

/// The central extension machinery: mu = mu_1 - mu_2 = 2 i s rho with the
/// sign convention s (default +1; both verify), hatt on mu powers and on the
/// quantum radius, and the central-extension identity suite.
class CentralExtension {
public:
    explicit CentralExtension(int sign = +1);

    const Preset& preset() const { return *preset_; }
    int sign() const { return sign_; }

    NCPoly mu() const;                 // 2 i s rho
    NCPoly mu1() const;                // t + i hb + mu/2
    NCPoly mu2() const;                // t + i hb - mu/2

    DerivMatrix hatt_mu_squared() const;        // (mu^2 - 12 hb^2) I - 8 i hb M
    DerivMatrix hatt_mu() const;                // ((mu^2-4hb^2)/mu) I - (4 i hb/mu) M
    DerivMatrix hatt_rho() const;               // ((rho^2+hb^2)/rho) I + (i hb/rho) M
    MatrixFraction hatt_mu_power(int p) const;  // |p| <= 8
    std::pair<DerivMatrix, DerivMatrix> hatt_mu12() const;

    /// hatt extended over the central extension: rho exponents 0 and 1 only
    /// (normal forms never exceed 1; negative powers live in the skew-field).
    DerivMatrix hatt_ext(const NCPoly& a) const;
    NCPoly derive(DerivName d, const NCPoly& a) const; // dt means the shifted derivative
    NCPoly derive_t_unshifted(const NCPoly& a) const;

    // --- verification operations -------------------------------------------
    CheckList ch_identity_L() const;
    CheckList mu_symmetric_check() const;
    CheckList spectral_squares_check() const;
    CheckList hatt_mu_squared_check() const;  // two routes + display-constant report
    CheckList hatt_mu_square_root_check() const;
    CheckList sign_choice_audit() const;      // exactly (1,1) survives the classical limits
    CheckList mu_power_checks() const;        // specializations + coherence for p,q in {-2..3}
    CheckList hatt_mu12_check() const;        // sum rule + extracted derivatives + display report
    CheckList hatt_rho_check() const;         // radius derivative values and classical limits
    CheckList ideal_welldef_check() const;
    CheckList centrality_check() const;

private:
    DerivMatrix spectral_candidate(int eps1, int eps2) const;

    const Preset* preset_;
    int sign_;
    mutable HattEngine engine_;
};

} // namespace qpd
