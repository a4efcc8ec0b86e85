#pragma once

#include <array>
#include <map>
#include <string>

#include "qpd/qpdmap.hpp"
#include "qpd/report.hpp"

namespace qpd {

/// Coefficients of the linear element b = a0 t + a1 x + a2 y + a3 z.
struct AlphaVector {
    GaussRational a0, a1, a2, a3;

    GaussRational norm3_sq() const { return a1 * a1 + a2 * a2 + a3 * a3; }
    bool is_unit() const { return a0.is_zero() && norm3_sq().is_one(); }
    std::string str() const;

    static AlphaVector axis_x() { return {GaussRational(0), GaussRational(1), GaussRational(0), GaussRational(0)}; }
    static AlphaVector axis_z() { return {GaussRational(0), GaussRational(0), GaussRational(0), GaussRational(1)}; }
    static AlphaVector three_four() {
        return {GaussRational(0), GaussRational::rational(3, 5), GaussRational::rational(4, 5), GaussRational(0)};
    }
};

/// Polynomial in two commuting indeterminates rho^, b^ over the scalar field;
/// no rho^2 relation is imposed at this level.
class CommPoly {
public:
    CommPoly() = default;
    explicit CommPoly(const HbarScalar& c);

    static CommPoly rho_hat();
    static CommPoly b_hat();

    const std::map<std::pair<int, int>, HbarScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CommPoly operator+(const CommPoly& o) const;
    CommPoly operator-(const CommPoly& o) const;
    CommPoly operator-() const;
    CommPoly operator*(const CommPoly& o) const;
    CommPoly scaled(const HbarScalar& c) const;
    CommPoly pow(int k) const;
    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CommPoly& o) const { return !(*this == o); }

    /// Ring homomorphism rho^ -> rho, b^ -> a0 t + a1 x + a2 y + a3 z.
    NCPoly embed(const AlphaVector& alpha, const Preset& target) const;
    /// Coefficient-wise hb -> 0 (for classical-limit comparisons).
    CommPoly at_hbar_zero() const;

    std::string str() const;

private:
    void add(int er, int eb, const HbarScalar& c);
    std::map<std::pair<int, int>, HbarScalar> terms_; // (rho^ exp, b^ exp) -> coeff
};

/// Matrix numerator with a right denominator from the commutative subalgebra
/// generated by rho and b; semantics num * embed(den)^{-1}, inverse strictly
/// rightmost.
struct RightFraction {
    DerivMatrix num;
    CommPoly den;
};

/// Scalar-valued right fraction for the derivative results.
struct ScalarFraction {
    NCPoly num;
    CommPoly den;
};

/// Equality of right fractions by the cross-multiplication criterion
/// X d^{-1} = Y f^{-1}  <=>  X embed(f) = Y embed(d), valid because the
/// denominators commute with each other.
bool fractions_equal(const ScalarFraction& a, const ScalarFraction& b, const AlphaVector& alpha,
                     const Preset& target);

using AlgebraVector3 = std::array<NCPoly, 3>;

/// Componentwise vector product with noncommutative products kept in order.
AlgebraVector3 cross_product(const AlgebraVector3& u, const AlgebraVector3& v);

/// The skew-field tower: explicit DD(rho), DD(b), their CH identities, the
/// ansatz inverse of DD(rho - b), and the final derivative formulas.
class SkewFieldExtension {
public:
    SkewFieldExtension();

    const Preset& preset() const { return *preset_; }

    DerivMatrix dmat_rho() const; // (1/rho)(rho^2+hb^2-hb z, -hb(x+iy); -hb(x-iy), rho^2+hb^2+hb z)
    DerivMatrix dmat_b(const AlphaVector& alpha) const; // (b + i hb a0) I - hb N
    DerivMatrix n_matrix(const AlphaVector& alpha) const;
    RightFraction invert_dmat_b(const AlphaVector& alpha) const;

    /// Extend DD over rho exponents {0, 1} (multiplicatively, via dmat_rho).
    DerivMatrix dmat_ext(const NCPoly& a) const;

    struct LinearSystem {
        std::array<std::array<CommPoly, 4>, 4> m;
        std::array<CommPoly, 4> rhs;
    };
    /// Derived by left-multiplying the ansatz by DD(rho)-DD(b) in the abstract
    /// basis {I, R, B, RB} and reducing with the CH identities; rows with a
    /// negative leading unknown are sign-normalized so it enters positively.
    LinearSystem build_linear_system() const;

    struct CramerSolution {
        std::array<CommPoly, 4> num;
        CommPoly den;
    };
    CramerSolution cramer_solve(const LinearSystem& sys) const; // throws on singular system

    /// a_i * d' as polynomials: (2(rho^2+b^2-3 b rho-hb^2), 3b-rho, 3rho-b, -2)
    /// with d' = (rho-b)((rho-b)^2-4hb^2).
    std::array<CommPoly, 4> cleared_coefficients() const;
    CommPoly ansatz_denominator() const;

    /// Numerator of DD(c)^{-1}: I a~0 + R a~1 + B a~2 + RB a~3.
    DerivMatrix c_inverse_numerator(const AlphaVector& alpha) const;

    struct GradientResult {
        ScalarFraction dt; // unshifted time derivative of 1/(rho-b)
        std::array<ScalarFraction, 3> grad;
    };
    GradientResult qpd_of_c_inverse(const AlphaVector& alpha) const;

    // --- verification operations -------------------------------------------
    CheckList dmat_b_check(const AlphaVector& alpha) const;     // vs dmat2 by linearity; N^2
    CheckList invert_dmat_b_check(const AlphaVector& alpha) const;
    CheckList ch_check_rho() const;                             // quadratic and factorized CH for DD(rho)
    CheckList ch_check_b(const AlphaVector& alpha) const;       // (DD(b) - b I)^2 = |a|^2 hb^2 I
    CheckList commute_check_rho_b(const AlphaVector& alpha) const;
    CheckList scalar_commutation_check(const AlphaVector& alpha) const;
    CheckList linear_system_check() const;                      // derived system equals its closed form
    CheckList cramer_check() const;                             // solution equals its closed form
    CheckList two_sided_inverse_check(const AlphaVector& alpha) const;
    CheckList negative_control_check(const AlphaVector& alpha) const; // corrupted a~1 must fail
    CheckList gradient_check(const AlphaVector& alpha) const;   // final formulas, cross-multiplied
    CheckList classical_limit_check(const AlphaVector& alpha) const;
    CheckList cross_product_check() const;

private:
    void require_unit(const AlphaVector& alpha) const;
    NCPoly b_poly(const AlphaVector& alpha) const;
    AlgebraVector3 rho_vec() const;

    const Preset* preset_;
    mutable Dmat2Engine engine_;
};

} // namespace qpd
