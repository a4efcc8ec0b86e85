#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpd/ncalgebra.hpp"
#include "qpd/report.hpp"

namespace qpd {

/// Square matrix (2x2 or 4x4) over NCPoly entries.
struct DerivMatrix {
    const Preset* preset;
    int size;
    std::vector<NCPoly> e;

    DerivMatrix(const Preset& p, int n)
        : preset(&p), size(n), e(static_cast<std::size_t>(n * n), NCPoly::zero(p)) {}

    static DerivMatrix identity(const Preset& p, int n);
    static DerivMatrix scalar(const Preset& p, int n, const NCPoly& v);

    NCPoly& at(int r, int c) { return e[static_cast<std::size_t>(r * size + c)]; }
    const NCPoly& at(int r, int c) const { return e[static_cast<std::size_t>(r * size + c)]; }

    DerivMatrix operator+(const DerivMatrix& o) const;
    DerivMatrix operator-(const DerivMatrix& o) const;
    DerivMatrix operator-() const;
    DerivMatrix operator*(const DerivMatrix& o) const;
    DerivMatrix scaled(const HbarScalar& c) const;
    /// Entry-wise m_ij * a (the ansatz coefficients multiply from the right).
    DerivMatrix scale_right(const NCPoly& a) const;
    DerivMatrix scale_left(const NCPoly& a) const;
    NCPoly trace() const;

    bool is_zero() const;
    bool operator==(const DerivMatrix& o) const { return size == o.size && e == o.e; }
    bool operator!=(const DerivMatrix& o) const { return !(*this == o); }

    /// "" when zero, else "(r,c): <entry>" for the first nonzero entry.
    std::string first_nonzero() const;
};

enum class DerivName { DtHat, Dx, Dy, Dz };

const char* deriv_name_str(DerivName d);

/// The constant quaternionic units as 4x4 matrices over the
/// extended compact preset, and their 2x2 counterparts hidden in the
/// generator images of the matrix DD.
struct QuaternionUnits {
    DerivMatrix A, B, C;
    static QuaternionUnits units4(const Preset& p);
    static QuaternionUnits units2(const Preset& p);
};

/// Multiplicative map a -> hatt(a) in Mat_4 (the group-like Leibniz form).
/// Caches images of PBW monomials; arguments must be rho-free.
class HattEngine {
public:
    explicit HattEngine(const Preset& p = Preset::u2ext());
    const Preset& preset() const { return *preset_; }
    const DerivMatrix& gen_image(int g) const { return gen_images_[static_cast<std::size_t>(g)]; }
    DerivMatrix of(const NCPoly& a);
    /// M = xA + yB + zC.
    DerivMatrix m_matrix() const;

private:
    const DerivMatrix& monomial_image(const Monomial& m);
    const Preset* preset_;
    std::vector<DerivMatrix> gen_images_;
    DerivMatrix identity_;
    std::map<Monomial, DerivMatrix> cache_;
};

/// Multiplicative map a -> DD(a) in Mat_2 (the compact form used in the
/// skew-field extension). Generator images are fixed explicitly and
/// independently of HattEngine; agreement of the two routes is a theorem the
/// suites check.
class Dmat2Engine {
public:
    explicit Dmat2Engine(const Preset& p = Preset::u2ext());
    const Preset& preset() const { return *preset_; }
    const DerivMatrix& gen_image(int g) const { return gen_images_[static_cast<std::size_t>(g)]; }
    DerivMatrix of(const NCPoly& a);
    DerivMatrix m_matrix() const;

private:
    const DerivMatrix& monomial_image(const Monomial& m);
    const Preset* preset_;
    std::vector<DerivMatrix> gen_images_;
    DerivMatrix identity_;
    std::map<Monomial, DerivMatrix> cache_;
};

/// Recover a single derivative value from a computed matrix.
/// 4x4 layout: first row is i*hb*(dt^, dx, dy, dz).
/// 2x2 layout: DD = i*hb*(dt^+i dz, i dx-dy; i dx+dy, dt^-i dz).
NCPoly extract_from_hatt4(DerivName d, const DerivMatrix& m);
NCPoly extract_from_dmat2(DerivName d, const DerivMatrix& m);

/// Convenience single-derivative queries on rho-free polynomials.
NCPoly qpd_derive(DerivName d, const NCPoly& a, HattEngine& engine);

/// dt without the 2/h shift: dt_plain = dt^ + (i/hb) id.
NCPoly unshift_t(const NCPoly& dt_hat_value, const NCPoly& argument);

// --- verification operations -----------------------------------------------
CheckList verify_leib_table();                               // the sixteen Leibniz permutation relations
CheckList quaternion_table_check();
CheckList hatt_representation_check();                       // images kill the defining relations
CheckList hatt_homomorphism_check(int samples, std::uint64_t seed); // hatt(ab) = hatt(a)hatt(b)
CheckList cross_validate_with_double(int samples, std::uint64_t seed); // sigma route == hatt4 route
CheckList two_sizes_consistency_check(int samples, std::uint64_t seed); // hatt4 vs dmat2 extraction
CheckList m_matrix_ch_check();                               // M^2 - 2i hb M + Cas I = 0

} // namespace qpd
