#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpd/scalars.hpp"

namespace qpd {

enum class PresetKind { GlN, U2, U2Ext };

/// A fixed algebra: generator list, PBW order, structure constants, and (for
/// the central extension) the rho^2 rewrite target.
///
/// Generator order: t < x < y < z for the compact presets; row-major l[i,j]
/// for GL(N). rho is not a generator slot; it lives in the monomial's rho
/// exponent and commutes with everything.
class Preset {
public:
    static const Preset& gl(int n);
    static const Preset& u2();
    static const Preset& u2ext();
    /// Commutative target of the classical limit: zero brackets, rho^2 -> x^2+y^2+z^2.
    static const Preset& u2ext_classical();

    PresetKind kind() const { return kind_; }
    int n() const { return n_; }
    int num_gens() const { return num_gens_; }
    bool has_rho() const { return has_rho_; }
    bool classical() const { return classical_; }

    std::string gen_name(int g) const;
    /// Generator id for GL(N): l[i,j] with 1-based indices.
    int gl_index(int i, int j) const;

    /// [g_a, g_b] as a list of (generator, coefficient); empty when they commute.
    const std::vector<std::pair<int, HbarScalar>>& bracket(int a, int b) const {
        return brackets_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }

    bool operator==(const Preset& o) const { return this == &o; }

private:
    Preset() = default;
    static Preset make_gl(int n);
    static Preset make_u2(bool with_rho, bool classical);

    PresetKind kind_ = PresetKind::U2;
    int n_ = 2;
    int num_gens_ = 4;
    bool has_rho_ = false;
    bool classical_ = false;
    std::vector<std::vector<std::vector<std::pair<int, HbarScalar>>>> brackets_;
};

/// PBW monomial: exponent per generator plus an integer rho exponent
/// (nonzero only in the U2Ext presets).
struct Monomial {
    std::vector<int> exps;
    int rho = 0;

    int total_degree() const {
        int d = rho;
        for (int e : exps) d += e;
        return d;
    }
    bool is_one() const {
        if (rho != 0) return false;
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return rho == o.rho && exps == o.exps; }
    bool operator<(const Monomial& o) const {
        if (exps != o.exps) return exps < o.exps;
        return rho < o.rho;
    }
};

/// A raw word over a preset's generators: letters in arbitrary (not yet
/// normal-ordered) sequence plus a rho exponent.
struct Word {
    std::vector<int> letters;
    int rho = 0;
};

/// Reduction strategy for the word rewriting; both must agree (confluence).
enum class RewriteOrder { Leftmost, Rightmost };

/// Element of the chosen algebra in PBW normal form.
///
/// Invariants: no zero coefficients; monomial rho exponents <= 1 (rho^2 is
/// rewritten to x^2+y^2+z^2+hb^2); negative rho levels are held over a common
/// C^k denominator with C not dividing the numerator, which makes
/// representatives unique on the localization by rho.
class NCPoly {
public:
    explicit NCPoly(const Preset& p) : preset_(&p) {}

    static NCPoly zero(const Preset& p) { return NCPoly(p); }
    static NCPoly scalar(const Preset& p, const HbarScalar& c);
    static NCPoly one(const Preset& p) { return scalar(p, HbarScalar::one()); }
    static NCPoly generator(const Preset& p, int g);
    static NCPoly rho_power(const Preset& p, int k);
    static NCPoly monomial(const Preset& p, Monomial m, const HbarScalar& c);
    /// Normal form of a raw sum of scaled words.
    static NCPoly from_words(const Preset& p, const std::vector<std::pair<HbarScalar, Word>>& ws,
                             RewriteOrder order = RewriteOrder::Leftmost);

    const Preset& preset() const { return *preset_; }
    const std::map<Monomial, HbarScalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    HbarScalar scalar_value() const; // zero scalar for the zero element
    int total_degree() const;       // 0 for the zero element

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly scaled(const HbarScalar& c) const;
    NCPoly pow(int k) const; // k >= 0
    bool operator==(const NCPoly& o) const;
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    /// Coefficient-wise hb -> 0 over the commutative classical preset.
    /// Throws pole_error when a coefficient has a pole at hb = 0.
    NCPoly classical_limit() const;

    /// Map this polynomial into another preset by substituting each generator
    /// with its image (images[g] lives in the target preset). rho maps to rho.
    NCPoly substituted(const Preset& target, const std::vector<NCPoly>& images) const;

    /// The Casimir-type element x^2+y^2+z^2+hb^2 (hb^2 dropped in the
    /// classical preset); this is what rho^2 rewrites to.
    static NCPoly casimir(const Preset& p);

    /// Exact division by the central casimir element; nullopt when not divisible.
    static std::optional<NCPoly> divide_by_casimir(const NCPoly& v);

private:
    void add_term(const Monomial& m, const HbarScalar& c);
    void canonicalize();

    const Preset* preset_;
    std::map<Monomial, HbarScalar> terms_;
};

inline NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

/// t - iz, -ix - y; -ix + y, t + iz  <-> a, b; c, d. Images of gl(2)
/// generators in the compact algebra and back.
NCPoly gl2_to_u2(const NCPoly& a);
NCPoly u2_to_gl2(const NCPoly& a);
/// Same substitution, landing in U2Ext (used by the sigma-route oracle).
NCPoly u2_to_u2ext(const NCPoly& a);

} // namespace qpd
