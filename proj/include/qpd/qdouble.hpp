#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qpd/ncalgebra.hpp"
#include "qpd/report.hpp"

namespace qpd {

/// Exponent-free multiset of derivative generators (i,j), kept sorted:
/// the algebra A is commutative (Eq. D1 D2 = D2 D1 holds by construction here,
/// and sigma is checked to be compatible with it).
using AMono = std::vector<std::pair<int, int>>;

struct MixedLetter {
    bool is_a;
    int i, j; // 1-based matrix indices
    auto operator<=>(const MixedLetter&) const = default;
};
using MixedWord = std::vector<MixedLetter>;
using MixedPoly = std::map<MixedWord, HbarScalar>;

/// Term of B (x) A: free (not PBW-reduced) B-word on the left, commutative
/// A-multiset on the right. Keeping the B-word free is what lets the
/// compatibility check see ideal elements before reduction.
struct SplitTerm {
    std::vector<std::pair<int, int>> bword;
    AMono amono;
    auto operator<=>(const SplitTerm&) const = default;
};
using DoubleElement = std::map<SplitTerm, HbarScalar>;

/// The quantum double (A, B) for U(gl(N)_h): permutation map, counit action,
/// coproduct and the consistency checks of the defining relations.
class QuantumDouble {
public:
    explicit QuantumDouble(int n);

    int n() const { return n_; }
    const Preset& gl() const;

    /// Move every derivative generator right of every l-generator.
    /// `shifted` selects the rule for the hatted generators
    /// (D-hat: D1_hat L2 = L2 D1_hat + h D1_hat P12); otherwise
    /// D1 L2 = L2 D1 + P12 + h D1 P12 is applied.
    DoubleElement sigma(const MixedPoly& e, bool shifted = false,
                        RewriteOrder order = RewriteOrder::Leftmost) const;

    /// Counit action a |> b = (I (x) eps) sigma(a (x) b); b lives in U(gl(N)_h).
    NCPoly act(const AMono& a, const NCPoly& b) const;
    /// Shifted-generator action: dhat_i^j = d_i^j + delta_i^j / h.
    NCPoly act_shifted(int i, int j, const NCPoly& b) const;

    using Tensor2 = std::map<std::pair<AMono, AMono>, HbarScalar>;
    using Tensor3 = std::map<std::tuple<AMono, AMono, AMono>, HbarScalar>;

    /// Delta(d_i^j) = d_i^j (x) 1 + 1 (x) d_i^j + h sum_k d_k^j (x) d_i^k.
    Tensor2 coproduct_gen(int i, int j) const;
    Tensor2 coproduct_word(const AMono& w) const;
    /// Leibniz action through the coproduct on a split pair of arguments.
    NCPoly coproduct_act(const AMono& w, const NCPoly& b1, const NCPoly& b2) const;

    // --- verification operations -------------------------------------------
    CheckList check_compatibility() const;       // sigma preserves the defining ideals
    CheckList check_coassociativity() const;
    CheckList elements_ideal_check() const;      // commutation-ideal elements -> 0
    CheckList second_order_action_check() const; // D1 |> (L2 L3) closed form
    CheckList transpose_variant_check() const;   // transposed permutation system, h -> -h
    CheckList shifted_permute_check(int samples, std::uint64_t seed) const;
    CheckList grouplike_check(int samples, std::uint64_t seed) const; // Delta(DD) = DD (x). DD
    CheckList act_well_defined_check(int samples, std::uint64_t seed) const;
    CheckList sigma_confluence_check(int samples, std::uint64_t seed) const;
    CheckList a_commutativity_check() const;

private:
    NCPoly collapse_counit(const DoubleElement& d) const;
    MixedWord mixed_from(const AMono& a, const std::vector<int>& bletters) const;

    int n_;
};

} // namespace qpd
