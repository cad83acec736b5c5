#pragma once

#include <optional>

#include "wreathfuse/algebra.hpp"
#include "wreathfuse/shapes.hpp"

namespace wrf {

enum class FusionMode { Full, AbelianGenerators };

// ---------------------------------------------------------------------------
// FusionConfig: everything a constructed idempotent needs — the group, its
// spectral data, the ambient algebra C[G wr S_n], the construction mode and
// the class-sum subset in use.
// ---------------------------------------------------------------------------
struct FusionConfig {
    GroupPtr group;
    ConjugacyData classes;
    CharacterTable chars;
    SpectralData spectral;
    AlgebraPtr algebra;
    int n = 0;
    FusionMode mode = FusionMode::Full;
    std::vector<int> class_subset;           // class indices entering the products
    std::optional<AbelianSpectrum> abelian;  // engaged in AbelianGenerators mode

    int m() const { return spectral.m; }
    std::vector<int> degrees() const { return spectral.degrees; }
};

/// Build a config. `subset` (when given) restricts the class sums used by
/// both constructions; it must still distinguish all irreducibles pairwise.
/// `abelian_gens` overrides the canonical generator choice in abelian mode.
FusionConfig make_fusion_config(GroupPtr group, int n,
                                FusionMode mode = FusionMode::Full,
                                const std::vector<int>* subset = nullptr,
                                const std::vector<int>* abelian_gens = nullptr);

// ---------------------------------------------------------------------------
// Baxterized transpositions  s_i(c, c') = s_i + e_{i,i+1} / (c - c').
// ---------------------------------------------------------------------------

/// Rational-function form; `c` may involve the active variable.
RatAlgebraElement baxterized_s(const AlgebraPtr& alg, int i, const RatFun& c,
                               const Cyclotomic& cprime);
/// Scalar form. Throws PoleError when c = c'.
AlgebraElement baxterized_s_at(const AlgebraPtr& alg, int i, const Cyclotomic& c,
                               const Cyclotomic& cprime);

/// The spectral factor of one slot at a fixed position: the product over the
/// configured class sums (or abelian generators) of the polynomial form of
/// prod(v - xi) / (v - class sum) evaluated at v = xi_position.
AlgebraElement spectral_factor(const FusionConfig& cfg, int slot, int position);

/// Product over all slots of the spectral factors dictated by the tableau.
AlgebraElement gamma_eval(const FusionConfig& cfg, const StandardMultiTableau& t);

/// F-type normalization for the shape in the configured mode.
Cyclotomic fg_coefficient(const FusionConfig& cfg, const MultiPartition& shape);

/// The idempotent by consecutive evaluation: accumulate the slot-1 spectral
/// factor, then for k = 2..n left-multiply the chain factor
/// s_{k-1}(u, cG_{k-1}) ... s_1(u, cG_1) s_1 ... s_{k-1} times the slot-k
/// spectral factor and evaluate the single active variable at u = cG_k,
/// reducing every coefficient first; finally scale by 1/(F * FG).
/// A surviving pole throws PoleError naming the evaluation step.
AlgebraElement fusion_idempotent(const FusionConfig& cfg, const StandardMultiTableau& t);

/// Independent construction: the recursion over the restriction chain with
/// Jucys-Murphy factors over addable nodes of distinct content and class-sum
/// factors over addable nodes of distinct eigenvalue.
AlgebraElement jm_idempotent(const FusionConfig& cfg, const StandardMultiTableau& t);

} // namespace wrf
