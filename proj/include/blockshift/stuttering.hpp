#pragma once

#include <vector>

#include "blockshift/abacus.hpp"
#include "blockshift/binmat.hpp"
#include "blockshift/multipartition.hpp"

namespace blockshift {

/// The shift-symmetrised objective: g_l(x) = (1/2)||x||^2 - Ltilde_l(x) with
/// Ltilde_l = (1/p) * sum over j0 of the prefix form L at index
/// (-kappa_l + j0*eta) mod e. For an e-multicore with sigma-stable alpha,
/// f(x^(0..r-1)) = sum_{l,j} g_l(x^(l+jd)) equals n^0 exactly.
///
/// All evaluations are exact: values are returned scaled by 2p^2, and vectors
/// are passed scaled by p, so both integer parameters and the fractional
/// averages (1/p)Z^e are handled without rounding.
class Objective {
public:
    Objective(const Multicharge& kappa, const LevelConfig& config);

    /// 2p^2 * g_l(y/p) for integer y.
    long long g_scaled(const std::vector<int>& y_times_p, int l) const;
    /// 2p^2 * f(x) at integer parameters, one vector per component.
    long long f_scaled(const std::vector<std::vector<int>>& xs) const;
    /// 2p^2 * f<p>(z) at integer parameters, one vector per residue class mod d.
    long long fp_scaled_int(const std::vector<std::vector<int>>& zs) const;
    /// 2p^2 * f<p>(y/p), y integer (the naive averages scaled by p).
    long long fp_scaled_frac(const std::vector<std::vector<int>>& ys_times_p) const;

    const LevelConfig& config() const { return config_; }

private:
    LevelConfig config_;
    Multicharge kappa_;
    std::vector<std::vector<int>> ltilde_indices_;  // per l: the p prefix-form indices
};

/// delta_i = n^i - n^{i+1} for i in {0..eta-1}, from a sigma-stable block.
using DeltaVector = std::vector<int>;

/// Requires an e-multicore whose alpha is sigma-stable. Asserts the abacus
/// identity delta_i = sum_k x^(k)_{i+j0*eta-kappa_k} for every j0.
DeltaVector compute_delta(const Multipartition& cores, const Multicharge& kappa,
                          const LevelConfig& config);

/// ztilde^(l) = (1/p) sum_j x^(l+jd), returned scaled by p. Asserts the exact
/// strong-convexity identity
/// p*f<p>(ztilde) = f(x) - (1/2) sum ||x^(l+jd) - ztilde^(l)||^2.
std::vector<std::vector<int>> naive_average(const Multipartition& cores, const Multicharge& kappa,
                                            const LevelConfig& config);

/// Rounds the fractional averages to z^(0..d-1) in Z^e_0 satisfying the delta
/// constraint, via the relabelling permutations pi_l, gale_ryser_vectors per
/// component, block-sum rectification, and the argmin choice of j0. Asserts
/// integrality of |v^(l)| and |V^[i]|, the delta constraint, and
/// f<p>(z) <= f<p>(ztilde) + (|V| - ||V||^2)/2 in exact arithmetic.
std::vector<std::vector<int>> rectify_parameters(const std::vector<std::vector<int>>& ztilde_times_p,
                                                 const DeltaVector& delta, const Multicharge& kappa,
                                                 const LevelConfig& config);

/// Builds the stuttering witness: e-cores of the z parameters repeated p
/// times, then n^0 - m^0 eta-rim hooks wrapped onto component 0 (first-row
/// rule) and replicated. Output is re-validated from scratch.
Multipartition assemble_stuttering(const std::vector<std::vector<int>>& zs,
                                   const ResidueVector& target_alpha, const Multicharge& kappa,
                                   const LevelConfig& config);

/// Main construction: given a compatible multicharge and an r-partition whose
/// alpha is sigma-stable, produces mu with sigma(mu) = mu and
/// alpha_kappa(mu) = alpha_kappa(lambda).
Multipartition find_stuttering(const Multipartition& lambda, const Multicharge& kappa,
                               const LevelConfig& config);

/// Witness of minimal orbit: mu with alpha_kappa(mu) = alpha_kappa(lambda)
/// and #[mu] = #[alpha], by running find_stuttering under the derived level
/// (p'd, p'eta, p/p') where p' = #[alpha].
Multipartition find_minimal_orbit(const Multipartition& lambda, const Multicharge& kappa,
                                  const LevelConfig& config);

}  // namespace blockshift
