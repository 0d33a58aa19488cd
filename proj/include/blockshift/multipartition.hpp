#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "blockshift/partition.hpp"

namespace blockshift {

/// Level data (d, eta, p) with e = eta*p and r = d*p. All positive, e >= 2.
struct LevelConfig {
    int d = 1;
    int eta = 2;
    int p = 1;

    LevelConfig(int d_, int eta_, int p_) : d(d_), eta(eta_), p(p_) {
        require(d >= 1 && eta >= 1 && p >= 1, "d, eta, p must be positive");
        require(e() >= 2, "e = eta*p must be >= 2");
    }

    int e() const { return eta * p; }
    int r() const { return d * p; }

    friend bool operator==(const LevelConfig&, const LevelConfig&) = default;
};

/// Multicharge: r residue classes mod e, stored as representatives in {0..e-1}.
using Multicharge = std::vector<int>;

/// Element of Q^+ in the basis {alpha_0, .., alpha_{e-1}}: e residue counts.
using ResidueVector = std::vector<int>;

/// r-tuple of partitions.
using Multipartition = std::vector<Partition>;

int multipartition_size(const Multipartition& lambda);

/// kappa_{k+d} = kappa_k + eta for all k, cyclically.
bool is_compatible(const Multicharge& kappa, const LevelConfig& config);

/// alpha_kappa(lambda): componentwise sum of shifted residue vectors.
ResidueVector alpha_kappa(const Multipartition& lambda, const Multicharge& kappa, int e);

/// sigma_{d,p}: cyclic rotation by d components.
Multipartition shift_multipartition(const Multipartition& lambda, const LevelConfig& config);

/// sigma_{eta,p}: alpha_i -> alpha_{i+eta}.
ResidueVector shift_alpha(const ResidueVector& alpha, const LevelConfig& config);

/// Smallest j >= 1 with sigma^j fixing the input; always divides p.
int orbit_size_alpha(const ResidueVector& alpha, const LevelConfig& config);
int orbit_size_multipartition(const Multipartition& lambda, const LevelConfig& config);

/// Componentwise e-cores and the total number of e-hooks removed.
std::pair<Multipartition, int> multicore(const Multipartition& lambda, int e);

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Visits every r-partition of n exactly once: compositions of n into r parts
/// in lexicographic order, partitions of each part in reverse-lexicographic
/// order, rightmost component fastest.
void for_each_r_partition(int n, int r, const std::function<void(const Multipartition&)>& visit);

}  // namespace blockshift
