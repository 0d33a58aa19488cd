#pragma once

#include <string>
#include <vector>

#include "blockshift/partition.hpp"

namespace blockshift {

/// e-runner abacus of a partition. Position j on runner i carries the beta
/// value i + j*e; there is a bead there iff that value lies in the extended
/// beta set. Runner i is full at every position below full_below[i]; the
/// finitely many beads at or above that frontier are listed explicitly.
struct Abacus {
    int e = 2;
    std::vector<int> full_below;
    std::vector<std::vector<int>> beads;  // sorted ascending, all >= full_below[i]

    bool bead_at(int runner, int position) const;
    /// Position of the first gap on the runner (the x_i of an e-core).
    int first_gap(int runner) const;
};

/// Zero-sum integer vector of first-gap positions; parametrises an e-core.
using AbacusParams = std::vector<int>;

Abacus abacus_from_partition(const Partition& lambda, int e);

/// Recovers the partition by gap counting: each bead contributes a part equal
/// to the number of gaps below it (independent of the beta-number route).
Partition partition_from_abacus(const Abacus& abacus);

/// True iff no bead has a gap on its left, i.e. lambda has no e-rim hook.
bool is_e_core(const Partition& lambda, int e);

AbacusParams params_of_core(const Partition& lambda, int e);

/// Direct construction: runner i is full strictly below x_i. Requires sum 0.
Partition core_from_params(const AbacusParams& x);

/// n^0 of the e-core with these parameters: half the squared Euclidean norm.
long long n0_of_core(const AbacusParams& x);

/// n^i = n^0 - x_0 - ... - x_{i-1}; the index is reduced mod e.
long long ni_of_core(const AbacusParams& x, int i);

/// Plain-text rendering, runners as rows of 'o' (bead) and '.' (gap) over
/// positions [-window, window], with '|' marking where position 0 starts.
std::string render_abacus(const Abacus& abacus, int window);

}  // namespace blockshift
