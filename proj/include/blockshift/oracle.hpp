#pragma once

#include <map>
#include <string>
#include <vector>

#include "blockshift/multipartition.hpp"

namespace blockshift {

/// Complete block decomposition of P^kappa_n at desk scale.
struct BlockTable {
    struct Block {
        std::vector<Multipartition> members;
        int alpha_orbit = 1;
        int min_member_orbit = 0;
        int max_member_orbit = 0;
    };

    std::map<ResidueVector, Block> blocks;
    unsigned long long total = 0;  // cross-checked against count_r_partitions
};

/// Number of r-partitions of n via the generating-function convolution;
/// saturates instead of overflowing.
unsigned long long count_r_partitions(int n, int r);

/// Enumerates P^kappa_n grouped by alpha. Refuses to start if the number of
/// r-partitions exceeds `cap`.
BlockTable enumerate_blocks(int n, const Multicharge& kappa, const LevelConfig& config,
                            unsigned long long cap = 1000000);

struct MinmaxReport {
    int n = 0;
    int min_orbit = 0;
    int max_orbit = 0;
    int expected_min = 0;
    int expected_max = 0;
    bool pass = false;
};

/// Checks max orbit = p (n >= 1) and min orbit = p/gcd(p, n) over all
/// r-partitions of n.
MinmaxReport verify_minmax(int n, const LevelConfig& config);

struct TheoremReport {
    int n = 0;
    int blocks_checked = 0;
    unsigned long long total = 0;
    int invariant_errors = 0;
    std::vector<std::string> failures;
    bool pass = false;
};

/// For every block alpha of P^kappa_n: the enumeration confirms
/// min #[lambda] = #[alpha], find_minimal_orbit lands in the block with that
/// orbit, its witness is sigma^j-invariant for every j fixing alpha, and
/// whenever a block carries two distinct orbit sizes its maximum is p.
/// Memory-light: members are streamed, only per-block summaries are kept.
TheoremReport verify_main_theorem(int n, const Multicharge& kappa, const LevelConfig& config,
                                  unsigned long long cap = 1000000);

}  // namespace blockshift
