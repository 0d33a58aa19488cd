#include "blockshift/abacus.hpp"

#include <algorithm>
#include <numeric>

namespace blockshift {

bool Abacus::bead_at(int runner, int position) const {
    const auto& row = beads[static_cast<std::size_t>(runner)];
    if (position < full_below[static_cast<std::size_t>(runner)]) return true;
    return std::binary_search(row.begin(), row.end(), position);
}

int Abacus::first_gap(int runner) const {
    const auto& row = beads[static_cast<std::size_t>(runner)];
    int j = full_below[static_cast<std::size_t>(runner)];
    for (int t = 0; t < static_cast<int>(row.size()); ++t) {
        if (row[static_cast<std::size_t>(t)] != j) return j;
        ++j;
    }
    return j;
}

Abacus abacus_from_partition(const Partition& lambda, int e) {
    require(e >= 2, "e must be >= 2");
    const BetaNumber beta = beta_number(lambda);
    const int len = static_cast<int>(beta.size());
    Abacus abacus;
    abacus.e = e;
    abacus.full_below.resize(static_cast<std::size_t>(e));
    abacus.beads.resize(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        // tail values <= -(len+1) on this runner: positions j with i + j*e <= -(len+1)
        abacus.full_below[static_cast<std::size_t>(i)] = floor_div(-(len + 1) - i, e) + 1;
    }
    for (int value : beta) {
        int i = mod(value, e);
        abacus.beads[static_cast<std::size_t>(i)].push_back((value - i) / e);
    }
    for (auto& row : abacus.beads) std::sort(row.begin(), row.end());
    return abacus;
}

namespace {

// Number of gaps strictly below the given beta value across all runners.
int gaps_below(const Abacus& abacus, int value) {
    int count = 0;
    for (int i = 0; i < abacus.e; ++i) {
        const auto& row = abacus.beads[static_cast<std::size_t>(i)];
        int lo = abacus.full_below[static_cast<std::size_t>(i)];
        // positions j >= lo with i + j*e < value
        int hi = floor_div(value - 1 - i, abacus.e);  // largest j with i + j*e < value
        if (hi < lo) continue;
        int positions = hi - lo + 1;
        int beads_in_range =
            static_cast<int>(std::upper_bound(row.begin(), row.end(), hi) - row.begin());
        count += positions - beads_in_range;
    }
    return count;
}

}  // namespace

Partition partition_from_abacus(const Abacus& abacus) {
    std::vector<int> parts;
    for (int i = 0; i < abacus.e; ++i)
        for (int j : abacus.beads[static_cast<std::size_t>(i)]) {
            int part = gaps_below(abacus, i + j * abacus.e);
            if (part > 0) parts.push_back(part);
        }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

bool is_e_core(const Partition& lambda, int e) {
    require(e >= 2, "e must be >= 2");
    const BetaNumber beta = beta_number(lambda);
    for (int value : beta)
        if (!beta_contains(beta, value - e)) return false;
    return true;
}

AbacusParams params_of_core(const Partition& lambda, int e) {
    require(is_e_core(lambda, e), "partition is not an e-core");
    const Abacus abacus = abacus_from_partition(lambda, e);
    AbacusParams x(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) x[static_cast<std::size_t>(i)] = abacus.first_gap(i);
    ensure(std::accumulate(x.begin(), x.end(), 0) == 0, "core parameters must sum to zero");
    return x;
}

Partition core_from_params(const AbacusParams& x) {
    const int e = static_cast<int>(x.size());
    require(e >= 2, "parameter vector must have length e >= 2");
    require(std::accumulate(x.begin(), x.end(), 0) == 0, "parameters must sum to zero");
    int max_abs = 0;
    for (int xi : x) max_abs = std::max(max_abs, std::abs(xi));
    // below -bound every position is a bead on every runner
    const int bound = e * (max_abs + 2);
    std::vector<int> values;
    for (int i = 0; i < e; ++i)
        for (int j = x[static_cast<std::size_t>(i)] - 1; i + j * e >= -bound; --j)
            values.push_back(i + j * e);
    std::sort(values.begin(), values.end(), std::greater<int>());
    std::vector<int> parts;
    for (std::size_t a = 0; a < values.size(); ++a) {
        int part = values[a] + static_cast<int>(a) + 1;
        if (part <= 0) break;
        parts.push_back(part);
    }
    return Partition(parts);
}

long long n0_of_core(const AbacusParams& x) {
    require(std::accumulate(x.begin(), x.end(), 0) == 0, "parameters must sum to zero");
    long long sq = 0;
    for (int xi : x) sq += static_cast<long long>(xi) * xi;
    ensure(sq % 2 == 0, "squared norm of a zero-sum vector is even");
    return sq / 2;
}

long long ni_of_core(const AbacusParams& x, int i) {
    const int e = static_cast<int>(x.size());
    long long value = n0_of_core(x);
    for (int t = 0; t < mod(i, e); ++t) value -= x[static_cast<std::size_t>(t)];
    return value;
}

std::string render_abacus(const Abacus& abacus, int window) {
    require(window >= 1, "window must be >= 1");
    std::string out;
    for (int i = 0; i < abacus.e; ++i) {
        out += "runner " + std::to_string(i) + ": ";
        for (int j = -window; j <= window; ++j) {
            if (j == 0) out += '|';
            out += abacus.bead_at(i, j) ? 'o' : '.';
        }
        out += '\n';
    }
    return out;
}

}  // namespace blockshift
