#include "blockshift/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "blockshift/stuttering.hpp"

namespace blockshift {

namespace {

unsigned long long saturating_add(unsigned long long a, unsigned long long b) {
    const unsigned long long cap = std::numeric_limits<unsigned long long>::max();
    return a > cap - b ? cap : a + b;
}

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    const unsigned long long cap = std::numeric_limits<unsigned long long>::max();
    return a > cap / b ? cap : a * b;
}

std::vector<unsigned long long> single_partition_counts(int n) {
    std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
    counts[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m)
            counts[static_cast<std::size_t>(m)] = saturating_add(
                counts[static_cast<std::size_t>(m)], counts[static_cast<std::size_t>(m - part)]);
    return counts;
}

std::string alpha_to_string(const ResidueVector& alpha) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out << ',';
        out << alpha[i];
    }
    out << ']';
    return out.str();
}

// Component identifier (size, index into partitions_of(size)); rotating the
// identifier tuple is much cheaper than rotating the partitions themselves.
struct ComponentId {
    int size = 0;
    int index = 0;

    friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

std::vector<int> divisors_of(int p) {
    std::vector<int> divisors;
    for (int j = 1; j <= p; ++j)
        if (p % j == 0) divisors.push_back(j);
    return divisors;
}

}  // namespace

unsigned long long count_r_partitions(int n, int r) {
    require(n >= 0 && r >= 1, "need n >= 0 and r >= 1");
    const auto single = single_partition_counts(n);
    std::vector<unsigned long long> acc(static_cast<std::size_t>(n) + 1, 0);
    acc[0] = 1;
    for (int component = 0; component < r; ++component) {
        std::vector<unsigned long long> next(static_cast<std::size_t>(n) + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[static_cast<std::size_t>(a + b)] =
                    saturating_add(next[static_cast<std::size_t>(a + b)],
                                   saturating_mul(acc[static_cast<std::size_t>(a)],
                                                  single[static_cast<std::size_t>(b)]));
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(n)];
}

BlockTable enumerate_blocks(int n, const Multicharge& kappa, const LevelConfig& config,
                            unsigned long long cap) {
    const int e = config.e();
    const int r = config.r();
    require(static_cast<int>(kappa.size()) == r, "multicharge length must equal r");
    const unsigned long long expected = count_r_partitions(n, r);
    require(expected <= cap, "enumeration cap exceeded");

    BlockTable table;
    for_each_r_partition(n, r, [&](const Multipartition& lambda) {
        const ResidueVector alpha = alpha_kappa(lambda, kappa, e);
        const int orbit = orbit_size_multipartition(lambda, config);
        auto& block = table.blocks[alpha];
        if (block.members.empty()) {
            block.alpha_orbit = orbit_size_alpha(alpha, config);
            block.min_member_orbit = orbit;
            block.max_member_orbit = orbit;
        }
        block.members.push_back(lambda);
        block.min_member_orbit = std::min(block.min_member_orbit, orbit);
        block.max_member_orbit = std::max(block.max_member_orbit, orbit);
        ++table.total;
    });
    ensure(table.total == expected, "enumeration count disagrees with the generating function");
    return table;
}

MinmaxReport verify_minmax(int n, const LevelConfig& config) {
    MinmaxReport report;
    report.n = n;
    int min_orbit = config.p + 1;
    int max_orbit = 0;
    for_each_r_partition(n, config.r(), [&](const Multipartition& lambda) {
        const int orbit = orbit_size_multipartition(lambda, config);
        min_orbit = std::min(min_orbit, orbit);
        max_orbit = std::max(max_orbit, orbit);
    });
    report.min_orbit = min_orbit;
    report.max_orbit = max_orbit;
    report.expected_min = config.p / std::gcd(config.p, n);
    report.expected_max = n >= 1 ? config.p : 1;
    report.pass = (min_orbit == report.expected_min) && (max_orbit == report.expected_max);
    return report;
}

TheoremReport verify_main_theorem(int n, const Multicharge& kappa, const LevelConfig& config,
                                  unsigned long long cap) {
    const int e = config.e();
    const int r = config.r();
    const int p = config.p;
    require(is_compatible(kappa, config), "multicharge is not compatible with (d, eta, p)");
    const unsigned long long expected = count_r_partitions(n, r);
    require(expected <= cap, "enumeration cap exceeded");

    // partitions by size, with residue vectors precomputed for every shift
    std::vector<std::vector<Partition>> parts_by_size(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<std::vector<std::vector<int>>>> rv(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        parts_by_size[static_cast<std::size_t>(m)] = partitions_of(m);
        const auto& list = parts_by_size[static_cast<std::size_t>(m)];
        rv[static_cast<std::size_t>(m)].resize(list.size());
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            rv[static_cast<std::size_t>(m)][idx].resize(static_cast<std::size_t>(e));
            for (int shift = 0; shift < e; ++shift)
                rv[static_cast<std::size_t>(m)][idx][static_cast<std::size_t>(shift)] =
                    residue_vector(list[idx], e, shift);
        }
    }

    struct Summary {
        unsigned long long count = 0;
        int min_orbit = 0;
        int max_orbit = 0;
        std::vector<ComponentId> representative;
    };
    std::map<ResidueVector, Summary> summaries;
    unsigned long long total = 0;

    const std::vector<int> divisors = divisors_of(p);
    std::vector<ComponentId> ids(static_cast<std::size_t>(r));
    ResidueVector alpha(static_cast<std::size_t>(e), 0);

    auto add_component = [&](int c, int sign) {
        const auto& counts =
            rv[static_cast<std::size_t>(ids[static_cast<std::size_t>(c)].size)]
              [static_cast<std::size_t>(ids[static_cast<std::size_t>(c)].index)]
              [static_cast<std::size_t>(mod(kappa[static_cast<std::size_t>(c)], e))];
        for (int i = 0; i < e; ++i) alpha[static_cast<std::size_t>(i)] += sign * counts[static_cast<std::size_t>(i)];
    };

    auto leaf = [&]() {
        int orbit = p;
        for (int j : divisors) {
            bool fixed = true;
            for (int k = 0; k < r && fixed; ++k)
                fixed = ids[static_cast<std::size_t>(k)] ==
                        ids[static_cast<std::size_t>((k + j * config.d) % r)];
            if (fixed) {
                orbit = j;
                break;
            }
        }
        auto& summary = summaries[alpha];
        if (summary.count == 0) {
            summary.representative = ids;
            summary.min_orbit = orbit;
            summary.max_orbit = orbit;
        }
        summary.min_orbit = std::min(summary.min_orbit, orbit);
        summary.max_orbit = std::max(summary.max_orbit, orbit);
        ++summary.count;
        ++total;
    };

    std::function<void(int, int)> rec = [&](int c, int remaining) {
        if (c == r - 1) {
            const auto& list = parts_by_size[static_cast<std::size_t>(remaining)];
            for (int idx = 0; idx < static_cast<int>(list.size()); ++idx) {
                ids[static_cast<std::size_t>(c)] = {remaining, idx};
                add_component(c, +1);
                leaf();
                add_component(c, -1);
            }
            return;
        }
        for (int m = 0; m <= remaining; ++m) {
            const auto& list = parts_by_size[static_cast<std::size_t>(m)];
            for (int idx = 0; idx < static_cast<int>(list.size()); ++idx) {
                ids[static_cast<std::size_t>(c)] = {m, idx};
                add_component(c, +1);
                rec(c + 1, remaining - m);
                add_component(c, -1);
            }
        }
    };
    rec(0, n);

    TheoremReport report;
    report.n = n;
    report.total = total;
    if (total != expected)
        report.failures.push_back("enumeration count disagrees with the generating function");

    auto realize = [&](const std::vector<ComponentId>& tuple) {
        Multipartition lambda(tuple.size());
        for (std::size_t k = 0; k < tuple.size(); ++k)
            lambda[k] = parts_by_size[static_cast<std::size_t>(tuple[k].size)]
                                     [static_cast<std::size_t>(tuple[k].index)];
        return lambda;
    };

    for (const auto& [block_alpha, summary] : summaries) {
        ++report.blocks_checked;
        const int alpha_orbit = orbit_size_alpha(block_alpha, config);
        if (summary.min_orbit != alpha_orbit)
            report.failures.push_back("block " + alpha_to_string(block_alpha) +
                                      ": min member orbit " + std::to_string(summary.min_orbit) +
                                      " != #[alpha] = " + std::to_string(alpha_orbit));
        if (summary.min_orbit != summary.max_orbit && summary.max_orbit != p)
            report.failures.push_back("block " + alpha_to_string(block_alpha) +
                                      ": mixed orbits but max != p");
        try {
            const Multipartition mu = find_minimal_orbit(realize(summary.representative), kappa, config);
            if (alpha_kappa(mu, kappa, e) != block_alpha)
                report.failures.push_back("block " + alpha_to_string(block_alpha) +
                                          ": witness left the block");
            if (orbit_size_multipartition(mu, config) != alpha_orbit)
                report.failures.push_back("block " + alpha_to_string(block_alpha) +
                                          ": witness orbit is not minimal");
            // sigma^j-invariance for every power fixing alpha
            ResidueVector shifted = block_alpha;
            Multipartition rotated = mu;
            for (int j = 1; j < p; ++j) {
                shifted = shift_alpha(shifted, config);
                rotated = shift_multipartition(rotated, config);
                if (shifted == block_alpha && rotated != mu)
                    report.failures.push_back("block " + alpha_to_string(block_alpha) +
                                              ": witness not sigma^" + std::to_string(j) +
                                              "-invariant");
            }
        } catch (const invariant_error& err) {
            ++report.invariant_errors;
            report.failures.push_back("block " + alpha_to_string(block_alpha) +
                                      ": invariant fired: " + err.what());
        } catch (const std::exception& err) {
            report.failures.push_back("block " + alpha_to_string(block_alpha) + ": " + err.what());
        }
    }
    report.pass = report.failures.empty();
    return report;
}

}  // namespace blockshift
