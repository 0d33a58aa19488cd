#include "blockshift/multipartition.hpp"

#include <algorithm>

namespace blockshift {

int multipartition_size(const Multipartition& lambda) {
    int total = 0;
    for (const Partition& component : lambda) total += component.size();
    return total;
}

bool is_compatible(const Multicharge& kappa, const LevelConfig& config) {
    require(static_cast<int>(kappa.size()) == config.r(), "multicharge length must equal r");
    const int e = config.e();
    const int r = config.r();
    for (int k = 0; k < r; ++k)
        if (mod(kappa[static_cast<std::size_t>((k + config.d) % r)], e) !=
            mod(kappa[static_cast<std::size_t>(k)] + config.eta, e))
            return false;
    return true;
}

ResidueVector alpha_kappa(const Multipartition& lambda, const Multicharge& kappa, int e) {
    require(e >= 2, "e must be >= 2");
    require(lambda.size() == kappa.size(), "multipartition and multicharge lengths differ");
    ResidueVector alpha(static_cast<std::size_t>(e), 0);
    for (std::size_t c = 0; c < lambda.size(); ++c) {
        const std::vector<int> counts = residue_vector(lambda[c], e, mod(kappa[c], e));
        for (int i = 0; i < e; ++i) alpha[static_cast<std::size_t>(i)] += counts[static_cast<std::size_t>(i)];
    }
    return alpha;
}

Multipartition shift_multipartition(const Multipartition& lambda, const LevelConfig& config) {
    const int r = config.r();
    require(static_cast<int>(lambda.size()) == r, "multipartition length must equal r");
    Multipartition shifted(lambda.size());
    for (int k = 0; k < r; ++k)
        shifted[static_cast<std::size_t>(k)] = lambda[static_cast<std::size_t>(mod(k - config.d, r))];
    return shifted;
}

ResidueVector shift_alpha(const ResidueVector& alpha, const LevelConfig& config) {
    const int e = config.e();
    require(static_cast<int>(alpha.size()) == e, "alpha length must equal e");
    ResidueVector shifted(alpha.size());
    for (int i = 0; i < e; ++i)
        shifted[static_cast<std::size_t>(mod(i + config.eta, e))] = alpha[static_cast<std::size_t>(i)];
    return shifted;
}

int orbit_size_alpha(const ResidueVector& alpha, const LevelConfig& config) {
    ResidueVector current = shift_alpha(alpha, config);
    int j = 1;
    while (current != alpha) {
        current = shift_alpha(current, config);
        ++j;
    }
    ensure(config.p % j == 0, "alpha orbit size must divide p");
    return j;
}

int orbit_size_multipartition(const Multipartition& lambda, const LevelConfig& config) {
    Multipartition current = shift_multipartition(lambda, config);
    int j = 1;
    while (current != lambda) {
        current = shift_multipartition(current, config);
        ++j;
    }
    ensure(config.p % j == 0, "multipartition orbit size must divide p");
    return j;
}

std::pair<Multipartition, int> multicore(const Multipartition& lambda, int e) {
    Multipartition cores(lambda.size());
    int weight = 0;
    for (std::size_t c = 0; c < lambda.size(); ++c) {
        auto [core, w] = e_core_and_weight(lambda[c], e);
        cores[c] = core;
        weight += w;
    }
    return {cores, weight};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        current.push_back(first);
        partitions_rec(remaining - first, first, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    require(n >= 0, "n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

void for_each_r_partition(int n, int r,
                          const std::function<void(const Multipartition&)>& visit) {
    require(n >= 0 && r >= 1, "need n >= 0 and r >= 1");
    std::vector<std::vector<Partition>> table(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) table[static_cast<std::size_t>(m)] = partitions_of(m);

    Multipartition current(static_cast<std::size_t>(r));
    // composition entry c, then every partition of c, component by component
    std::function<void(int, int)> rec = [&](int component, int remaining) {
        if (component == r - 1) {
            for (const Partition& last : table[static_cast<std::size_t>(remaining)]) {
                current[static_cast<std::size_t>(component)] = last;
                visit(current);
            }
            return;
        }
        for (int c = 0; c <= remaining; ++c)
            for (const Partition& choice : table[static_cast<std::size_t>(c)]) {
                current[static_cast<std::size_t>(component)] = choice;
                rec(component + 1, remaining - c);
            }
    };
    rec(0, n);
}

}  // namespace blockshift
