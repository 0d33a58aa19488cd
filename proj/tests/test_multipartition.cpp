#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "blockshift/multipartition.hpp"
#include "blockshift/oracle.hpp"

using namespace blockshift;

namespace {

Partition make(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Canonical compatible multicharge: kappa_0..kappa_{d-1} given, the rest forced.
Multicharge extend(const std::vector<int>& head, const LevelConfig& config) {
    Multicharge kappa(static_cast<std::size_t>(config.r()));
    for (int j = 0; j < config.p; ++j)
        for (int l = 0; l < config.d; ++l)
            kappa[static_cast<std::size_t>(l + j * config.d)] =
                mod(head[static_cast<std::size_t>(l)] + j * config.eta, config.e());
    return kappa;
}

// Wraps an l-rim hook at an arbitrary legal beta entry (test-only generality;
// the library's canonical rule always picks the largest entry).
Partition add_hook_at(const Partition& lambda, int beta_entry, int l) {
    BetaNumber beta = beta_number(lambda);
    while (!std::count(beta.begin(), beta.end(), beta_entry)) {
        REQUIRE(beta_entry <= -(static_cast<int>(beta.size()) + 1));
        beta.push_back(-(static_cast<int>(beta.size()) + 1));
    }
    REQUIRE(!beta_contains(beta, beta_entry + l));
    *std::find(beta.begin(), beta.end(), beta_entry) = beta_entry + l;
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    return partition_from_beta(beta);
}

}  // namespace

TEST_CASE("compatibility of multicharges") {
    const LevelConfig config(1, 2, 2);
    CHECK(is_compatible({0, 2}, config));
    CHECK(!is_compatible({0, 1}, config));
    CHECK_THROWS_AS(is_compatible({0, 1, 2}, config), precondition_error);
    // p = 1: the condition wraps through d = r and always holds
    const LevelConfig trivial(3, 2, 1);
    CHECK(is_compatible({1, 0, 1}, trivial));
}

TEST_CASE("alpha of the worked example") {
    const Multipartition lambda = {make({5, 2, 1}), make({1, 1})};
    const Multipartition stut = {make({3, 1, 1}), make({3, 1, 1})};
    CHECK(alpha_kappa(lambda, {0, 2}, 4) == ResidueVector{3, 2, 3, 2});
    CHECK(alpha_kappa(stut, {0, 2}, 4) == ResidueVector{3, 2, 3, 2});
    CHECK(alpha_kappa({Partition(), Partition()}, {0, 2}, 4) == ResidueVector{0, 0, 0, 0});
}

TEST_CASE("shift maps") {
    const LevelConfig config(1, 2, 2);
    const Multipartition lambda = {make({5, 2, 1}), make({1, 1})};
    CHECK(shift_multipartition(lambda, config) == Multipartition{make({1, 1}), make({5, 2, 1})});
    const Multipartition stut = {make({2}), make({2})};
    CHECK(shift_multipartition(stut, config) == stut);
    CHECK(shift_multipartition(lambda, LevelConfig(2, 4, 1)) == lambda);

    CHECK(shift_alpha({3, 2, 3, 2}, config) == ResidueVector{3, 2, 3, 2});
    CHECK(shift_alpha({1, 0, 0, 0}, config) == ResidueVector{0, 0, 1, 0});
    CHECK(shift_alpha({1, 0}, LevelConfig(1, 2, 1)) == ResidueVector{1, 0});
}

TEST_CASE("orbit sizes") {
    const LevelConfig config(1, 2, 2);
    CHECK(orbit_size_alpha({3, 2, 3, 2}, config) == 1);
    CHECK(orbit_size_alpha({1, 0, 0, 0}, config) == 2);
    CHECK(orbit_size_multipartition({make({5, 2, 1}), make({1, 1})}, config) == 2);
    CHECK(orbit_size_multipartition({make({1}), make({1})}, config) == 1);
    CHECK(orbit_size_multipartition({make({3})}, LevelConfig(1, 3, 1)) == 1);
}

TEST_CASE("sigma commutes with alpha, exhaustive at small scale") {
    const std::vector<LevelConfig> configs = {LevelConfig(1, 2, 2), LevelConfig(2, 1, 2),
                                              LevelConfig(1, 1, 3), LevelConfig(2, 3, 1),
                                              LevelConfig(1, 1, 2)};
    for (const LevelConfig& config : configs) {
        std::vector<int> head(static_cast<std::size_t>(config.d), 0);
        for (int h = 0; h < config.e(); ++h) {
            head[0] = h;
            const Multicharge kappa = extend(head, config);
            REQUIRE(is_compatible(kappa, config));
            for (int n = 0; n <= 5; ++n)
                for_each_r_partition(n, config.r(), [&](const Multipartition& lambda) {
                    CHECK(alpha_kappa(shift_multipartition(lambda, config), kappa, config.e()) ==
                          shift_alpha(alpha_kappa(lambda, kappa, config.e()), config));
                });
        }
    }
}

TEST_CASE("iterating the shift matches the divisor configuration") {
    const LevelConfig config(1, 1, 6);  // e = 6, r = 6
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> count(0, 4);
    for (int divisor : {1, 2, 3, 6}) {
        const LevelConfig derived(config.d * divisor, config.eta * divisor, config.p / divisor);
        for (int trial = 0; trial < 50; ++trial) {
            ResidueVector alpha(6);
            for (auto& entry : alpha) entry = count(rng);
            ResidueVector iterated = alpha;
            for (int step = 0; step < divisor; ++step) iterated = shift_alpha(iterated, config);
            CHECK(iterated == shift_alpha(alpha, derived));

            Multipartition lambda(6);
            for (auto& component : lambda) {
                std::vector<int> parts;
                for (int c = count(rng); c > 0; --c) parts.push_back(1);
                component = Partition(parts);
            }
            Multipartition rotated = lambda;
            for (int step = 0; step < divisor; ++step) rotated = shift_multipartition(rotated, config);
            CHECK(rotated == shift_multipartition(lambda, derived));
        }
    }
}

TEST_CASE("orbit sizes divide p and dominate the alpha orbit") {
    const LevelConfig config(1, 2, 2);
    const Multicharge kappa = {0, 2};
    for (int n = 0; n <= 6; ++n)
        for_each_r_partition(n, 2, [&](const Multipartition& lambda) {
            const int lambda_orbit = orbit_size_multipartition(lambda, config);
            const int alpha_orbit = orbit_size_alpha(alpha_kappa(lambda, kappa, 4), config);
            CHECK(config.p % lambda_orbit == 0);
            CHECK(lambda_orbit >= alpha_orbit);
        });
}

TEST_CASE("multicore and the residue identity") {
    CHECK(multicore({make({3, 2, 2, 1})}, 5) == std::pair(Multipartition{make({3, 2, 2, 1})}, 0));
    const Multicharge kappa = {0, 2};
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> part(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        Multipartition lambda(2);
        for (auto& component : lambda) {
            std::vector<int> parts;
            for (int h = part(rng); h > 0; --h) parts.push_back(part(rng) + 1);
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            component = Partition(parts);
        }
        if (multipartition_size(lambda) > 10) continue;
        const auto [cores, weight] = multicore(lambda, 4);
        const auto alpha = alpha_kappa(lambda, kappa, 4);
        const auto core_alpha = alpha_kappa(cores, kappa, 4);
        for (int i = 0; i < 4; ++i)
            CHECK(alpha[static_cast<std::size_t>(i)] ==
                  core_alpha[static_cast<std::size_t>(i)] + weight);
    }
}

TEST_CASE("replicated eta-hook additions add the full root") {
    // wrapping an eta-hook on one component of the stuttering p-tuple
    // (lambda, .., lambda) and replicating adds (1, .., 1) to alpha
    const std::vector<LevelConfig> configs = {LevelConfig(1, 2, 2), LevelConfig(2, 1, 3),
                                              LevelConfig(1, 3, 2)};
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> part(0, 3);
    for (const LevelConfig& config : configs) {
        for (int l = 0; l < config.d; ++l) {
            std::vector<int> head(static_cast<std::size_t>(config.d));
            for (auto& entry : head) entry = part(rng);
            const LevelConfig ptuple(1, config.eta, config.p);
            const Multicharge kappa_l = extend({head[static_cast<std::size_t>(l)]}, ptuple);
            for (int trial = 0; trial < 60; ++trial) {
                std::vector<int> parts;
                for (int h = part(rng); h > 0; --h) parts.push_back(part(rng) + 1);
                std::sort(parts.begin(), parts.end(), std::greater<int>());
                const Partition lambda{parts};
                // any legal eta-hook, not only the canonical one
                const BetaNumber beta = beta_number(lambda);
                std::vector<int> entries(beta);
                entries.push_back(-(static_cast<int>(beta.size()) + 1));
                for (int entry : entries) {
                    if (beta_contains(beta, entry + config.eta)) continue;
                    const Partition mu = add_hook_at(lambda, entry, config.eta);
                    const Multipartition lam_p(static_cast<std::size_t>(config.p), lambda);
                    const Multipartition mu_p(static_cast<std::size_t>(config.p), mu);
                    const auto before = alpha_kappa(lam_p, kappa_l, config.e());
                    const auto after = alpha_kappa(mu_p, kappa_l, config.e());
                    for (int i = 0; i < config.e(); ++i)
                        CHECK(after[static_cast<std::size_t>(i)] ==
                              before[static_cast<std::size_t>(i)] + 1);
                }
            }
        }
    }
}

TEST_CASE("enumeration is complete, duplicate-free and ordered") {
    const auto fours = partitions_of(4);
    REQUIRE(fours.size() == 5);
    CHECK(fours[0] == make({4}));
    CHECK(fours[1] == make({3, 1}));
    CHECK(fours[2] == make({2, 2}));
    CHECK(fours[3] == make({2, 1, 1}));
    CHECK(fours[4] == make({1, 1, 1, 1}));

    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 7; ++n) {
            std::set<Multipartition> seen;
            unsigned long long visits = 0;
            for_each_r_partition(n, r, [&](const Multipartition& lambda) {
                CHECK(multipartition_size(lambda) == n);
                seen.insert(lambda);
                ++visits;
            });
            CHECK(visits == seen.size());
            CHECK(visits == count_r_partitions(n, r));
        }
}
