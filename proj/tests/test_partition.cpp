#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "blockshift/multipartition.hpp"
#include "blockshift/partition.hpp"

using namespace blockshift;

namespace {

Partition make(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Independent removal oracle: edit the beta number directly (replace the
// anchor-row entry b by b - l, re-sort) instead of diagram surgery.
Partition remove_via_beta(const Partition& lambda, const RimHook& hook) {
    BetaNumber beta = beta_number(lambda);
    const int value = lambda.part(hook.anchor.row) - (hook.anchor.row + 1);
    REQUIRE(beta_contains(beta, value));
    REQUIRE(!beta_contains(beta, value - hook.length));
    *std::find(beta.begin(), beta.end(), value) = value - hook.length;
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    return partition_from_beta(beta);
}

Partition random_partition(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> height_dist(0, 6);
    std::uniform_int_distribution<int> part_dist(1, 8);
    std::vector<int> parts;
    for (int h = height_dist(rng); h > 0; --h) parts.push_back(part_dist(rng));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition lambda{parts};
    while (lambda.size() > max_size) {
        parts.pop_back();
        lambda = Partition(parts);
    }
    return lambda;
}

}  // namespace

TEST_CASE("partition validation and accessors") {
    CHECK_THROWS_AS(make({2, 3}), precondition_error);
    CHECK_THROWS_AS(make({1, 0}), precondition_error);
    const Partition lambda = make({3, 2, 2, 1});
    CHECK(lambda.size() == 8);
    CHECK(lambda.height() == 4);
    CHECK(lambda.part(5) == 0);
    CHECK(lambda.contains({2, 1}));
    CHECK(!lambda.contains({2, 2}));
    CHECK(lambda.to_string() == "(3,2,2,1)");
    CHECK(Partition().to_string() == "()");
}

TEST_CASE("residue of a node") {
    CHECK(residue({0, 0}, 3) == 0);
    CHECK(residue({2, 0}, 3) == 1);
    CHECK(residue({1, 4}, 4) == 3);
    CHECK_THROWS_AS(residue({0, 0}, 1), precondition_error);
}

TEST_CASE("beta numbers") {
    CHECK(beta_number(make({3, 2, 2, 1})) == BetaNumber{2, 0, -1, -3});
    CHECK(beta_number(Partition()).empty());
    CHECK(beta_number(make({5, 2, 2})) == BetaNumber{4, 0, -1});

    CHECK(partition_from_beta({2, 0, -1, -3}) == make({3, 2, 2, 1}));
    CHECK(partition_from_beta({}) == Partition());
    CHECK(partition_from_beta({4, 1, 0, -2, -3, -5, -6, -8, -9}) ==
          make({5, 3, 3, 2, 2, 1, 1}));
    // non-canonical but consistent suffix
    CHECK(partition_from_beta({2, 0, -1, -3, -5, -6}) == make({3, 2, 2, 1}));
    CHECK_THROWS_AS(partition_from_beta({0, 2}), precondition_error);
    CHECK_THROWS_AS(partition_from_beta({5, -10}), precondition_error);
}

TEST_CASE("beta round trip on random partitions") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition lambda = random_partition(rng, 30);
        CHECK(partition_from_beta(beta_number(lambda)) == lambda);
    }
}

TEST_CASE("rim hooks of the reference example") {
    const Partition lambda = make({3, 2, 2, 1});
    CHECK(rim_hooks(lambda, 5).empty());

    const auto hooks3 = rim_hooks(lambda, 3);
    REQUIRE(hooks3.size() == 1);
    CHECK(hooks3[0].anchor == Node{2, 0});
    CHECK(hooks3[0].cells == std::vector<Node>{{2, 0}, {2, 1}, {3, 0}});

    const auto hooks4 = rim_hooks(lambda, 4);
    REQUIRE(hooks4.size() == 2);
    CHECK(hooks4[0].anchor == Node{0, 1});
    CHECK(hooks4[1].anchor == Node{1, 0});
    CHECK(hooks4[1].cells == std::vector<Node>{{1, 1}, {2, 0}, {2, 1}, {3, 0}});
    CHECK(hooks4[0].hand == Node{0, 2});
}

TEST_CASE("rim hook / beta bijection, exhaustive") {
    for (int n = 0; n <= 15; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const BetaNumber beta = beta_number(lambda);
            for (int l = 1; l <= 6; ++l) {
                int movable = 0;
                for (int value : beta)
                    if (!beta_contains(beta, value - l)) ++movable;
                CHECK(static_cast<int>(rim_hooks(lambda, l).size()) == movable);
            }
        }
}

TEST_CASE("remove_rim_hook agrees with the beta-number oracle") {
    CHECK(remove_rim_hook(make({3, 2, 2, 1}), rim_hooks(make({3, 2, 2, 1}), 4)[1]) == make({3, 1}));
    CHECK(remove_rim_hook(make({1}), rim_hooks(make({1}), 1)[0]) == Partition());

    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int l = 1; l <= 5; ++l)
                for (const RimHook& hook : rim_hooks(lambda, l)) {
                    const Partition removed = remove_rim_hook(lambda, hook);
                    CHECK(removed.size() == lambda.size() - l);
                    CHECK(removed == remove_via_beta(lambda, hook));
                }

    RimHook bogus;
    bogus.anchor = {0, 0};
    bogus.length = 2;
    CHECK_THROWS_AS(remove_rim_hook(make({2, 2}), bogus), precondition_error);
}

TEST_CASE("removing then re-adding at the same beta entry restores the partition") {
    for (int n = 1; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int l = 1; l <= 4; ++l)
                for (const RimHook& hook : rim_hooks(lambda, l)) {
                    const Partition removed = remove_rim_hook(lambda, hook);
                    BetaNumber beta = beta_number(removed);
                    const int value = lambda.part(hook.anchor.row) - (hook.anchor.row + 1) - l;
                    // re-add at the same entry; may live in the implicit tail
                    while (!std::count(beta.begin(), beta.end(), value))
                        beta.push_back(-(static_cast<int>(beta.size()) + 1));
                    *std::find(beta.begin(), beta.end(), value) = value + l;
                    std::sort(beta.begin(), beta.end(), std::greater<int>());
                    CHECK(partition_from_beta(beta) == lambda);
                }
}

TEST_CASE("add_rim_hook_by_beta grows the first row and is removable") {
    CHECK(add_rim_hook_by_beta(Partition(), 2) == make({2}));
    CHECK(add_rim_hook_by_beta(make({3, 1, 1}), 2) == make({5, 1, 1}));
    CHECK(add_rim_hook_by_beta(make({3, 2}), 3) == make({6, 2}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition lambda = random_partition(rng, 20);
        for (int l = 1; l <= 5; ++l) {
            const Partition grown = add_rim_hook_by_beta(lambda, l);
            bool recovered = false;
            for (const RimHook& hook : rim_hooks(grown, l))
                if (remove_rim_hook(grown, hook) == lambda) recovered = true;
            CHECK(recovered);
        }
    }
}

namespace {

// All removal orders must reach the same core.
void check_all_orders(const Partition& lambda, int e, const Partition& expected,
                      std::set<Partition>& seen) {
    if (seen.count(lambda)) return;
    seen.insert(lambda);
    const auto hooks = rim_hooks(lambda, e);
    if (hooks.empty()) {
        CHECK(lambda == expected);
        return;
    }
    for (const RimHook& hook : hooks) check_all_orders(remove_rim_hook(lambda, hook), e, expected, seen);
}

}  // namespace

TEST_CASE("e-core is independent of the removal order, exhaustive") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int e = 2; e <= 5; ++e) {
                const auto [core, weight] = e_core_and_weight(lambda, e);
                CHECK(lambda.size() == core.size() + e * weight);
                CHECK(rim_hooks(core, e).empty());
                std::set<Partition> seen;
                check_all_orders(lambda, e, core, seen);
            }
}

TEST_CASE("e-core examples") {
    CHECK(e_core_and_weight(make({3, 2, 2, 1}), 5) == std::pair(make({3, 2, 2, 1}), 0));
    CHECK(e_core_and_weight(Partition(), 3) == std::pair(Partition(), 0));
    const auto [core3, weight3] = e_core_and_weight(make({3, 2, 2, 1}), 3);
    CHECK(core3.size() + 3 * weight3 == 8);
    CHECK(rim_hooks(core3, 3).empty());
}

TEST_CASE("residue vectors count nodes directly") {
    CHECK(residue_vector(make({5, 2, 2}), 4) == std::vector<int>{3, 1, 2, 3});
    CHECK(residue_vector(Partition(), 3) == std::vector<int>{0, 0, 0});
    CHECK(residue_vector(make({5, 3, 3, 2, 2, 1, 1}), 3) == std::vector<int>{7, 6, 4});

    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const Partition lambda = random_partition(rng, 30);
        for (int e = 2; e <= 6; ++e)
            for (int shift = 0; shift < e; ++shift) {
                const auto counts = residue_vector(lambda, e, shift);
                int total = 0;
                for (int c : counts) total += c;
                CHECK(total == lambda.size());
                // shifting the charge permutes the counts cyclically
                CHECK(counts[static_cast<std::size_t>(shift)] == residue_vector(lambda, e, 0)[0]);
            }
    }
}

TEST_CASE("removing an e-hook lowers every residue count by one") {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int e = 2; e <= 4; ++e)
                for (const RimHook& hook : rim_hooks(lambda, e)) {
                    const auto before = residue_vector(lambda, e);
                    const auto after = residue_vector(remove_rim_hook(lambda, hook), e);
                    for (int i = 0; i < e; ++i)
                        CHECK(before[static_cast<std::size_t>(i)] - after[static_cast<std::size_t>(i)] == 1);
                }
}
