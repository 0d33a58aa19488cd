#include <doctest.h>

#include <algorithm>

#include "blockshift/oracle.hpp"
#include "blockshift/stuttering.hpp"

using namespace blockshift;

namespace {

Partition make(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("r-partition counts match known values") {
    CHECK(count_r_partitions(0, 3) == 1);
    CHECK(count_r_partitions(4, 1) == 5);
    CHECK(count_r_partitions(2, 2) == 5);   // (2|-), (11|-), (1|1), (-|2), (-|11)
    CHECK(count_r_partitions(10, 2) == 481);
}

TEST_CASE("block table at n = 0") {
    const LevelConfig config(1, 2, 2);
    const BlockTable table = enumerate_blocks(0, {0, 2}, config);
    REQUIRE(table.blocks.size() == 1);
    const auto& [alpha, block] = *table.blocks.begin();
    CHECK(alpha == ResidueVector{0, 0, 0, 0});
    CHECK(block.members.size() == 1);
    CHECK(block.members[0] == Multipartition{Partition(), Partition()});
    CHECK(table.total == 1);
}

TEST_CASE("the worked example block contains both known members") {
    const LevelConfig config(1, 2, 2);
    const BlockTable table = enumerate_blocks(10, {0, 2}, config);
    CHECK(table.total == 481);
    unsigned long long members_total = 0;
    for (const auto& [alpha, block] : table.blocks) members_total += block.members.size();
    CHECK(members_total == table.total);

    const auto& block = table.blocks.at({3, 2, 3, 2});
    const Multipartition first = {make({5, 2, 1}), make({1, 1})};
    const Multipartition second = {make({3, 1, 1}), make({3, 1, 1})};
    CHECK(std::count(block.members.begin(), block.members.end(), first) == 1);
    CHECK(std::count(block.members.begin(), block.members.end(), second) == 1);
    CHECK(block.alpha_orbit == 1);
    CHECK(block.min_member_orbit == 1);
}

TEST_CASE("enumeration cap") {
    const LevelConfig config(1, 2, 2);
    CHECK_THROWS_AS(enumerate_blocks(10, {0, 2}, config, 100), precondition_error);
}

TEST_CASE("minmax orbit verification") {
    const LevelConfig config(1, 2, 2);
    const auto even = verify_minmax(4, config);
    CHECK(even.min_orbit == 1);
    CHECK(even.max_orbit == 2);
    CHECK(even.pass);
    const auto odd = verify_minmax(3, config);
    CHECK(odd.min_orbit == 2);
    CHECK(odd.pass);
    const auto zero = verify_minmax(0, config);
    CHECK(zero.min_orbit == 1);
    CHECK(zero.max_orbit == 1);
    CHECK(zero.pass);
}

TEST_CASE("main theorem verification at small scale") {
    const LevelConfig config(1, 2, 2);
    for (int n = 0; n <= 6; ++n) {
        const auto report = verify_main_theorem(n, {0, 2}, config);
        CHECK(report.pass);
        CHECK(report.failures.empty());
    }
    const LevelConfig three(1, 1, 3);
    const auto report = verify_main_theorem(5, {1, 2, 0}, three);
    CHECK(report.pass);
}
