#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <utility>
#include <vector>

#include "imprim/budget.hpp"
#include "imprim/itype.hpp"
#include "imprim/partition.hpp"
#include "oracles.hpp"

using namespace imprim;

namespace {

using PairSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

PairSet pairs_of(const ITypeSet& s) {
    PairSet out;
    for (const auto& pr : s.pairs()) out.insert({pr.k, pr.m});
    return out;
}

PairSet itype_of(const char* text) {
    return pairs_of(i_type_set(Partition::parse(text)));
}

} // namespace

TEST_CASE("ic-partition recognition") {
    const Partition p = Partition::parse("30,24,12");
    const auto a = is_ic_partition(p, 2, 33);
    REQUIRE(a);
    CHECK(a->quotient == Partition::parse("15,12,6"));
    const auto b = is_ic_partition(p, 6, 11);
    REQUIRE(b);
    CHECK(b->quotient == Partition::parse("5,4,2"));
    CHECK(!is_ic_partition(p, 4, 33));               // wrong n
    CHECK(!is_ic_partition(Partition::parse("30,24,12"), 4, 16));  // wrong n
    CHECK(!is_ic_partition(Partition::parse("8,4,4"), 16, 1));     // 8 % 16
    CHECK(is_ic_partition(Partition::parse("8,4,4"), 4, 4));
    // scaling: type (k,m) implies type (k/d, d*m)
    const auto scaled = ic_type_scaling(6, 11, 3);
    CHECK(scaled == ITypePair{2, 33});
}

TEST_CASE("pinned i-types") {
    CHECK(itype_of("8,8") == PairSet{{2, 8}, {4, 4}, {8, 2}});
    CHECK(itype_of("3,3,3,3,3,1") == PairSet{{4, 4}});
    CHECK(itype_of("30,24,12") ==
          PairSet{{2, 33}, {3, 22}, {6, 11}, {11, 6}, {22, 3}, {33, 2}});
    CHECK(itype_of("1,5,10,10,10,10,10,10") == PairSet{{6, 11}, {11, 6}});
    CHECK(itype_of("2,3,5") == PairSet{{2, 5}});
    CHECK(itype_of("2,3,10") == PairSet{{3, 5}});
    CHECK(itype_of("6,2") == PairSet{{2, 4}, {4, 2}});
    CHECK(itype_of("4") == PairSet{{2, 2}});
    CHECK(itype_of("6") == PairSet{{2, 3}, {3, 2}});
    CHECK(itype_of("7").empty());
    CHECK(itype_of("7,4").empty());
    CHECK(itype_of("2,2,1,1") == PairSet{{2, 3}, {3, 2}});
    CHECK(itype_of("1,1,8") == PairSet{{5, 2}});
    CHECK(itype_of("1,1,7").empty());
    CHECK(itype_of("1,2,5,7,17,19,23,111") == PairSet{{5, 37}});
}

TEST_CASE("every returned witness validates") {
    for (const char* text :
         {"8,8", "30,24,12", "1,5,10,10,10,10,10,10", "2,3,10", "6,2",
          "2,2,1,1", "1,2,5,7,17,19,23,111", "12,8,4,4,2,2,1,1"}) {
        const Partition p = Partition::parse(text);
        const auto its = i_type_set(p);
        CHECK(its.n == p.n());
        for (const auto& [pr, w] : its.entries)
            CHECK(check_itype_witness(p, pr.k, pr.m, w));
    }
}

TEST_CASE("check_itype_witness rejects corrupt witnesses") {
    const Partition p = Partition::parse("8,8");
    ITypeWitness w;
    w.clustering.clusters = {Partition::parse("8,8")};
    w.k_i = {2};
    CHECK(check_itype_witness(p, 2, 8, w));
    w.k_i = {3};  // wrong sum
    CHECK(!check_itype_witness(p, 2, 8, w));
    w.clustering.clusters = {Partition::parse("8,4")};  // not p's parts
    w.k_i = {2};
    CHECK(!check_itype_witness(p, 2, 8, w));
}

TEST_CASE("gcd shortcut") {
    const auto pairs = gcd_shortcut_pairs(Partition::parse("30,24,12"));
    PairSet got;
    for (const auto& pr : pairs) got.insert({pr.k, pr.m});
    CHECK(got == PairSet{{33, 2}, {22, 3}, {11, 6}});
    CHECK(gcd_shortcut_pairs(Partition::parse("7,4")).empty());
    // single prime part: gcd > 1 but no usable divisor
    CHECK(gcd_shortcut_pairs(Partition::parse("7")).empty());
}

TEST_CASE("i_type_set agrees with the definition-level oracle, small n") {
    for (std::uint64_t n = 2; n <= 16; ++n)
        for (const auto& p : all_partitions(n)) {
            if (p.size() > 7) continue;  // RGS oracle scope
            CHECK(pairs_of(i_type_set(p)) == oracles::itype(p));
        }
}

TEST_CASE("primitive permutation wrappers") {
    CHECK(is_imprimitive_cycle_type(Partition::parse("8,8")));
    CHECK(!is_imprimitive_cycle_type(Partition::parse("7,4")));
    CHECK(is_primitive_permutation(Perm::parse("(1,2,3,4,5)", 6)));
    CHECK(!is_primitive_permutation(Perm::parse("(1,2,3,4,5,6)", 6)));
}

TEST_CASE("disjoint certificate") {
    std::vector<ITypeSet> deg16;
    deg16.push_back(i_type_set(Partition::parse("8,8")));
    deg16.push_back(i_type_set(Partition::parse("3,3,3,3,3,1")));
    // both contain (4,4), so the pair does not certify
    CHECK(!disjoint_itype_certificate(deg16));

    std::vector<ITypeSet> three;
    three.push_back(i_type_set(Partition::parse("8,8")));
    three.push_back(i_type_set(Partition::parse("2,14")));
    three.push_back(i_type_set(Partition::parse("3,3,3,3,3,1")));
    // pairwise: {(2,8),(8,2)} and {(4,4)} overlaps vanish jointly
    CHECK(disjoint_itype_certificate(three));

    std::vector<ITypeSet> with_empty;
    with_empty.push_back(i_type_set(Partition::parse("8,8")));
    with_empty.push_back(i_type_set(Partition::parse("5,5,5,1")));
    CHECK(with_empty.back().empty());
    CHECK(disjoint_itype_certificate(with_empty));
}

TEST_CASE("power_types enumerates the distinct power cycle types") {
    const Partition p = Partition::parse("6,12,12,12,12,12");
    const auto types = power_types(p);
    bool saw_cube = false;
    for (const auto& [e, t] : types) {
        CHECK(t == partition_power(p, e));
        if (e == 3) saw_cube = true;
    }
    CHECK(saw_cube);
    // distinct exponent keys, and e=1 reproduces p itself
    CHECK(types.front().first == 1);
    CHECK(types.front().second == p);
}

TEST_CASE("tiny budgets are inconclusive, not wrong") {
    Budget tiny;
    tiny.nodes = 1;
    // (4,4,3,3,2,2) defeats the greedy phase at m = 9, so the exact search
    // must run, and one node is not enough for it
    CHECK_THROWS_AS(i_type_set(Partition::parse("4,4,3,3,2,2"), tiny),
                    inconclusive_error);
}
