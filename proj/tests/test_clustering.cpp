#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "imprim/budget.hpp"
#include "imprim/clustering.hpp"
#include "imprim/partition.hpp"
#include "oracles.hpp"

using namespace imprim;

namespace {

// Canonical multiset-of-multisets form, comparable with the oracle's.
oracles::ClusterSet canon(const Clustering& c) {
    oracles::ClusterSet out;
    for (const auto& cl : c.clusters) out.push_back(cl.parts());
    std::sort(out.begin(), out.end());
    return out;
}

std::set<oracles::ClusterSet> library_clusterings(const Partition& p) {
    std::set<oracles::ClusterSet> out;
    for (const auto& c : enumerate_clusterings(p)) {
        const bool fresh = out.insert(canon(c)).second;
        CHECK(fresh);  // stream must not repeat a clustering
    }
    return out;
}

} // namespace

TEST_CASE("clustering counts on pinned partitions") {
    CHECK(library_clusterings(Partition::parse("2,2")).size() == 2);
    CHECK(library_clusterings(Partition::parse("2,2,2")).size() == 3);
    CHECK(library_clusterings(Partition::parse("2,1,1")).size() == 4);
    CHECK(library_clusterings(Partition::parse("3,2,1")).size() == 5);
    CHECK(library_clusterings(Partition::parse("1,1,1,1")).size() == 5);
}

TEST_CASE("stream matches the RGS oracle on every partition of n <= 9") {
    for (std::uint64_t n = 1; n <= 9; ++n)
        for (const auto& p : all_partitions(n))
            CHECK(library_clusterings(p) == oracles::clusterings(p));
}

TEST_CASE("the two oracles agree with each other and the stream") {
    for (const char* text : {"4,2,2,1", "3,3,2,1,1", "5,4,3,2,1"}) {
        const Partition p = Partition::parse(text);
        std::set<oracles::ClusterSet> via_rec;
        oracles::for_each_clustering(p, [&](const std::vector<oracles::Cluster>& cs) {
            auto sorted = cs;
            std::sort(sorted.begin(), sorted.end());
            CHECK(via_rec.insert(sorted).second);
            return true;
        });
        CHECK(via_rec == oracles::clusterings(p));
        CHECK(via_rec == library_clusterings(p));
    }
}

TEST_CASE("sorted_clusters and str") {
    Clustering c;
    c.clusters = {Partition::parse("5,1"), Partition::parse("10,10")};
    CHECK(c.cluster_sums() == std::vector<std::uint64_t>{6, 20});
    const auto sorted = c.sorted_clusters();
    CHECK(sorted.front().parts() == std::vector<std::uint64_t>{5, 1});
    CHECK(c.str() == "((5,1),(10,10))");
}

TEST_CASE("greedy uniform clustering: hits and a designed miss") {
    CHECK(greedy_uniform_clustering(Partition::parse("10,5,3,2"), 10));
    CHECK(greedy_uniform_clustering(Partition::parse("3,3,2,2,2"), 6));
    // greedy opens (4,4) and strands the rest; exact search succeeds
    const Partition p = Partition::parse("4,4,3,3,2,2");
    CHECK(!greedy_uniform_clustering(p, 9));
    const auto exact = is_m_partition(p, 9);
    REQUIRE(exact);
    for (auto s : exact->cluster_sums()) CHECK(s == 9);
}

TEST_CASE("is_m_partition matches a definition-level scan") {
    for (std::uint64_t n = 2; n <= 12; ++n)
        for (const auto& p : all_partitions(n))
            for (auto m : divisors(n)) {
                if (m < 2 || m > n) continue;
                bool oracle_found = false;
                oracles::for_each_clustering(p, [&](const std::vector<oracles::Cluster>& cs) {
                    for (const auto& c : cs) {
                        const std::uint64_t s =
                            std::accumulate(c.begin(), c.end(), std::uint64_t{0});
                        if (s != m) return true;  // not this clustering
                    }
                    oracle_found = true;
                    return false;
                });
                const auto got = is_m_partition(p, m);
                CHECK(static_cast<bool>(got) == oracle_found);
                if (got)
                    for (auto s : got->cluster_sums()) CHECK(s == m);
            }
}

TEST_CASE("special m-partitions") {
    const auto a = is_special_m_partition(Partition::parse("2,3,10"), 5);
    REQUIRE(a);
    CHECK(a->clusters.back().parts() == std::vector<std::uint64_t>{10});
    CHECK(a->clusters.front().parts() == std::vector<std::uint64_t>{3, 2});

    // also special when the remainder is empty or splits exactly
    CHECK(is_special_m_partition(Partition::parse("2,3,5"), 5));
    CHECK(is_special_m_partition(Partition::parse("6,3,3"), 6));
    CHECK(!is_special_m_partition(Partition::parse("6,3,3"), 4));
    CHECK(!is_special_m_partition(Partition::parse("2,3,10"), 4));

    const auto big =
        is_special_m_partition(Partition::parse("1,2,5,7,17,19,23,111"), 37);
    REQUIRE(big);
    CHECK(big->clusters.back().parts() == std::vector<std::uint64_t>{111});
    for (std::size_t i = 0; i + 1 < big->clusters.size(); ++i)
        CHECK(big->clusters[i].n() == 37);
}

TEST_CASE("divisor certificates") {
    Clustering single;
    single.clusters = {Partition::parse("30,24,12")};
    const auto certs = clustering_divisor_certificates(single, 66);
    std::set<std::uint64_t> ds;
    for (const auto& c : certs) {
        ds.insert(c.d);
        REQUIRE(c.k_i.size() == 1);
        CHECK(c.k_i[0] == 66 / c.d);
    }
    CHECK(ds == std::set<std::uint64_t>{11, 22, 33});

    // gcd test: cluster sums 20 and 6 have gcd 2
    Clustering c2;
    c2.clusters = {Partition::parse("10,10"), Partition::parse("5,1")};
    const auto g = clustering_gcd_test(c2, 26);
    CHECK(!g);  // 5 and 1 are not divisible by 6/2 = 3
}

TEST_CASE("gcd test positive case") {
    Clustering c;
    c.clusters = {Partition::parse("10,10,10,10,10,10"), Partition::parse("5,1")};
    const auto g = clustering_gcd_test(c, 66);
    REQUIRE(g);
    CHECK(g->d == 6);
    CHECK(g->k_i == std::vector<std::uint64_t>{10, 1});
}

TEST_CASE("tiny node budgets throw inconclusive_error") {
    NodeCounter nodes(3, "test");
    CHECK_THROWS_AS(enumerate_clusterings(Partition::parse("5,4,3,2,1,1"), &nodes),
                    inconclusive_error);
}
