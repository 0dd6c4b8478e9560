#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "imprim/constructions.hpp"
#include "imprim/group.hpp"
#include "imprim/perm.hpp"
#include "oracles.hpp"

using namespace imprim;

namespace {

PermutationGroup from_text(int degree, std::initializer_list<const char*> gens) {
    std::vector<Perm> g;
    for (const char* t : gens) g.push_back(Perm::parse(t, degree));
    return PermutationGroup(degree, std::move(g));
}

} // namespace

TEST_CASE("BSGS order matches breadth-first closure") {
    struct Case {
        PermutationGroup g;
        std::uint64_t order;
    };
    const Case cases[] = {
        {from_text(3, {"(1,2)", "(1,2,3)"}), 6},
        {from_text(4, {"(1,2)", "(1,2,3,4)"}), 24},
        {from_text(5, {"(1,2,3,4,5)", "(1,2,3)"}), 60},  // A_5, not 45
        {from_text(6, {"(1,2,3,4,5,6)"}), 6},
        {from_text(4, {"(1,2,3,4)", "(1,3)"}), 8},
        {from_text(4, {"(1,2)(3,4)", "(1,3)(2,4)"}), 4},
        {from_text(5, {"(1,2)", "(1,2,3,4,5)"}), 120},
        {from_text(6, {"(1,2,3)", "(2,3,4,5,6)"}), 360},
        {from_text(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}),
         7920},  // M_11
    };
    for (const auto& c : cases) {
        CHECK(c.g.order() == c.order);
        const auto all = oracles::closure(c.g.generators());
        CHECK(all.size() == c.order);
    }
}

TEST_CASE("trivial and identity-only groups") {
    const PermutationGroup t(5, {});
    CHECK(t.order() == 1);
    CHECK(t.trivial());
    CHECK(t.contains(Perm::identity(5)));
    CHECK(!t.contains(Perm::parse("(1,2)", 5)));
    CHECK(t.orbits().size() == 5);
    CHECK(!t.is_transitive());
}

TEST_CASE("membership agrees with closure") {
    const PermutationGroup g = from_text(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"});
    CHECK(g.order() == 12);  // dihedral
    const auto all = oracles::closure(g.generators());
    REQUIRE(all.size() == 12);
    std::set<Perm> inside(all.begin(), all.end());
    std::uint64_t members = 0;
    // check a swath of S_6 both ways
    const PermutationGroup s6 = from_text(6, {"(1,2)", "(1,2,3,4,5,6)"});
    s6.for_each_element([&](const Perm& x) {
        const bool claimed = g.contains(x);
        CHECK(claimed == (inside.count(x) > 0));
        if (claimed) ++members;
        return true;
    });
    CHECK(members == 12);
}

TEST_CASE("elements() is sorted, complete, deterministic") {
    const PermutationGroup g = from_text(4, {"(1,2,3,4)", "(1,3)"});
    const auto elems = g.elements();
    REQUIRE(elems.size() == 8);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (const auto& x : elems) CHECK(g.contains(x));
    std::size_t seen = 0;
    g.for_each_element([&](const Perm&) {
        ++seen;
        return true;
    });
    CHECK(seen == 8);
    // early stop
    seen = 0;
    g.for_each_element([&](const Perm&) { return ++seen < 3; });
    CHECK(seen == 3);
}

TEST_CASE("orbits") {
    const PermutationGroup g = from_text(7, {"(1,2,3)", "(5,6)"});
    const auto orbs = g.orbits();
    REQUIRE(orbs.size() == 4);
    CHECK(orbs[0] == std::vector<int>{0, 1, 2});
    CHECK(orbs[1] == std::vector<int>{3});
    CHECK(orbs[2] == std::vector<int>{4, 5});
    CHECK(orbs[3] == std::vector<int>{6});
    CHECK(!g.is_transitive());
    CHECK(from_text(5, {"(1,2,3,4,5)"}).is_transitive());
}

TEST_CASE("conjugacy classes of S_4 and A_6") {
    const PermutationGroup s4 = from_text(4, {"(1,2)", "(1,2,3,4)"});
    const auto classes = s4.conjugacy_classes();
    REQUIRE(classes.size() == 5);
    CHECK(classes.front().rep.is_identity());
    std::uint64_t total = 0;
    std::set<std::pair<std::vector<std::uint64_t>, std::uint64_t>> seen;
    for (const auto& c : classes) {
        total += c.size;
        seen.insert({c.type.parts(), c.size});
        CHECK(c.rep.cycle_type() == c.type);
        CHECK(s4.contains(c.rep));
    }
    CHECK(total == 24);
    const decltype(seen) expect{{{1, 1, 1, 1}, 1},
                                {{2, 1, 1}, 6},
                                {{2, 2}, 3},
                                {{3, 1}, 8},
                                {{4}, 6}};
    CHECK(seen == expect);

    // A_6 has 7 classes: the two 5-cycle classes are not fused
    const PermutationGroup a6 = from_text(6, {"(1,2,3)", "(2,3,4,5,6)"});
    CHECK(a6.conjugacy_classes().size() == 7);
}

TEST_CASE("classified elements cover the group consistently") {
    const PermutationGroup g = from_text(5, {"(1,2,3,4,5)", "(2,3,5,4)"});
    CHECK(g.order() == 20);
    const auto ce = g.classified_elements();
    REQUIRE(ce.elements.size() == 20);
    CHECK(std::is_sorted(ce.elements.begin(), ce.elements.end()));
    REQUIRE(ce.class_of.size() == 20);
    std::vector<std::uint64_t> counts(ce.classes.size(), 0);
    for (std::size_t i = 0; i < ce.elements.size(); ++i) {
        const int k = ce.class_of[i];
        ++counts[static_cast<std::size_t>(k)];
        CHECK(ce.elements[i].cycle_type() ==
              ce.classes[static_cast<std::size_t>(k)].type);
    }
    for (std::size_t k = 0; k < counts.size(); ++k)
        CHECK(counts[k] == ce.classes[k].size);
}

TEST_CASE("spectrum is conjugation-invariant and correct for S_3") {
    const PermutationGroup s3 = from_text(3, {"(1,2)", "(1,2,3)"});
    const std::set<Partition> expect{Partition::parse("1,1,1"),
                                     Partition::parse("2,1"),
                                     Partition::parse("3")};
    CHECK(s3.spectrum() == expect);

    const Perm h = Perm::parse("(1,4)(2,6,3)", 6);
    const PermutationGroup g = from_text(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"});
    std::vector<Perm> conj;
    for (const auto& s : g.generators()) conj.push_back(conjugate(s, h));
    const PermutationGroup gc(6, conj);
    CHECK(gc.order() == g.order());
    CHECK(gc.spectrum() == g.spectrum());
}

TEST_CASE("block systems: construction and invariance") {
    const BlockSystem bs = make_block_system({{0, 3}, {1, 4}, {2, 5}}, 6);
    CHECK(bs.uniform());
    CHECK(bs.block_size() == 2);
    CHECK(bs.num_blocks() == 3);
    CHECK(!bs.is_trivial());
    CHECK(bs.block_of == std::vector<int>{0, 1, 2, 0, 1, 2});
    CHECK(bs.size_multiset() == Partition::parse("2,2,2"));

    const PermutationGroup c6 = from_text(6, {"(1,2,3,4,5,6)"});
    CHECK(is_invariant_partition(c6, bs));
    const BlockSystem bad = make_block_system({{0, 1}, {2, 3}, {4, 5}}, 6);
    CHECK(!is_invariant_partition(c6, bad));

    CHECK_THROWS(make_block_system({{0, 1}, {1, 2}}, 3));  // overlap
    CHECK_THROWS(make_block_system({{0, 1}}, 3));          // missing point

    const BlockSystem trivial1 = make_block_system({{0}, {1}, {2}}, 3);
    CHECK(trivial1.is_trivial());
    const BlockSystem trivial2 = make_block_system({{0, 1, 2}}, 3);
    CHECK(trivial2.is_trivial());
    CHECK_THROWS(make_block_system({{0, 2}, {1}}, 3).block_size());
}

TEST_CASE("minimal block closure on a cyclic group") {
    const PermutationGroup c6 = from_text(6, {"(1,2,3,4,5,6)"});
    const BlockSystem bs = minimal_block_closure(c6, {0, 3});
    CHECK(bs.blocks == std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}});
    const BlockSystem bs2 = minimal_block_closure(c6, {0, 2});
    CHECK(bs2.blocks == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
    // seeds that generate the whole line
    const BlockSystem full = minimal_block_closure(c6, {0, 1});
    CHECK(full.num_blocks() == 1);
    CHECK_THROWS(minimal_block_closure(from_text(4, {"(1,2)"}), {0, 1}));
}

TEST_CASE("primitivity agrees with the exhaustive oracle on small groups") {
    struct Case {
        PermutationGroup g;
        bool primitive;
    };
    const Case cases[] = {
        {from_text(4, {"(1,2)", "(1,2,3,4)"}), true},       // S_4
        {from_text(4, {"(1,2,3,4)", "(1,3)"}), false},      // D_8
        {from_text(4, {"(1,2,3,4)"}), false},               // C_4
        {from_text(5, {"(1,2,3,4,5)"}), true},              // C_5, prime degree
        {from_text(6, {"(1,2,3,4,5,6)"}), false},           // C_6
        {from_text(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}), false},  // D_12
        {from_text(5, {"(1,2,3,4,5)", "(2,3,5,4)"}), true},  // AGL(1,5)
        {from_text(7, {"(1,2,3)", "(2,3,4,5,6,7)"}), true},  // transitive A-type
    };
    for (const auto& c : cases) {
        CHECK(is_primitive_group(c.g) == c.primitive);
        CHECK(oracles::primitive(c.g.generators(), c.g.degree()) == c.primitive);
        if (!c.primitive) {
            const auto systems = minimal_block_systems(c.g);
            CHECK(!systems.empty());
            for (const auto& bs : systems) {
                CHECK(is_invariant_partition(c.g, bs));
                CHECK(!bs.is_trivial());
                CHECK(bs.uniform());
            }
        } else {
            CHECK(minimal_block_systems(c.g).empty());
        }
    }
    // intransitive groups are never primitive (degree >= 2)
    CHECK(!is_primitive_group(from_text(4, {"(1,2)"})));
}

TEST_CASE("minimal block systems of C_6 come in both block sizes") {
    const auto systems =
        minimal_block_systems(from_text(6, {"(1,2,3,4,5,6)"}));
    REQUIRE(systems.size() == 2);
    CHECK(systems[0].block_size() == 2);
    CHECK(systems[1].block_size() == 3);
}

TEST_CASE("element budget is enforced") {
    const PermutationGroup s6 = from_text(6, {"(1,2)", "(1,2,3,4,5,6)"});
    Budget tiny;
    tiny.elements = 10;
    CHECK_THROWS_AS(s6.elements(tiny), inconclusive_error);
    CHECK_THROWS_AS(s6.spectrum(tiny), inconclusive_error);
    CHECK_THROWS_AS(s6.conjugacy_classes(tiny), inconclusive_error);
}
