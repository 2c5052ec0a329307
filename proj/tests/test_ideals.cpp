#include <doctest.h>

#include <json.hpp>

#include "grail/generators.hpp"
#include "grail/ideals.hpp"
#include "grail/io.hpp"
#include "grail/verification.hpp"
#include "helpers.hpp"

using namespace grail;
using namespace grail::testing;

TEST_CASE("hereditary predicate") {
    auto f = fork_graph();
    CHECK(is_hereditary(set_of(f, {"v1"})));
    CHECK_FALSE(is_hereditary(set_of(f, {"w"})));
    CHECK(is_hereditary(VertexSet::full(f)));
    CHECK(is_hereditary(VertexSet::empty(f)));
}

TEST_CASE("saturated predicate") {
    auto f = fork_graph();
    CHECK(is_saturated(set_of(f, {"v1"})));
    CHECK_FALSE(is_saturated(set_of(f, {"v1", "v2"})));
    CHECK(is_saturated(VertexSet::full(f)));
    // Empty set is saturated under the receiving-vertex convention.
    CHECK(is_saturated(VertexSet::empty(f)));
}

TEST_CASE("hereditary closure") {
    auto g = vloop();
    CHECK(hereditary_closure(set_of(g, {"w"})).members() == std::vector<std::string>{"v", "w"});
    CHECK(hereditary_closure(set_of(g, {})).is_empty());
    auto f = fork_graph();
    CHECK(hereditary_closure(set_of(f, {"v2"})).members() == std::vector<std::string>{"v2"});
}

TEST_CASE("saturate") {
    auto f = fork_graph();
    CHECK(saturate(set_of(f, {"v1", "v2"})).members() ==
          std::vector<std::string>{"v1", "v2", "w"});
    CHECK(saturate(VertexSet::empty(f)).size() == 0);
    auto g = vloop();
    CHECK(saturate(set_of(g, {"v"})).members() == std::vector<std::string>{"v"});
}

TEST_CASE("saturate yields the minimal sat-her superset (oracle check)") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen_random(6, 10, 0.3, seed ^ 0x5A7u);
        auto all = oracle_enumerate_sat_her(g);
        SplitMix64 rng(seed);
        Bits b(6);
        for (int v = 0; v < 6; ++v) {
            if (rng.chance(0.3))
                b.set(v);
        }
        VertexSet s(g, b);
        auto sat = saturate(s);
        CHECK(is_hereditary(sat.set()));
        CHECK(is_saturated(sat.set()));
        CHECK(s.is_subset_of(sat.set()));
        for (const auto& t : all) {
            if (s.bits().is_subset_of(t.bits()))
                CHECK(sat.bits().is_subset_of(t.bits()));
        }
    }
}

TEST_CASE("exact constructor rejects non-sat-her input") {
    auto f = fork_graph();
    CHECK_THROWS_AS(SatHerSet::validated(set_of(f, {"w"})), InvalidSetError);
    CHECK_THROWS_AS(SatHerSet::validated(set_of(f, {"v1", "v2"})), InvalidSetError);
    CHECK_NOTHROW(SatHerSet::validated(set_of(f, {"v1"})));
}

TEST_CASE("lattice enumeration on the named small graphs") {
    auto check_sets = [](const IdealLattice& lat, std::vector<std::vector<std::string>> expect) {
        REQUIRE(lat.size() == expect.size());
        for (size_t i = 0; i < expect.size(); ++i)
            CHECK(lat.entry(i).members() == expect[i]);
    };
    check_sets(IdealLattice::enumerate(single_loop()), {{}, {"v"}});
    check_sets(IdealLattice::enumerate(fork_graph()), {{}, {"v1"}, {"v2"}, {"v1", "v2", "w"}});
    check_sets(IdealLattice::enumerate(vloop()), {{}, {"v"}, {"v", "w"}});
}

TEST_CASE("lattice contains empty and full sets and is meet/join closed") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gen_random(6, 9, 0.3, seed ^ 0xBEEFu);
        auto lat = IdealLattice::enumerate(g);
        REQUIRE(lat.size() >= 1);
        CHECK(lat.entry(0).set().is_empty());
        CHECK(lat.entry(lat.size() - 1).bits() == VertexSet::full(g).bits());
        for (size_t i = 0; i < lat.size(); ++i) {
            for (size_t j = i + 1; j < lat.size(); ++j) {
                CHECK(lat.index_of(meet(lat.entry(i), lat.entry(j)).bits()).has_value());
                CHECK(lat.index_of(join(lat.entry(i), lat.entry(j)).bits()).has_value());
            }
        }
    }
}

TEST_CASE("lattice capacity error") {
    // 20 isolated vertices: every subset is sat-her, 2^20 > 1000.
    auto g = gen_random(20, 0, 0.0, 0);
    CHECK_THROWS_AS(IdealLattice::enumerate(g, LatticeOptions{1000}), CapacityError);
}

TEST_CASE("empty graph has lattice {∅}") {
    auto g = Graph::make({}, {});
    auto lat = IdealLattice::enumerate(g);
    REQUIRE(lat.size() == 1);
    CHECK(lat.entry(0).set().is_empty());
    CHECK(lat.regular(0));
    CHECK(lat.perp_index(0) == 0);
}

TEST_CASE("perp examples") {
    auto f = fork_graph();
    CHECK(perp(sat_of(f, {"v1"})).members() == std::vector<std::string>{"v2"});
    CHECK(perp(sat_of(f, {})).members() == std::vector<std::string>{"v1", "v2", "w"});
    auto g = vloop();
    CHECK(perp(sat_of(g, {"v"})).members().empty());
}

TEST_CASE("perp_perp examples") {
    auto f = fork_graph();
    CHECK(perp_perp(sat_of(f, {"v1"})).members() == std::vector<std::string>{"v1"});
    CHECK(perp_perp(sat_of(f, {"v1", "v2", "w"})).members() ==
          std::vector<std::string>{"v1", "v2", "w"});
    auto g = vloop();
    CHECK(perp_perp(sat_of(g, {"v"})).members() == std::vector<std::string>{"v", "w"});
}

TEST_CASE("is_regular examples") {
    auto f = fork_graph();
    CHECK(is_regular(sat_of(f, {"v1"})));
    CHECK(is_regular(sat_of(f, {})));
    auto g = vloop();
    CHECK_FALSE(is_regular(sat_of(g, {"v"})));
}

TEST_CASE("regular_ideals filter") {
    auto lat = IdealLattice::enumerate(vloop());
    auto regs = lat.regular_ideals();
    REQUIRE(regs.size() == 2);
    CHECK(regs[0].set().is_empty());
    CHECK(regs[1].members() == std::vector<std::string>{"v", "w"});

    CHECK(IdealLattice::enumerate(fork_graph()).regular_ideals().size() == 4);

    auto single = Graph::make({"v"}, {});
    CHECK(IdealLattice::enumerate(single).regular_ideals().size() == 2);
}

TEST_CASE("quotient graphs") {
    auto g = vloop();
    auto q = quotient_graph(sat_of(g, {"v"}));
    CHECK(*q == *Graph::make({"w"}, {{"f", "w", "w"}}));
    CHECK_FALSE(has_condition_l(*q));

    CHECK(*quotient_graph(sat_of(g, {})) == *g);

    auto fig = gen_figure1(3);
    CHECK(*quotient_graph(fig.h) == *gen_chain_loops(4));
}

TEST_CASE("permissive quotient flags unsaturated input and never dangles") {
    // {v1, v2} in the fork is hereditary but unsaturated (forces w).
    auto f = fork_graph();
    auto res = quotient_graph_permissive(set_of(f, {"v1", "v2"}));
    CHECK_FALSE(res.input_saturated);
    CHECK(res.graph->vertex_count() == 1);
    CHECK(res.graph->edge_count() == 0);
    CHECK_THROWS_AS(quotient_graph_permissive(set_of(f, {"w"})), InvalidSetError);

    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gen_random(6, 10, 0.3, seed ^ 0x40u);
        auto lat = IdealLattice::enumerate(g);
        for (const auto& h : lat.entries()) {
            auto q = quotient_graph(h);
            for (const auto& e : q->edges()) {
                CHECK(q->vertex_index(q->vertex_id(e.source)).has_value());
                CHECK(q->vertex_index(q->vertex_id(e.range)).has_value());
            }
        }
    }
}

TEST_CASE("meet and join") {
    auto f = fork_graph();
    CHECK(join(sat_of(f, {"v1"}), sat_of(f, {"v2"})).members() ==
          std::vector<std::string>{"v1", "v2", "w"});
    auto full = sat_of(f, {"v1", "v2", "w"});
    CHECK(meet(sat_of(f, {"v1"}), full) == sat_of(f, {"v1"}));
    CHECK(meet(sat_of(f, {"v1"}), sat_of(f, {"v2"})).set().is_empty());
    CHECK_THROWS_AS(meet(sat_of(f, {"v1"}), sat_of(vloop(), {"v"})), OwnershipError);
}

TEST_CASE("lattice invariant properties over a random ensemble") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        auto g = gen_random(6, 10, 0.3, seed ^ 0x1DEA1u);
        auto lat = IdealLattice::enumerate(g);
        for (size_t i = 0; i < lat.size(); ++i) {
            const auto& h = lat.entry(i);
            auto p = perp(h);
            // Triple perp.
            CHECK(perp(perp(p)) == p);
            // perp_perp is extensive and idempotent; perp(H) is regular.
            auto pp = perp_perp(h);
            CHECK(h.set().is_subset_of(pp.set()));
            CHECK(perp_perp(pp) == pp);
            CHECK(is_regular(p));
            // Regularity as the lattice flag.
            CHECK(lat.regular(i) == (pp == h));
            // Galois property against every other element.
            for (size_t j = 0; j < lat.size(); ++j) {
                const auto& k = lat.entry(j);
                bool disjoint = (h.bits() & k.bits()).none();
                CHECK((h.set().is_subset_of(perp(k).set())) == disjoint);
                CHECK((k.set().is_subset_of(p.set())) == disjoint);
            }
            // perp_perp is monotone along lattice inclusions.
            for (size_t j = 0; j < lat.size(); ++j) {
                if (lat.entry(j).bits().is_subset_of(h.bits()))
                    CHECK(perp_perp(lat.entry(j)).set().is_subset_of(pp.set()));
            }
        }
        // is_regular(H) iff H = perp(K) for some lattice member K.
        for (size_t i = 0; i < lat.size(); ++i) {
            bool appears = false;
            for (size_t j = 0; j < lat.size(); ++j)
                appears = appears || lat.perp_index(j) == i;
            CHECK(lat.regular(i) == appears);
        }
    }
}

TEST_CASE("lattice serialization formats") {
    auto lat = IdealLattice::enumerate(vloop());
    auto j = nlohmann::json::parse(lat.to_json());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[1]["set"] == nlohmann::json::array({"v"}));
    CHECK(j[1]["hereditary"] == true);
    CHECK(j[1]["saturated"] == true);
    CHECK(j[1]["regular"] == false);
    CHECK(j[1]["perp"] == nlohmann::json::array());
    auto table = lat.to_table();
    CHECK(table.find("SET") != std::string::npos);
    CHECK(table.find("{v, w}") != std::string::npos);
}
