#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "locert/spanning_tree.hpp"

using namespace locert;
using namespace locert::testing;

namespace {

bool violates(const LocalVerdict& verdict, Rule rule) {
    return std::find(verdict.violations.begin(), verdict.violations.end(), rule) !=
           verdict.violations.end();
}

}  // namespace

TEST_CASE("N1 exempts the root and binds everyone else") {
    const Graph p3 = path_graph(3);
    const RootLabeling root0 = RootLabeling::single_root(3, 0);

    TernaryCertificate certs{{0, 1, 2}};
    CHECK(verify_st_global(p3, certs, root0).accepted);

    // a non-root valued 2 whose only neighbors hold 0 needs a 1
    TernaryCertificate gap{{0, 0, 2}};
    const LocalVerdict at2 = check_st_local(extract_view(p3, gap, root0, 2));
    CHECK(violates(at2, Rule::N1));

    // the same value pattern at the root itself is fine
    const RootLabeling root2 = RootLabeling::single_root(3, 2);
    CHECK(check_st_local(extract_view(p3, gap, root2, 2)).accepted());
}

TEST_CASE("N2 rejects {0,1,2} triangles at all three corners") {
    const Graph k3 = complete_graph(3);
    const RootLabeling labels = RootLabeling::single_root(3, 0);
    const TernaryCertificate rainbow{{0, 1, 2}};
    for (NodeId v = 0; v < 3; ++v)
        CHECK(violates(check_st_local(extract_view(k3, rainbow, labels, v)), Rule::N2));

    const TernaryCertificate repeat{{0, 1, 1}};
    CHECK(verify_st_global(k3, repeat, labels).accepted);
}

TEST_CASE("values outside {0,1,2} are an error") {
    const Graph p3 = path_graph(3);
    const RootLabeling labels = RootLabeling::single_root(3, 0);
    const TernaryCertificate bad{{0, 3, 1}};
    CHECK_THROWS_AS((void)verify_st_global(p3, bad, labels), Error);
}

TEST_CASE("construct_st_cert assigns BFS distance mod 3") {
    const Graph p3 = path_graph(3);
    CHECK(construct_st_cert(p3, 0).values == std::vector<int>{0, 1, 2});

    const Graph k3 = complete_graph(3);
    CHECK(construct_st_cert(k3, 0).values == std::vector<int>{0, 1, 1});
    CHECK(verify_st_global(k3, construct_st_cert(k3, 0),
                           RootLabeling::single_root(3, 0))
              .accepted);

    // accepted on any connected graph, not just dismantlable ones
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_connected_graph(12, 8, seed);
        const NodeId root = static_cast<NodeId>(seed % 12);
        CHECK(verify_st_global(g, construct_st_cert(g, root),
                               RootLabeling::single_root(12, root))
                  .accepted);
    }
    const Graph c5 = cycle_graph(5);  // not dismantlable, still fine
    CHECK(verify_st_global(c5, construct_st_cert(c5, 2),
                           RootLabeling::single_root(5, 2))
              .accepted);

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = gen_dismantlable(30, false, seed);
        const NodeId root = static_cast<NodeId>(Rng(seed).below(30));
        CHECK(verify_st_global(g, construct_st_cert(g, root),
                               RootLabeling::single_root(30, root))
                  .accepted);
    }
}

TEST_CASE("derive_tree on forced examples") {
    const Graph p3 = path_graph(3);
    const RootLabeling root0 = RootLabeling::single_root(3, 0);
    const TernaryCertificate chain{{0, 1, 2}};
    const ParentMap parents = derive_tree(p3, chain, root0, TieRule::LowestPort);
    CHECK(!parents.parent_port[0]);
    CHECK(parents.parent_port[1] == 0);  // node 1's port 0 leads to node 0
    CHECK(parents.parent_port[2] == 0);
    CHECK(is_spanning_tree(p3, parents, 0));

    const Graph k3 = complete_graph(3);
    const TernaryCertificate star{{0, 1, 1}};
    const ParentMap k3_parents =
        derive_tree(k3, star, root0, TieRule::LowestPort);
    CHECK(is_spanning_tree(k3, k3_parents, 0));
    CHECK(k3.neighbor_at(1, *k3_parents.parent_port[1]) == 0);
    CHECK(k3.neighbor_at(2, *k3_parents.parent_port[2]) == 0);

    // N1 breach surfaces as NoEligibleParent
    const TernaryCertificate gap{{0, 0, 2}};
    CHECK_THROWS_AS((void)derive_tree(p3, gap, root0, TieRule::LowestPort), Error);
}

TEST_CASE("every tie rule yields a spanning tree on accepted assignments") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen_dismantlable(20, false, seed);
        const NodeId root = static_cast<NodeId>(Rng(seed + 1).below(20));
        const RootLabeling labels = RootLabeling::single_root(20, root);
        const TernaryCertificate certs = construct_st_cert(g, root);
        REQUIRE(verify_st_global(g, certs, labels).accepted);
        for (TieRule tie :
             {TieRule::LowestPort, TieRule::HighestPort, TieRule::SeededRandom}) {
            const ParentMap parents = derive_tree(g, certs, labels, tie, seed);
            CHECK(is_spanning_tree(g, parents, root));
        }
        CHECK(eligibility_acyclic(g, certs));
    }
}

TEST_CASE("is_spanning_tree rejects cycles and rooted roots") {
    const Graph p3 = path_graph(3);

    ParentMap two_cycle;
    two_cycle.parent_port = {std::nullopt, 1, 0};
    // node 1 port 1 -> node 2, node 2 port 0 -> node 1: a 2-cycle off the root
    CHECK(!is_spanning_tree(p3, two_cycle, 0));

    ParentMap rooted_root;
    rooted_root.parent_port = {0, 1, std::nullopt};
    CHECK(!is_spanning_tree(p3, rooted_root, 0));  // root 0 must hold the only null

    ParentMap good;
    good.parent_port = {std::nullopt, 0, 0};
    CHECK(is_spanning_tree(p3, good, 0));
    CHECK(!is_spanning_tree(p3, good, 1));

    ParentMap bad_port;
    bad_port.parent_port = {std::nullopt, 0, 5};
    CHECK(!is_spanning_tree(p3, bad_port, 0));
}

TEST_CASE("eligibility digraph acyclicity detects value cycles") {
    // C3 valued 0,1,2 gives a directed triangle among eligibility arcs
    const Graph k3 = complete_graph(3);
    CHECK(!eligibility_acyclic(k3, TernaryCertificate{{0, 1, 2}}));
    CHECK(eligibility_acyclic(k3, TernaryCertificate{{0, 1, 1}}));
}
