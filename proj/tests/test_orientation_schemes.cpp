#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "locert/schemes.hpp"

using namespace locert;
using namespace locert::testing;

namespace {

bool violates(const LocalVerdict& verdict, Rule rule) {
    return std::find(verdict.violations.begin(), verdict.violations.end(), rule) !=
           verdict.violations.end();
}

}  // namespace

TEST_CASE("tree rules T1/T2") {
    const Graph p3 = path_graph(3);
    const OrientationCertificate inward = orient(p3, {{0, 1}, {2, 1}});

    // a leaf with its one edge outgoing accepts
    CHECK(check_tree_local(extract_view(p3, inward, 0)).accepted());
    CHECK(check_tree_local(extract_view(p3, inward, 1)).accepted());

    // two outgoing edges violate T2
    const Graph star = star_graph(3);
    OrientationCertificate two_out;
    two_out.bits = {{1, 1, 0}, {0}, {0}, {1}};
    const LocalVerdict t2 = check_tree_local(extract_view(star, two_out, 0));
    CHECK(!t2.accepted());
    CHECK(violates(t2, Rule::T2));
    CHECK(!violates(t2, Rule::T1));

    // a conflicting incident edge violates T1
    OrientationCertificate conflict;
    conflict.bits = {{1, 0, 0}, {1}, {1}, {1}};
    const LocalVerdict t1 = check_tree_local(extract_view(star, conflict, 0));
    CHECK(violates(t1, Rule::T1));
}

TEST_CASE("malformed certificate lengths are an error, not a verdict") {
    const Graph p3 = path_graph(3);
    OrientationCertificate bad;
    bad.bits = {{0}, {1}, {0}};  // node 1 has degree 2
    CHECK_THROWS_AS((void)check_tree_local(extract_view(p3, bad, 1)), Error);
}

TEST_CASE("chordal rules on triangles") {
    const Graph k3 = complete_graph(3);

    const OrientationCertificate acyclic = orient(k3, {{0, 1}, {0, 2}, {1, 2}});
    for (NodeId v = 0; v < 3; ++v)
        CHECK(check_chordal_local(extract_view(k3, acyclic, v)).accepted());

    const OrientationCertificate cyclic = orient(k3, {{0, 1}, {1, 2}, {2, 0}});
    for (NodeId v = 0; v < 3; ++v) {
        const LocalVerdict verdict = check_chordal_local(extract_view(k3, cyclic, v));
        CHECK(!verdict.accepted());
        CHECK(violates(verdict, Rule::C3));
    }
}

TEST_CASE("non-adjacent outneighbors violate C2 on the paw graph") {
    const Graph paw = paw_graph();  // triangle 0,1,2 and pendant 3 at 0
    const OrientationCertificate certs =
        orient(paw, {{0, 3}, {0, 1}, {2, 0}, {2, 1}});
    const LocalVerdict at0 = check_chordal_local(extract_view(paw, certs, 0));
    CHECK(!at0.accepted());
    CHECK(violates(at0, Rule::C2));  // outneighbors 1 and 3 are not adjacent
    CHECK(!violates(at0, Rule::C3));
}

TEST_CASE("dismantlable rules") {
    const Graph star = star_graph(3);
    OrientationCertificate all_in;
    all_in.bits = {{0, 0, 0}, {1}, {1}, {1}};
    CHECK(check_dismantlable_local(extract_view(star, all_in, 0)).accepted());

    OrientationCertificate two_out;
    two_out.bits = {{1, 1, 0}, {0}, {0}, {1}};
    const LocalVerdict d2 = check_dismantlable_local(extract_view(star, two_out, 0));
    CHECK(violates(d2, Rule::D2));
}

TEST_CASE("the drawn wheel configuration accepts everywhere yet has a cycle") {
    const Graph w5 = wheel_graph(5);
    const OrientationCertificate certs = wheel_rim_cycle_cert(w5, 5);

    const GlobalVerdict verdict = verify_global(w5, certs, SchemeId::K4FreeDismantlable);
    CHECK(verdict.accepted);
    CHECK(brute_has_directed_cycle(w5, certs));
    CHECK(!is_acyclic(w5, certs));
    CHECK(sinks(w5, certs) == std::vector<NodeId>{0});  // the hub
}

TEST_CASE("verify_global on paths and the class-conditional C4 case") {
    const Graph p3 = path_graph(3);
    const OrientationCertificate inward = orient(p3, {{0, 1}, {2, 1}});
    CHECK(verify_global(p3, inward, SchemeId::Tree).accepted);
    CHECK(sinks(p3, inward) == std::vector<NodeId>{1});
    CHECK(verify_global(p3, inward, SchemeId::Chordal).accepted);

    // a directed 4-cycle satisfies C1-C3 locally but elects nobody; C4 is
    // simply outside the chordal class
    const Graph c4 = cycle_graph(4);
    const OrientationCertificate ring = orient(c4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(verify_global(c4, ring, SchemeId::Chordal).accepted);
    CHECK(sinks(c4, ring).empty());
}

TEST_CASE("verify_global reports the lowest rejecting node") {
    const Graph k3 = complete_graph(3);
    const OrientationCertificate cyclic = orient(k3, {{0, 1}, {1, 2}, {2, 0}});
    const GlobalVerdict verdict = verify_global(k3, cyclic, SchemeId::Chordal);
    CHECK(!verdict.accepted);
    CHECK(verdict.node == 0);
    CHECK(verdict.violations == std::vector<Rule>{Rule::C3});
}

TEST_CASE("construct_tree_cert") {
    const Graph single = build_graph(1, {});
    const OrientationCertificate empty = construct_tree_cert(single);
    CHECK(empty.bits == std::vector<BitString>{{}});
    CHECK(sinks(single, empty) == std::vector<NodeId>{0});

    const Graph p3 = path_graph(3);
    const OrientationCertificate certs = construct_tree_cert(p3);
    CHECK(verify_global(p3, certs, SchemeId::Tree).accepted);
    CHECK(sinks(p3, certs) == std::vector<NodeId>{1});  // both leaves point inward

    for (std::uint64_t seed = 5; seed < 15; ++seed) {
        const Graph tree = gen_tree(10, seed);
        const OrientationCertificate c = construct_tree_cert(tree);
        CHECK(verify_global(tree, c, SchemeId::Tree).accepted);
        CHECK(sinks(tree, c).size() == 1);
    }

    CHECK_THROWS_AS(construct_tree_cert(cycle_graph(4)), Error);
}

TEST_CASE("construct_chordal_cert") {
    const Graph k3 = complete_graph(3);
    auto ordering = find_simplicial_ordering(k3);
    REQUIRE(ordering.has_value());
    // ordering (0,1,2) forces 0->1, 0->2, 1->2 with sink 2
    CHECK(ordering->order == std::vector<NodeId>{0, 1, 2});
    const OrientationCertificate certs = construct_chordal_cert(k3, *ordering);
    CHECK(edge_status(k3, certs, 0, 1) == EdgeStatus::OutOfFirst);
    CHECK(edge_status(k3, certs, 0, 2) == EdgeStatus::OutOfFirst);
    CHECK(edge_status(k3, certs, 1, 2) == EdgeStatus::OutOfFirst);
    CHECK(sinks(k3, certs) == std::vector<NodeId>{2});

    const Graph k4 = complete_graph(4);
    const auto k4_ordering = find_simplicial_ordering(k4);
    REQUIRE(k4_ordering.has_value());
    const OrientationCertificate k4_certs = construct_chordal_cert(k4, *k4_ordering);
    CHECK(verify_global(k4, k4_certs, SchemeId::Chordal).accepted);
    CHECK(!brute_has_directed_cycle(k4, k4_certs));
    CHECK(sinks(k4, k4_certs) == std::vector<NodeId>{k4_ordering->order.back()});

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = gen_chordal(20, 12, seed);
        const auto ord = find_simplicial_ordering(g);
        REQUIRE(ord.has_value());
        const OrientationCertificate c = construct_chordal_cert(g, *ord);
        CHECK(verify_global(g, c, SchemeId::Chordal).accepted);
        CHECK(is_acyclic(g, c));
        CHECK(!brute_has_directed_cycle(g, c));
        CHECK(sinks(g, c).size() == 1);
    }

    // orderings of the wrong kind or wrong content are rejected
    EliminationOrdering wrong = *k4_ordering;
    wrong.kind = EliminationOrdering::Kind::Dismantling;
    CHECK_THROWS_AS(construct_chordal_cert(k4, wrong), Error);
}

TEST_CASE("construct_dismantlable_cert") {
    const Graph edge = build_graph(2, {{0, 1}});
    EliminationOrdering ab;
    ab.kind = EliminationOrdering::Kind::Dismantling;
    ab.order = {0, 1};
    ab.witness = {-1, 0};
    const OrientationCertificate certs = construct_dismantlable_cert(edge, ab);
    CHECK(edge_status(edge, certs, 1, 0) == EdgeStatus::OutOfFirst);  // b -> a
    CHECK(sinks(edge, certs) == std::vector<NodeId>{0});

    // wheel with the hub listed first: every spoke points rim -> hub. The
    // recognizer may pick another valid order, so pin this one by hand.
    const Graph w5 = wheel_graph(5);
    EliminationOrdering hub_first;
    hub_first.kind = EliminationOrdering::Kind::Dismantling;
    hub_first.order = {0, 1, 2, 3, 4, 5};
    hub_first.witness = {-1, 0, 0, 0, 0, 0};
    REQUIRE(replay_ordering(w5, hub_first));
    bool k4_warning = true;
    const OrientationCertificate wheel_certs =
        construct_dismantlable_cert(w5, hub_first, &k4_warning);
    CHECK(!k4_warning);
    CHECK(verify_global(w5, wheel_certs, SchemeId::K4FreeDismantlable).accepted);
    for (NodeId rim = 1; rim <= 5; ++rim)
        CHECK(edge_status(w5, wheel_certs, rim, 0) == EdgeStatus::OutOfFirst);
    CHECK(sinks(w5, wheel_certs) == std::vector<NodeId>{0});

    // the recognizer's own ordering works just as well, sink = its survivor
    const auto found = find_dismantling_ordering(w5);
    REQUIRE(found.has_value());
    const OrientationCertificate found_certs =
        construct_dismantlable_cert(w5, *found);
    CHECK(verify_global(w5, found_certs, SchemeId::K4FreeDismantlable).accepted);
    CHECK(sinks(w5, found_certs) == std::vector<NodeId>{found->order.front()});

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = gen_dismantlable(20, true, seed);
        const auto ord = find_dismantling_ordering(g);
        REQUIRE(ord.has_value());
        const OrientationCertificate c = construct_dismantlable_cert(g, *ord);
        CHECK(verify_global(g, c, SchemeId::K4FreeDismantlable).accepted);
        CHECK(is_acyclic(g, c));
        CHECK(sinks(g, c) == std::vector<NodeId>{ord->order.front()});
    }

    // on a K4-containing graph the construction still verifies, with a warning
    const Graph k4 = complete_graph(4);
    const auto k4_ord = find_dismantling_ordering(k4);
    REQUIRE(k4_ord.has_value());
    bool warning = false;
    const OrientationCertificate k4_certs =
        construct_dismantlable_cert(k4, *k4_ord, &warning);
    CHECK(warning);
    CHECK(verify_global(k4, k4_certs, SchemeId::K4FreeDismantlable).accepted);
}

TEST_CASE("sinks and is_acyclic agree with brute force") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_connected_graph(8, 5, seed);
        Rng rng(seed * 17 + 1);
        std::vector<std::pair<NodeId, NodeId>> arcs;
        for (const auto& e : g.edges())
            arcs.push_back(rng.coin() ? std::make_pair(e.u, e.v)
                                      : std::make_pair(e.v, e.u));
        const OrientationCertificate certs = orient(g, arcs);
        CHECK(sinks(g, certs) == brute_sinks(g, certs));
        CHECK(is_acyclic(g, certs) == !brute_has_directed_cycle(g, certs));
    }

    const Graph k3 = complete_graph(3);
    CHECK(!is_acyclic(k3, orient(k3, {{0, 1}, {1, 2}, {2, 0}})));

    OrientationCertificate conflicted;
    conflicted.bits = {{1, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS((void)sinks(k3, conflicted), Error);
    CHECK_THROWS_AS((void)is_acyclic(k3, conflicted), Error);
}

TEST_CASE("a conflicting edge at v always violates rule 1 at v") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_connected_graph(7, 4, seed);
        OrientationCertificate certs = random_bits(g, seed + 5);
        // force a conflict on the first edge
        const auto& e = g.edges().front();
        certs.bits[e.u][e.port_u] = 1;
        certs.bits[e.v][e.port_v] = 1;
        const OrientationView view = extract_view(g, certs, e.u);
        CHECK(violates(check_tree_local(view), Rule::T1));
        CHECK(violates(check_chordal_local(view), Rule::C1));
        CHECK(violates(check_dismantlable_local(view), Rule::D1));
    }
}

TEST_CASE("a conflicting neighbor-neighbor edge never witnesses a triangle") {
    // 0->1 and 2->0 are directed; (1,2) holds both-out bits. Were (1,2) read
    // as 1->2 this would be a directed triangle at 0, but the conflict only
    // fires rule 1 at its own endpoints.
    const Graph k3 = complete_graph(3);
    OrientationCertificate certs;
    certs.bits = {{1, 0}, {0, 1}, {1, 1}};
    const LocalVerdict at0 = check_chordal_local(extract_view(k3, certs, 0));
    CHECK(at0.accepted());
    CHECK(!violates(at0, Rule::C3));
    CHECK(!violates(check_dismantlable_local(extract_view(k3, certs, 0)), Rule::D3));
    CHECK(violates(check_chordal_local(extract_view(k3, certs, 1)), Rule::C1));
    CHECK(violates(check_chordal_local(extract_view(k3, certs, 2)), Rule::C1));
}

TEST_CASE("local checks are functions of the view alone") {
    // identical balls embedded in different graphs yield identical verdicts
    const Graph g1 = build_graph(5, {{1, 2}, {2, 3}, {0, 1}, {3, 4}});
    const Graph g2 = build_graph(5, {{1, 2}, {2, 3}, {0, 1}, {3, 4}, {0, 4}});
    const OrientationCertificate c1 = orient(g1, {{1, 2}, {3, 2}, {0, 1}, {3, 4}});
    const OrientationCertificate c2 =
        orient(g2, {{1, 2}, {3, 2}, {0, 1}, {3, 4}, {0, 4}});
    const OrientationView v1 = extract_view(g1, c1, 2);
    const OrientationView v2 = extract_view(g2, c2, 2);
    REQUIRE(v1 == v2);
    for (SchemeId scheme :
         {SchemeId::Tree, SchemeId::Chordal, SchemeId::K4FreeDismantlable}) {
        CHECK(check_local(v1, scheme).accepted() == check_local(v2, scheme).accepted());
        CHECK(check_local(v1, scheme).violations == check_local(v2, scheme).violations);
    }
}
