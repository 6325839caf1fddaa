#pragma once

#include <vector>

#include "locert/graph_classes.hpp"
#include "locert/view.hpp"

namespace locert {

enum class Rule { T1, T2, C1, C2, C3, D1, D2, D3, N1, N2 };
const char* rule_name(Rule r);

struct LocalVerdict {
    std::vector<Rule> violations;  // sorted, duplicate-free
    bool accepted() const { return violations.empty(); }
};

// The three edge-orientation leader-election schemes. Each binds a rule set;
// the soundness guarantee (unique sink) is conditional on the graph class.
enum class SchemeId { Tree, Chordal, K4FreeDismantlable };
const char* scheme_name(SchemeId s);

// Local checks. Every verdict is a function of the view alone.
//
//   T1/C1/D1  every edge incident to the center is directed
//   T2        the center has at most one outgoing edge
//   C2        the center's outneighbors are pairwise adjacent
//   C3/D3     the center is in no directed triangle
//   D2        no outgoing edges, or some outneighbor is adjacent to
//             every other outneighbor
//
// A conflicting edge incident to the center always violates rule 1 and is
// excluded from the outgoing sets the other rules inspect; a conflicting
// neighbor-neighbor edge never witnesses a directed triangle (it is caught
// at its own endpoints).
LocalVerdict check_tree_local(const OrientationView& view);
LocalVerdict check_chordal_local(const OrientationView& view);
LocalVerdict check_dismantlable_local(const OrientationView& view);
LocalVerdict check_local(const OrientationView& view, SchemeId scheme);

struct GlobalVerdict {
    bool accepted = false;
    NodeId node = -1;             // lowest rejecting node when !accepted
    std::vector<Rule> violations; // that node's violations
};

GlobalVerdict verify_global(const Graph& g, const OrientationCertificate& certs,
                            SchemeId scheme);

// Existence constructors.

// Iteratively orients edges away from the leaves of the unoriented
// subgraph. Requires a tree; the output is accepted everywhere and has
// exactly one sink.
OrientationCertificate construct_tree_cert(const Graph& g);

// Orients each edge from the earlier-eliminated endpoint toward the later
// one; requires a valid simplicial ordering. Accepted everywhere, acyclic,
// unique sink = ordering.order.back().
OrientationCertificate construct_chordal_cert(const Graph& g,
                                              const EliminationOrdering& ordering);

// Orients each edge toward the earlier node of the (survivor-first)
// dismantling order. Accepted everywhere on any dismantlable graph;
// the unique-sink guarantee needs K4-freeness, so *k4_warning (when given)
// is set when the graph contains a K4. Unique sink = ordering.order.front().
OrientationCertificate construct_dismantlable_cert(
    const Graph& g, const EliminationOrdering& ordering,
    bool* k4_warning = nullptr);

// Global semantics of a decoded orientation. Both require conflict-free
// certificates and throw ConflictingEdge otherwise.
std::vector<NodeId> sinks(const Graph& g, const OrientationCertificate& certs);
bool is_acyclic(const Graph& g, const OrientationCertificate& certs);

}  // namespace locert
