#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locert/graph.hpp"
#include "locert/rng.hpp"

namespace locert {

// Vertex elimination orderings, replay-verifiable.
//
// Simplicial (perfect elimination): order[0] is removed first; at each step
// the removed node's neighborhood among the still-present nodes must be a
// clique. Exists iff the graph is chordal.
//
// Dismantling: stored survivor-first. Nodes are removed from the back of
// `order`; witness[i] names the node that dominates order[i] (closed
// neighborhood containment) inside the subgraph induced by order[0..i].
// witness[0] is -1 (the survivor needs none). Exists iff dismantlable.
struct EliminationOrdering {
    enum class Kind { Simplicial, Dismantling };

    Kind kind = Kind::Simplicial;
    std::vector<NodeId> order;
    std::vector<NodeId> witness;  // Dismantling only, aligned with order
};

// Greedy recognizers, lowest-index tie-break. None encodes "not in class".
std::optional<EliminationOrdering> find_simplicial_ordering(const Graph& g);
std::optional<EliminationOrdering> find_dismantling_ordering(const Graph& g);

// Re-checks an ordering against its own invariant definition.
bool replay_ordering(const Graph& g, const EliminationOrdering& ordering);

// True iff no four mutually adjacent nodes exist (brute-force quadruples).
bool is_k4_free(const Graph& g);

// Seeded generators; deterministic per seed, and every output is accepted
// by the matching recognizer.
Graph gen_tree(int n, std::uint64_t seed);
Graph gen_chordal(int n, int extra_edges, std::uint64_t seed);
Graph gen_dismantlable(int n, bool k4_free, std::uint64_t seed);

}  // namespace locert
