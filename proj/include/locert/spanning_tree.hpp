#pragma once

#include <optional>

#include "locert/schemes.hpp"

namespace locert {

// Rooted spanning-tree scheme: ternary certificates plus a root label.
//
//   N1  a non-root with value i has a neighbor valued (i-1) mod 3
//   N2  no triangle through the center is valued exactly {0,1,2}
LocalVerdict check_st_local(const TernaryView& view);

GlobalVerdict verify_st_global(const Graph& g, const TernaryCertificate& certs,
                               const RootLabeling& labels);

// BFS distance from the root, mod 3. Accepted at every node of any
// connected graph.
TernaryCertificate construct_st_cert(const Graph& g, NodeId root);

enum class TieRule { LowestPort, HighestPort, SeededRandom };

// Parent port per node; nullopt marks "no parent" (the root, in correct
// configurations).
struct ParentMap {
    std::vector<std::optional<int>> parent_port;

    bool operator==(const ParentMap&) const = default;
};

// Every non-root picks a parent among neighbors valued (own-1) mod 3,
// resolved by the tie rule; throws NoEligibleParent when a non-root has no
// such neighbor (an N1 breach).
ParentMap derive_tree(const Graph& g, const TernaryCertificate& certs,
                      const RootLabeling& labels, TieRule tie,
                      std::uint64_t seed = 0);

bool is_spanning_tree(const Graph& g, const ParentMap& parents, NodeId root);

// Acyclicity of the digraph with arcs v -> w for value(w) = value(v)-1
// mod 3; the arena all parent choices live in.
bool eligibility_acyclic(const Graph& g, const TernaryCertificate& certs);

}  // namespace locert
