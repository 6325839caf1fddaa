#pragma once

#include <cstdint>
#include <vector>

#include "locert/graph.hpp"

namespace locert {

// One 0/1 entry per port.
using BitString = std::vector<std::uint8_t>;

// Edge-orientation certificate: node v holds deg(v) bits, bit i giving the
// direction of the edge at port i (0 = incoming, 1 = outgoing). An edge is
// directed only when its two endpoint bits disagree.
struct OrientationCertificate {
    std::vector<BitString> bits;

    // throws MalformedCertificate unless every bitstring has length deg(v)
    // and holds only 0/1 values
    void validate(const Graph& g) const;

    bool operator==(const OrientationCertificate&) const = default;
};

// Per-node value in {0,1,2}.
struct TernaryCertificate {
    std::vector<int> values;

    void validate(const Graph& g) const;

    bool operator==(const TernaryCertificate&) const = default;
};

// Input labeling marking exactly one node (the root) with 1.
struct RootLabeling {
    std::vector<int> labels;

    static RootLabeling single_root(int node_count, NodeId root);
    void validate(const Graph& g) const;
    NodeId root() const;

    bool operator==(const RootLabeling&) const = default;
};

enum class EdgeStatus {
    OutOfFirst,      // directed u -> v
    OutOfSecond,     // directed v -> u
    ConflictBothOut, // both endpoint bits 1
    ConflictBothIn,  // both endpoint bits 0
};

inline bool is_conflict(EdgeStatus s) {
    return s == EdgeStatus::ConflictBothOut || s == EdgeStatus::ConflictBothIn;
}

EdgeStatus status_from_bits(int bit_u, int bit_v);

// Decodes the edge (u,v) from the two endpoint bits; throws NotAnEdge when
// u,v are not adjacent and MalformedCertificate when a needed bit is missing.
EdgeStatus edge_status(const Graph& g, const OrientationCertificate& certs,
                       NodeId u, NodeId v);

// All w with the edge (v,w) directed v -> w. Pre: no edge incident to v
// conflicts; otherwise throws ConflictingEdge naming the offending neighbor.
std::vector<NodeId> out_neighbors(const Graph& g,
                                  const OrientationCertificate& certs,
                                  NodeId v);

}  // namespace locert
