#pragma once

#include "locert/selfstab.hpp"

namespace locert {

struct GraphSummary {
    int n = 0;
    int m = 0;
    bool tree = false;
    bool chordal = false;
    bool dismantlable = false;
    bool k4_free = false;

    bool operator==(const GraphSummary&) const = default;
};

GraphSummary summarize(const Graph& g);

// Streams the 2^|E| conflict-free orientation certificates of a graph in a
// fixed order: edge k of graph.edges() follows bit k of a counter, with a
// zero bit orienting the edge u -> v as inserted. Assignments with a
// conflicting edge are never produced; each would be rejected at both
// endpoints by rule 1 anyway.
class OrientationEnumerator {
public:
    static constexpr int kDefaultEdgeBound = 20;

    explicit OrientationEnumerator(const Graph& g,
                                   int max_edges = kDefaultEdgeBound);

    std::optional<OrientationCertificate> next();
    std::uint64_t total() const { return total_; }

private:
    const Graph& graph_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_ = 0;
};

struct SoundnessReport {
    static constexpr std::size_t kMaxStoredCounterexamples = 16;

    GraphSummary graph;
    SchemeId scheme = SchemeId::Tree;
    std::uint64_t examined = 0;
    std::uint64_t locally_correct = 0;
    std::uint64_t globally_correct = 0;  // among locally correct
    std::uint64_t cyclic_accepted = 0;   // locally correct with a directed cycle
    std::uint64_t counterexample_total = 0;
    std::vector<OrientationCertificate> counterexamples;  // first 16

    bool sound() const { return counterexample_total == 0; }
};

// Exhaustively checks the scheme's soundness claim on one instance: every
// locally accepted assignment must have exactly one sink, and for Chordal
// must additionally be acyclic. Class membership is recorded in the report
// so out-of-class runs are clearly labeled exploratory.
SoundnessReport soundness_exhaustive(
    const Graph& g, SchemeId scheme,
    int max_edges = OrientationEnumerator::kDefaultEdgeBound);

// True iff at least one enumerated assignment is accepted everywhere.
bool existence_exhaustive(const Graph& g, SchemeId scheme,
                          int max_edges = OrientationEnumerator::kDefaultEdgeBound);

struct StSoundnessReport {
    static constexpr std::size_t kMaxStoredCounterexamples = 16;
    static constexpr int kDefaultNodeBound = 9;

    GraphSummary graph;
    NodeId root = 0;
    std::uint64_t examined = 0;
    std::uint64_t locally_correct = 0;
    std::uint64_t globally_correct = 0;
    bool eligibility_acyclic_all = true;  // over all accepted assignments
    std::uint64_t counterexample_total = 0;
    std::vector<TernaryCertificate> counterexamples;

    bool sound() const { return counterexample_total == 0; }
};

// Enumerates all 3^n ternary assignments; for each one accepted everywhere,
// derives a tree under the lowest-port, highest-port and seeded-random tie
// rules and requires a spanning tree from each.
StSoundnessReport soundness_exhaustive_st(
    const Graph& g, NodeId root,
    int max_nodes = StSoundnessReport::kDefaultNodeBound);

}  // namespace locert
