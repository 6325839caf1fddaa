#include "locert/oracle.hpp"

#include <string>

namespace locert {

GraphSummary summarize(const Graph& g) {
    GraphSummary summary;
    summary.n = g.node_count();
    summary.m = g.edge_count();
    summary.tree = summary.m == summary.n - 1;  // connected by invariant
    summary.chordal = find_simplicial_ordering(g).has_value();
    summary.dismantlable = find_dismantling_ordering(g).has_value();
    summary.k4_free = is_k4_free(g);
    return summary;
}

OrientationEnumerator::OrientationEnumerator(const Graph& g, int max_edges)
    : graph_(g) {
    const int m = g.edge_count();
    if (m > max_edges || m > 62)
        fail(Errc::BoundExceeded,
             "graph has " + std::to_string(m) + " edges, enumeration bound is " +
                 std::to_string(std::min(max_edges, 62)));
    total_ = 1ull << m;
}

std::optional<OrientationCertificate> OrientationEnumerator::next() {
    if (mask_ >= total_) return std::nullopt;
    OrientationCertificate certs;
    certs.bits.resize(graph_.node_count());
    for (NodeId v = 0; v < graph_.node_count(); ++v)
        certs.bits[v].assign(graph_.degree(v), 0);
    const auto& edges = graph_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const bool forward = ((mask_ >> k) & 1ull) == 0;  // u -> v as inserted
        certs.bits[edges[k].u][edges[k].port_u] = forward ? 1 : 0;
        certs.bits[edges[k].v][edges[k].port_v] = forward ? 0 : 1;
    }
    ++mask_;
    return certs;
}

SoundnessReport soundness_exhaustive(const Graph& g, SchemeId scheme,
                                     int max_edges) {
    SoundnessReport report;
    report.graph = summarize(g);
    report.scheme = scheme;

    OrientationEnumerator stream(g, max_edges);
    while (auto certs = stream.next()) {
        ++report.examined;
        if (!verify_global(g, *certs, scheme).accepted) continue;
        ++report.locally_correct;

        const bool one_sink = sinks(g, *certs).size() == 1;
        const bool acyclic = is_acyclic(g, *certs);
        if (!acyclic) ++report.cyclic_accepted;

        // the chordal scheme additionally promises acyclicity
        const bool ok = one_sink && (scheme != SchemeId::Chordal || acyclic);
        if (ok) {
            ++report.globally_correct;
        } else {
            ++report.counterexample_total;
            if (report.counterexamples.size() <
                SoundnessReport::kMaxStoredCounterexamples)
                report.counterexamples.push_back(std::move(*certs));
        }
    }
    return report;
}

bool existence_exhaustive(const Graph& g, SchemeId scheme, int max_edges) {
    OrientationEnumerator stream(g, max_edges);
    while (auto certs = stream.next())
        if (verify_global(g, *certs, scheme).accepted) return true;
    return false;
}

StSoundnessReport soundness_exhaustive_st(const Graph& g, NodeId root,
                                          int max_nodes) {
    const int n = g.node_count();
    if (n > max_nodes)
        fail(Errc::BoundExceeded, "graph has " + std::to_string(n) +
                                      " nodes, enumeration bound is " +
                                      std::to_string(max_nodes));
    g.check_node(root);

    StSoundnessReport report;
    report.graph = summarize(g);
    report.root = root;
    const RootLabeling labels = RootLabeling::single_root(n, root);

    TernaryCertificate certs;
    certs.values.assign(n, 0);
    std::uint64_t index = 0;
    bool more = true;
    while (more) {
        ++report.examined;
        if (verify_st_global(g, certs, labels).accepted) {
            ++report.locally_correct;
            if (!eligibility_acyclic(g, certs))
                report.eligibility_acyclic_all = false;

            bool ok = true;
            const TieRule battery[] = {TieRule::LowestPort, TieRule::HighestPort,
                                       TieRule::SeededRandom};
            for (TieRule tie : battery) {
                try {
                    const ParentMap parents =
                        derive_tree(g, certs, labels, tie, /*seed=*/index);
                    if (!is_spanning_tree(g, parents, root)) {
                        ok = false;
                        break;
                    }
                } catch (const Error&) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++report.globally_correct;
            } else {
                ++report.counterexample_total;
                if (report.counterexamples.size() <
                    StSoundnessReport::kMaxStoredCounterexamples)
                    report.counterexamples.push_back(certs);
            }
        }

        // base-3 odometer over node values
        more = false;
        for (int v = 0; v < n; ++v) {
            if (certs.values[v] < 2) {
                ++certs.values[v];
                for (int w = 0; w < v; ++w) certs.values[w] = 0;
                more = true;
                break;
            }
        }
        ++index;
    }
    return report;
}

}  // namespace locert
