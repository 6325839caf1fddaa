#include "locert/spanning_tree.hpp"

#include <queue>
#include <string>

namespace locert {

namespace {

int previous_value(int value) { return (value + 2) % 3; }

void check_view_values(const TernaryView& view) {
    if (static_cast<int>(view.certs.size()) != view.node_count)
        fail(Errc::MalformedCertificate, "view certificate count mismatch");
    for (int value : view.certs)
        if (value < 0 || value > 2)
            fail(Errc::MalformedCertificate, "value outside {0,1,2}");
    if (!view.labels || static_cast<int>(view.labels->size()) != view.node_count)
        fail(Errc::MalformedCertificate, "view lacks root labels");
}

}  // namespace

LocalVerdict check_st_local(const TernaryView& view) {
    check_view_values(view);
    const int deg = view.node_count - 1;
    const int center_value = view.certs[0];
    const bool is_root = (*view.labels)[0] == 1;

    // neighbor adjacency and center edges, by neighbor index
    std::vector<char> center_edge(deg, 0);
    std::vector<std::vector<char>> nn_edge(deg, std::vector<char>(deg, 0));
    for (const auto& e : view.edges) {
        if (e.a == 0) {
            if (e.b - 1 < 0 || e.b - 1 >= deg)
                fail(Errc::MalformedCertificate, "inconsistent ball edges");
            center_edge[e.b - 1] = 1;
        } else {
            nn_edge[e.a - 1][e.b - 1] = nn_edge[e.b - 1][e.a - 1] = 1;
        }
    }

    LocalVerdict verdict;

    if (!is_root) {
        bool found = false;
        for (int nb = 0; nb < deg && !found; ++nb)
            if (center_edge[nb] && view.certs[1 + nb] == previous_value(center_value))
                found = true;
        if (!found) verdict.violations.push_back(Rule::N1);
    }

    bool bad_triangle = false;
    for (int i = 0; i < deg && !bad_triangle; ++i)
        for (int j = i + 1; j < deg && !bad_triangle; ++j) {
            if (!center_edge[i] || !center_edge[j] || !nn_edge[i][j]) continue;
            const int a = center_value;
            const int b = view.certs[1 + i];
            const int c = view.certs[1 + j];
            if (a != b && b != c && a != c) bad_triangle = true;
        }
    if (bad_triangle) verdict.violations.push_back(Rule::N2);

    return verdict;
}

GlobalVerdict verify_st_global(const Graph& g, const TernaryCertificate& certs,
                               const RootLabeling& labels) {
    certs.validate(g);
    labels.validate(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        LocalVerdict verdict = check_st_local(extract_view(g, certs, labels, v));
        if (!verdict.accepted())
            return {false, v, std::move(verdict.violations)};
    }
    return {true, -1, {}};
}

TernaryCertificate construct_st_cert(const Graph& g, NodeId root) {
    g.check_node(root);
    std::vector<int> distance(g.node_count(), -1);
    std::queue<NodeId> frontier;
    distance[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
        const NodeId v = frontier.front();
        frontier.pop();
        for (const Graph::Half& h : g.ports(v))
            if (distance[h.to] < 0) {
                distance[h.to] = distance[v] + 1;
                frontier.push(h.to);
            }
    }
    TernaryCertificate certs;
    certs.values.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) certs.values[v] = distance[v] % 3;
    return certs;
}

ParentMap derive_tree(const Graph& g, const TernaryCertificate& certs,
                      const RootLabeling& labels, TieRule tie, std::uint64_t seed) {
    certs.validate(g);
    labels.validate(g);
    const NodeId root = labels.root();
    Rng rng(seed);

    ParentMap parents;
    parents.parent_port.assign(g.node_count(), std::nullopt);

    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (v == root) continue;
        std::vector<int> eligible;
        const auto ports = g.ports(v);
        for (std::size_t p = 0; p < ports.size(); ++p)
            if (certs.values[ports[p].to] == previous_value(certs.values[v]))
                eligible.push_back(static_cast<int>(p));
        if (eligible.empty())
            fail(Errc::NoEligibleParent,
                 "node " + std::to_string(v) + " has no neighbor with value " +
                     std::to_string(previous_value(certs.values[v])));
        switch (tie) {
            case TieRule::LowestPort:
                parents.parent_port[v] = eligible.front();
                break;
            case TieRule::HighestPort:
                parents.parent_port[v] = eligible.back();
                break;
            case TieRule::SeededRandom:
                parents.parent_port[v] = eligible[rng.below(eligible.size())];
                break;
        }
    }
    return parents;
}

bool is_spanning_tree(const Graph& g, const ParentMap& parents, NodeId root) {
    const int n = g.node_count();
    if (root < 0 || root >= n) return false;
    if (static_cast<int>(parents.parent_port.size()) != n) return false;

    int orphans = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (!parents.parent_port[v]) {
            ++orphans;
            continue;
        }
        const int port = *parents.parent_port[v];
        if (port < 0 || port >= g.degree(v)) return false;
    }
    if (orphans != 1 || parents.parent_port[root]) return false;

    // every node must reach the root along parent pointers, without cycles
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on path, 2 reaches root
    state[root] = 2;
    for (NodeId v = 0; v < n; ++v) {
        if (state[v] == 2) continue;
        std::vector<NodeId> path;
        NodeId w = v;
        while (state[w] == 0) {
            state[w] = 1;
            path.push_back(w);
            w = g.neighbor_at(w, *parents.parent_port[w]);
        }
        if (state[w] == 1) return false;  // walked into our own path: a cycle
        for (NodeId p : path) state[p] = 2;
    }
    return true;
}

bool eligibility_acyclic(const Graph& g, const TernaryCertificate& certs) {
    certs.validate(g);
    const int n = g.node_count();
    std::vector<std::vector<NodeId>> next(n);
    std::vector<int> indegree(n, 0);
    for (const auto& e : g.edges()) {
        if (certs.values[e.v] == previous_value(certs.values[e.u])) {
            next[e.u].push_back(e.v);
            ++indegree[e.v];
        }
        if (certs.values[e.u] == previous_value(certs.values[e.v])) {
            next[e.v].push_back(e.u);
            ++indegree[e.u];
        }
    }
    std::queue<NodeId> ready;
    for (NodeId v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    int processed = 0;
    while (!ready.empty()) {
        const NodeId v = ready.front();
        ready.pop();
        ++processed;
        for (NodeId w : next[v])
            if (--indegree[w] == 0) ready.push(w);
    }
    return processed == n;
}

}  // namespace locert
