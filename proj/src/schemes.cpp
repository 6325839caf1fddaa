#include "locert/schemes.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace locert {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::T1: return "T1";
        case Rule::T2: return "T2";
        case Rule::C1: return "C1";
        case Rule::C2: return "C2";
        case Rule::C3: return "C3";
        case Rule::D1: return "D1";
        case Rule::D2: return "D2";
        case Rule::D3: return "D3";
        case Rule::N1: return "N1";
        case Rule::N2: return "N2";
    }
    return "?";
}

const char* scheme_name(SchemeId s) {
    switch (s) {
        case SchemeId::Tree: return "tree";
        case SchemeId::Chordal: return "chordal";
        case SchemeId::K4FreeDismantlable: return "k4fd";
    }
    return "?";
}

namespace {

// Decoded 1-ball: edge statuses around the center plus the directed
// adjacency among the center's neighbors (neighbor index = local id - 1).
struct BallDecode {
    int deg = 0;
    std::vector<EdgeStatus> center_status;   // per neighbor index
    std::vector<std::vector<char>> nn_edge;  // adjacency among neighbors
    std::vector<std::vector<char>> nn_arrow; // properly directed i -> j
    std::vector<int> out;                    // neighbor indices with center -> nb
    bool center_conflict = false;
};

int checked_bit(const OrientationView& view, int local, int port) {
    const BitString& cert = view.certs[local];
    if (port < 0 || port >= static_cast<int>(cert.size()))
        fail(Errc::MalformedCertificate,
             "certificate of ball node " + std::to_string(local) +
                 " lacks bit for port " + std::to_string(port));
    if (cert[port] > 1)
        fail(Errc::MalformedCertificate, "certificate bit not 0/1");
    return cert[port];
}

BallDecode decode_ball(const OrientationView& view) {
    const int deg = view.node_count - 1;
    if (deg < 0 || static_cast<int>(view.certs.size()) != view.node_count)
        fail(Errc::MalformedCertificate, "view certificate count mismatch");
    if (static_cast<int>(view.certs[0].size()) != deg)
        fail(Errc::MalformedCertificate,
             "center certificate length " + std::to_string(view.certs[0].size()) +
                 " != degree " + std::to_string(deg));

    BallDecode ball;
    ball.deg = deg;
    ball.center_status.assign(deg, EdgeStatus::ConflictBothIn);
    ball.nn_edge.assign(deg, std::vector<char>(deg, 0));
    ball.nn_arrow.assign(deg, std::vector<char>(deg, 0));

    std::vector<char> seen_center(deg, 0);
    for (const auto& e : view.edges) {
        if (e.a == 0) {
            const int nb = e.b - 1;
            if (nb < 0 || nb >= deg || seen_center[nb])
                fail(Errc::MalformedCertificate, "inconsistent ball edges");
            seen_center[nb] = 1;
            ball.center_status[nb] = status_from_bits(
                checked_bit(view, 0, e.port_a), checked_bit(view, e.b, e.port_b));
        } else {
            const int i = e.a - 1;
            const int j = e.b - 1;
            if (i < 0 || j < 0 || i >= deg || j >= deg || i == j)
                fail(Errc::MalformedCertificate, "inconsistent ball edges");
            ball.nn_edge[i][j] = ball.nn_edge[j][i] = 1;
            const EdgeStatus s = status_from_bits(
                checked_bit(view, e.a, e.port_a), checked_bit(view, e.b, e.port_b));
            // a conflicting neighbor-neighbor edge is caught at its own
            // endpoints; here it simply directs nothing
            if (s == EdgeStatus::OutOfFirst) ball.nn_arrow[i][j] = 1;
            if (s == EdgeStatus::OutOfSecond) ball.nn_arrow[j][i] = 1;
        }
    }
    for (int nb = 0; nb < deg; ++nb)
        if (!seen_center[nb])
            fail(Errc::MalformedCertificate, "ball misses a center edge");

    for (int nb = 0; nb < deg; ++nb) {
        if (is_conflict(ball.center_status[nb])) ball.center_conflict = true;
        if (ball.center_status[nb] == EdgeStatus::OutOfFirst) ball.out.push_back(nb);
    }
    return ball;
}

bool in_directed_triangle(const BallDecode& ball) {
    for (int a : ball.out)
        for (int b = 0; b < ball.deg; ++b)
            if (ball.nn_arrow[a][b] &&
                ball.center_status[b] == EdgeStatus::OutOfSecond)
                return true;
    return false;
}

bool outneighbors_pairwise_adjacent(const BallDecode& ball) {
    for (std::size_t i = 0; i < ball.out.size(); ++i)
        for (std::size_t j = i + 1; j < ball.out.size(); ++j)
            if (!ball.nn_edge[ball.out[i]][ball.out[j]]) return false;
    return true;
}

bool has_dominating_outneighbor(const BallDecode& ball) {
    if (ball.out.empty()) return true;
    for (int w : ball.out) {
        bool covers = true;
        for (int x : ball.out)
            if (x != w && !ball.nn_edge[w][x]) {
                covers = false;
                break;
            }
        if (covers) return true;
    }
    return false;
}

}  // namespace

LocalVerdict check_tree_local(const OrientationView& view) {
    const BallDecode ball = decode_ball(view);
    LocalVerdict verdict;
    if (ball.center_conflict) verdict.violations.push_back(Rule::T1);
    if (ball.out.size() >= 2) verdict.violations.push_back(Rule::T2);
    return verdict;
}

LocalVerdict check_chordal_local(const OrientationView& view) {
    const BallDecode ball = decode_ball(view);
    LocalVerdict verdict;
    if (ball.center_conflict) verdict.violations.push_back(Rule::C1);
    if (!outneighbors_pairwise_adjacent(ball)) verdict.violations.push_back(Rule::C2);
    if (in_directed_triangle(ball)) verdict.violations.push_back(Rule::C3);
    return verdict;
}

LocalVerdict check_dismantlable_local(const OrientationView& view) {
    const BallDecode ball = decode_ball(view);
    LocalVerdict verdict;
    if (ball.center_conflict) verdict.violations.push_back(Rule::D1);
    if (!has_dominating_outneighbor(ball)) verdict.violations.push_back(Rule::D2);
    if (in_directed_triangle(ball)) verdict.violations.push_back(Rule::D3);
    return verdict;
}

LocalVerdict check_local(const OrientationView& view, SchemeId scheme) {
    switch (scheme) {
        case SchemeId::Tree: return check_tree_local(view);
        case SchemeId::Chordal: return check_chordal_local(view);
        case SchemeId::K4FreeDismantlable: return check_dismantlable_local(view);
    }
    fail(Errc::InvalidArgument, "unknown scheme");
}

GlobalVerdict verify_global(const Graph& g, const OrientationCertificate& certs,
                            SchemeId scheme) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        LocalVerdict verdict = check_local(extract_view(g, certs, v), scheme);
        if (!verdict.accepted())
            return {false, v, std::move(verdict.violations)};
    }
    return {true, -1, {}};
}

OrientationCertificate construct_tree_cert(const Graph& g) {
    const int n = g.node_count();
    const int m = g.edge_count();
    if (m != n - 1) fail(Errc::NotATree, "graph has cycles, expected a tree");

    OrientationCertificate certs;
    certs.bits.resize(n);
    for (NodeId v = 0; v < n; ++v) certs.bits[v].assign(g.degree(v), 0);

    // edge index per (node, port)
    std::vector<std::vector<int>> edge_at(n);
    for (NodeId v = 0; v < n; ++v) edge_at[v].assign(g.degree(v), -1);
    for (int k = 0; k < m; ++k) {
        edge_at[g.edges()[k].u][g.edges()[k].port_u] = k;
        edge_at[g.edges()[k].v][g.edges()[k].port_v] = k;
    }

    std::vector<char> oriented(m, 0);
    std::vector<int> udeg(n);
    for (NodeId v = 0; v < n; ++v) udeg[v] = g.degree(v);

    int done = 0;
    while (done < m) {
        std::vector<NodeId> leaves;
        for (NodeId v = 0; v < n; ++v)
            if (udeg[v] == 1) leaves.push_back(v);
        for (NodeId v : leaves) {
            if (udeg[v] != 1) continue;  // its last edge got oriented this round
            const auto ports = g.ports(v);
            for (std::size_t p = 0; p < ports.size(); ++p) {
                const int k = edge_at[v][p];
                if (oriented[k]) continue;
                certs.bits[v][p] = 1;
                certs.bits[ports[p].to][ports[p].rev_port] = 0;
                oriented[k] = 1;
                --udeg[v];
                --udeg[ports[p].to];
                ++done;
                break;
            }
        }
    }
    return certs;
}

namespace {

std::vector<int> order_positions(const Graph& g, const EliminationOrdering& ordering) {
    std::vector<int> pos(g.node_count(), -1);
    for (std::size_t i = 0; i < ordering.order.size(); ++i)
        pos[ordering.order[i]] = static_cast<int>(i);
    return pos;
}

OrientationCertificate orient_by_comparison(const Graph& g,
                                            const std::vector<int>& pos,
                                            bool first_when_less) {
    OrientationCertificate certs;
    certs.bits.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        certs.bits[v].assign(g.degree(v), 0);
    for (const auto& e : g.edges()) {
        const bool u_to_v = (pos[e.u] < pos[e.v]) == first_when_less;
        certs.bits[e.u][e.port_u] = u_to_v ? 1 : 0;
        certs.bits[e.v][e.port_v] = u_to_v ? 0 : 1;
    }
    return certs;
}

}  // namespace

OrientationCertificate construct_chordal_cert(const Graph& g,
                                              const EliminationOrdering& ordering) {
    if (ordering.kind != EliminationOrdering::Kind::Simplicial ||
        !replay_ordering(g, ordering))
        fail(Errc::InvalidOrdering, "not a valid simplicial ordering");
    // edges point from the earlier-eliminated endpoint to the later one;
    // the last node of the ordering is the sink
    return orient_by_comparison(g, order_positions(g, ordering), true);
}

OrientationCertificate construct_dismantlable_cert(
    const Graph& g, const EliminationOrdering& ordering, bool* k4_warning) {
    if (ordering.kind != EliminationOrdering::Kind::Dismantling ||
        !replay_ordering(g, ordering))
        fail(Errc::InvalidOrdering, "not a valid dismantling ordering");
    if (k4_warning) *k4_warning = !is_k4_free(g);
    // edges point toward the earlier (survivor-first) node; order.front()
    // is the sink
    return orient_by_comparison(g, order_positions(g, ordering), false);
}

namespace {

// arcs of the decoded orientation; throws ConflictingEdge
std::vector<std::pair<NodeId, NodeId>> decode_arcs(
    const Graph& g, const OrientationCertificate& certs) {
    certs.validate(g);
    std::vector<std::pair<NodeId, NodeId>> arcs;
    arcs.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        const EdgeStatus s = status_from_bits(certs.bits[e.u][e.port_u],
                                              certs.bits[e.v][e.port_v]);
        if (is_conflict(s))
            fail(Errc::ConflictingEdge,
                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not directed");
        if (s == EdgeStatus::OutOfFirst)
            arcs.emplace_back(e.u, e.v);
        else
            arcs.emplace_back(e.v, e.u);
    }
    return arcs;
}

}  // namespace

std::vector<NodeId> sinks(const Graph& g, const OrientationCertificate& certs) {
    std::vector<char> has_out(g.node_count(), 0);
    for (const auto& [tail, head] : decode_arcs(g, certs)) {
        (void)head;
        has_out[tail] = 1;
    }
    std::vector<NodeId> result;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!has_out[v]) result.push_back(v);
    return result;
}

bool is_acyclic(const Graph& g, const OrientationCertificate& certs) {
    const int n = g.node_count();
    std::vector<std::vector<NodeId>> next(n);
    std::vector<int> indegree(n, 0);
    for (const auto& [tail, head] : decode_arcs(g, certs)) {
        next[tail].push_back(head);
        ++indegree[head];
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
