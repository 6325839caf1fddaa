#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "locert/oracle.hpp"

namespace locert {

// On-disk graph document:
//   {"n": int, "edges": [[u,v],...],
//    "labels": {"node": int, ...} (optional, unlisted nodes are 0),
//    "certs": [...] (optional; all "0"/"1" strings for orientation bits,
//                    all integers for ternary values)}
// Ports derive from edge order, so a round trip preserves semantics exactly.
struct GraphDoc {
    Graph graph = build_graph(1, {});
    std::optional<OrientationCertificate> orientation_certs;
    std::optional<TernaryCertificate> ternary_certs;
    std::optional<std::vector<int>> labels;
};

GraphDoc graph_doc_from_json(const nlohmann::json& j);
nlohmann::json graph_doc_to_json(const GraphDoc& doc);

nlohmann::json verdict_to_json(const GlobalVerdict& verdict);
nlohmann::json summary_to_json(const GraphSummary& summary);
nlohmann::json report_to_json(const SoundnessReport& report);
nlohmann::json report_to_json(const StSoundnessReport& report);
nlohmann::json parent_map_to_json(const ParentMap& parents);
nlohmann::json cert_to_json(const OrientationCertificate& certs);
nlohmann::json cert_to_json(const TernaryCertificate& certs);

// DOT export; arrowheads decoded from orientation certificates, conflicting
// edges rendered dir=none, color=red; ternary values become node labels.
std::string to_dot(const GraphDoc& doc);

std::uint64_t fnv1a(const void* data, std::size_t size);
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t value);

}  // namespace locert
