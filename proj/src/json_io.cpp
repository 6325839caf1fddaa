#include "locert/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace locert {

using nlohmann::json;

namespace {

[[noreturn]] void format_error(const std::string& field, const std::string& what) {
    fail(Errc::BadFormat, "field '" + field + "': " + what);
}

int require_int(const json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        format_error(field, "expected an integer");
    return j[field].get<int>();
}

BitString parse_bitstring(const std::string& text, const std::string& field) {
    BitString bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') format_error(field, "expected a 0/1 string");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

std::string bitstring_text(const BitString& bits) {
    std::string text;
    text.reserve(bits.size());
    for (std::uint8_t b : bits) text.push_back(b ? '1' : '0');
    return text;
}

}  // namespace

GraphDoc graph_doc_from_json(const json& j) {
    if (!j.is_object()) fail(Errc::BadFormat, "expected a JSON object");
    const int n = require_int(j, "n");

    if (!j.contains("edges") || !j["edges"].is_array())
        format_error("edges", "expected an array of [u,v] pairs");
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(j["edges"].size());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            format_error("edges", "expected an array of [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    GraphDoc doc;
    doc.graph = build_graph(n, edges);

    if (j.contains("labels")) {
        if (!j["labels"].is_object())
            format_error("labels", "expected an object {\"node\": int}");
        std::vector<int> labels(n, 0);
        for (const auto& [key, value] : j["labels"].items()) {
            int node = -1;
            try {
                node = std::stoi(key);
            } catch (const std::exception&) {
                format_error("labels", "key '" + key + "' is not a node index");
            }
            if (node < 0 || node >= n)
                format_error("labels", "node " + key + " out of range");
            if (!value.is_number_integer())
                format_error("labels", "value for node " + key + " not an integer");
            labels[node] = value.get<int>();
        }
        doc.labels = std::move(labels);
    }

    if (j.contains("certs")) {
        const json& certs = j["certs"];
        if (!certs.is_array() || static_cast<int>(certs.size()) != n)
            format_error("certs", "expected one entry per node");
        const bool all_strings =
            std::all_of(certs.begin(), certs.end(),
                        [](const json& c) { return c.is_string(); });
        const bool all_ints =
            std::all_of(certs.begin(), certs.end(),
                        [](const json& c) { return c.is_number_integer(); });
        if (all_strings) {
            OrientationCertificate orientation;
            orientation.bits.reserve(n);
            for (const auto& c : certs)
                orientation.bits.push_back(
                    parse_bitstring(c.get<std::string>(), "certs"));
            orientation.validate(doc.graph);
            doc.orientation_certs = std::move(orientation);
        } else if (all_ints) {
            TernaryCertificate ternary;
            ternary.values.reserve(n);
            for (const auto& c : certs) ternary.values.push_back(c.get<int>());
            ternary.validate(doc.graph);
            doc.ternary_certs = std::move(ternary);
        } else {
            format_error("certs",
                         "expected all bitstrings or all integers, not a mix");
        }
    }
    return doc;
}

json graph_doc_to_json(const GraphDoc& doc) {
    json j;
    j["n"] = doc.graph.node_count();
    j["edges"] = json::array();
    for (const auto& e : doc.graph.edges())
        j["edges"].push_back(json::array({e.u, e.v}));
    if (doc.labels) {
        json labels = json::object();
        for (std::size_t v = 0; v < doc.labels->size(); ++v)
            if ((*doc.labels)[v] != 0)
                labels[std::to_string(v)] = (*doc.labels)[v];
        j["labels"] = std::move(labels);
    }
    if (doc.orientation_certs)
        j["certs"] = cert_to_json(*doc.orientation_certs);
    else if (doc.ternary_certs)
        j["certs"] = cert_to_json(*doc.ternary_certs);
    return j;
}

json cert_to_json(const OrientationCertificate& certs) {
    json out = json::array();
    for (const BitString& bits : certs.bits) out.push_back(bitstring_text(bits));
    return out;
}

json cert_to_json(const TernaryCertificate& certs) {
    json out = json::array();
    for (int value : certs.values) out.push_back(value);
    return out;
}

json verdict_to_json(const GlobalVerdict& verdict) {
    json j;
    j["accepted"] = verdict.accepted;
    if (!verdict.accepted) {
        j["node"] = verdict.node;
        j["violations"] = json::array();
        for (Rule r : verdict.violations) j["violations"].push_back(rule_name(r));
    }
    return j;
}

json summary_to_json(const GraphSummary& summary) {
    return json{{"n", summary.n},
                {"m", summary.m},
                {"tree", summary.tree},
                {"chordal", summary.chordal},
                {"dismantlable", summary.dismantlable},
                {"k4_free", summary.k4_free}};
}

json report_to_json(const SoundnessReport& report) {
    json j;
    j["graph"] = summary_to_json(report.graph);
    j["scheme"] = scheme_name(report.scheme);
    j["examined"] = report.examined;
    j["locally_correct"] = report.locally_correct;
    j["globally_correct"] = report.globally_correct;
    j["cyclic_accepted"] = report.cyclic_accepted;
    j["existence"] = report.locally_correct > 0;
    j["counterexamples"] = json::object();
    j["counterexamples"]["total"] = report.counterexample_total;
    j["counterexamples"]["samples"] = json::array();
    for (const auto& certs : report.counterexamples)
        j["counterexamples"]["samples"].push_back(cert_to_json(certs));
    return j;
}

json report_to_json(const StSoundnessReport& report) {
    json j;
    j["graph"] = summary_to_json(report.graph);
    j["scheme"] = "st";
    j["root"] = report.root;
    j["examined"] = report.examined;
    j["locally_correct"] = report.locally_correct;
    j["globally_correct"] = report.globally_correct;
    j["eligibility_acyclic_all"] = report.eligibility_acyclic_all;
    j["counterexamples"] = json::object();
    j["counterexamples"]["total"] = report.counterexample_total;
    j["counterexamples"]["samples"] = json::array();
    for (const auto& certs : report.counterexamples)
        j["counterexamples"]["samples"].push_back(cert_to_json(certs));
    return j;
}

json parent_map_to_json(const ParentMap& parents) {
    json j = json::object();
    for (std::size_t v = 0; v < parents.parent_port.size(); ++v) {
        if (parents.parent_port[v])
            j[std::to_string(v)] = *parents.parent_port[v];
        else
            j[std::to_string(v)] = nullptr;
    }
    return j;
}

std::string to_dot(const GraphDoc& doc) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (NodeId v = 0; v < doc.graph.node_count(); ++v) {
        out << "  " << v;
        if (doc.ternary_certs)
            out << " [label=\"" << v << ":" << doc.ternary_certs->values[v]
                << "\"]";
        else if (doc.labels && (*doc.labels)[v] != 0)
            out << " [label=\"" << v << "*\"]";
        out << ";\n";
    }
    for (const auto& e : doc.graph.edges()) {
        if (doc.orientation_certs) {
            const EdgeStatus s =
                status_from_bits(doc.orientation_certs->bits[e.u][e.port_u],
                                 doc.orientation_certs->bits[e.v][e.port_v]);
            if (s == EdgeStatus::OutOfFirst)
                out << "  " << e.u << " -> " << e.v << ";\n";
            else if (s == EdgeStatus::OutOfSecond)
                out << "  " << e.v << " -> " << e.u << ";\n";
            else
                out << "  " << e.u << " -> " << e.v
                    << " [dir=none, color=red];\n";
        } else {
            out << "  " << e.u << " -> " << e.v << " [dir=none];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::uint64_t fnv1a(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fnv1a(const std::string& bytes) {
    return fnv1a(bytes.data(), bytes.size());
}

std::string hex64(std::uint64_t value) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace locert
