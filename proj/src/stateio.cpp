#include "entgraph/stateio.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string join_block(const std::vector<int>& block, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(block[i]);
    }
    return out;
}

std::string split_name(const std::vector<int>& block, int n) {
    std::string left;
    std::string right;
    for (int q = 1; q <= n; ++q) {
        const bool in_block =
            std::find(block.begin(), block.end(), q) != block.end();
        (in_block ? left : right) += std::to_string(q);
    }
    return left + "|" + right;
}

std::string format_weight4(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

}  // namespace

std::string format_sig12(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

StateFile state_file_from(const PureState& psi, std::string comment) {
    StateFile file;
    file.n_qubits = psi.n_qubits;
    file.amplitudes = psi.amplitudes;
    file.comment = std::move(comment);
    return file;
}

StateFile read_state_file(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_state_file_text(buffer.str());
}

StateFile read_state_file_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amplitudes"))
        raise(errc::parse_error, "state file needs 'n_qubits' and 'amplitudes'");
    StateFile file;
    try {
        file.n_qubits = doc.at("n_qubits").get<int>();
        file.comment = doc.value("comment", std::string{});
        for (const auto& entry : doc.at("amplitudes")) {
            if (!entry.is_array() || entry.size() != 2)
                raise(errc::parse_error, "each amplitude must be a [re, im] pair");
            file.amplitudes.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        raise(errc::parse_error, std::string("malformed state file: ") + e.what());
    }
    if (file.n_qubits < 2 || file.n_qubits > 4 ||
        file.amplitudes.size() != (std::size_t(1) << file.n_qubits))
        raise(errc::bad_length, "amplitude count must be 2^n_qubits with n in 2..4");
    return file;
}

std::string write_state_file(const StateFile& file) {
    std::ostringstream out;
    out << "{\n";
    if (!file.comment.empty())
        out << "  \"comment\": " << nlohmann::json(file.comment).dump() << ",\n";
    out << "  \"n_qubits\": " << file.n_qubits << ",\n";
    out << "  \"amplitudes\": [\n";
    for (std::size_t i = 0; i < file.amplitudes.size(); ++i) {
        out << "    [" << format_full(file.amplitudes[i].real()) << ", "
            << format_full(file.amplitudes[i].imag()) << "]"
            << (i + 1 < file.amplitudes.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

std::string report_to_text(const PureState& input, const ClassReport& report,
                           const ReportThresholds& thresholds) {
    const int n = report.measures.n_qubits;
    std::ostringstream out;
    out << "state: " << n << " qubits\n";
    out << "amplitudes:\n";
    for (std::size_t i = 0; i < input.amplitudes.size(); ++i) {
        out << "  [" << i << "] " << format_sig12(input.amplitudes[i].real()) << " "
            << format_sig12(input.amplitudes[i].imag()) << "i\n";
    }
    out << "thresholds: edge-eps=" << format_sig12(thresholds.edge_eps)
        << " purity-eps=" << format_sig12(thresholds.purity_eps) << "\n";
    out << "factorization:";
    for (const auto& block : report.factorization) out << " {" << join_block(block) << "}";
    out << "\n";
    out << "class: " << to_string(report.label) << "\n";
    out << "pairwise concurrence:\n";
    for (const auto& [pair, value] : report.measures.pairwise)
        out << "  C(" << pair.first << "," << pair.second << ") = " << format_sig12(value) << "\n";
    out << "split concurrence:\n";
    for (const auto& [block, value] : report.measures.splits)
        out << "  C " << split_name(block, n) << " = " << format_sig12(value) << "\n";
    out << "global concurrence: " << format_sig12(report.measures.global) << "\n";
    if (!report.measures.triples.empty()) {
        out << "pure triples:\n";
        for (const auto& [triple, value] : report.measures.triples)
            out << "  C{" << join_block(triple) << "} = " << format_sig12(value) << "\n";
    }
    out << "circles:";
    if (report.graph.circles.empty()) {
        out << " none";
    } else {
        for (const auto& [subset, value] : report.graph.circles)
            out << " {" << join_block(subset) << "}=" << format_sig12(value);
    }
    out << "\n";
    out << "version: " << kToolVersion << "\n";
    return out.str();
}

std::string report_to_json(const PureState& input, const ClassReport& report,
                           const ReportThresholds& thresholds) {
    const int n = report.measures.n_qubits;
    std::ostringstream out;
    out << "{";
    out << "\"tool\":\"entgraph\",\"version\":\"" << kToolVersion << "\",";
    out << "\"thresholds\":{\"edge_eps\":" << format_sig12(thresholds.edge_eps)
        << ",\"purity_eps\":" << format_sig12(thresholds.purity_eps) << "},";
    out << "\"input\":{\"n_qubits\":" << n << ",\"amplitudes\":[";
    for (std::size_t i = 0; i < input.amplitudes.size(); ++i) {
        if (i) out << ",";
        out << "[" << format_sig12(input.amplitudes[i].real()) << ","
            << format_sig12(input.amplitudes[i].imag()) << "]";
    }
    out << "]},";
    out << "\"factorization\":[";
    for (std::size_t b = 0; b < report.factorization.size(); ++b) {
        if (b) out << ",";
        out << "[" << join_block(report.factorization[b]) << "]";
    }
    out << "],";
    out << "\"label\":\"" << to_string(report.label) << "\",";
    out << "\"pairwise\":[";
    bool first = true;
    for (const auto& [pair, value] : report.measures.pairwise) {
        if (!first) out << ",";
        first = false;
        out << "{\"i\":" << pair.first << ",\"j\":" << pair.second
            << ",\"concurrence\":" << format_sig12(value) << "}";
    }
    out << "],";
    out << "\"splits\":[";
    first = true;
    for (const auto& [block, value] : report.measures.splits) {
        if (!first) out << ",";
        first = false;
        out << "{\"block\":[" << join_block(block) << "],\"concurrence\":" << format_sig12(value)
            << "}";
    }
    out << "],";
    out << "\"global\":" << format_sig12(report.measures.global) << ",";
    out << "\"triples\":[";
    first = true;
    for (const auto& [triple, value] : report.measures.triples) {
        if (!first) out << ",";
        first = false;
        out << "{\"subset\":[" << join_block(triple) << "],\"value\":" << format_sig12(value) << "}";
    }
    out << "],";
    out << "\"circles\":[";
    first = true;
    for (const auto& [subset, value] : report.graph.circles) {
        if (!first) out << ",";
        first = false;
        out << "{\"subset\":[" << join_block(subset) << "],\"value\":" << format_sig12(value) << "}";
    }
    out << "]}";
    return out.str();
}

std::string graph_to_dot(const EntangledGraph& graph) {
    std::ostringstream out;
    out << "graph entangled {\n";
    std::string attr;
    for (const auto& [subset, value] : graph.circles) {
        if (!attr.empty()) attr += ";";
        attr += "{" + join_block(subset) + "}=" + format_weight4(value);
    }
    out << "  graph [circles=\"" << attr << "\"];\n";
    for (const auto& [subset, value] : graph.circles) {
        out << "  // circle {" << join_block(subset) << "} value " << format_weight4(value) << "\n";
        out << "  // { rank=same; " << join_block(subset, "; ") << "; }\n";
    }
    for (int v = 1; v <= graph.n; ++v) out << "  " << v << ";\n";
    for (const auto& [pair, weight] : graph.edges) {
        out << "  " << pair.first << " -- " << pair.second << " [label=\""
            << format_weight4(weight) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_to_json(const EntangledGraph& graph) {
    std::ostringstream out;
    out << "{\"n\":" << graph.n << ",\"edges\":[";
    bool first = true;
    for (const auto& [pair, weight] : graph.edges) {
        if (!first) out << ",";
        first = false;
        out << "{\"i\":" << pair.first << ",\"j\":" << pair.second
            << ",\"weight\":" << format_sig12(weight) << "}";
    }
    out << "],\"circles\":[";
    first = true;
    for (const auto& [subset, value] : graph.circles) {
        if (!first) out << ",";
        first = false;
        out << "{\"subset\":[" << join_block(subset) << "],\"value\":" << format_sig12(value) << "}";
    }
    out << "]}";
    return out.str();
}

}  // namespace entgraph
