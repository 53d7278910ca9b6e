#pragma once

#include <iosfwd>
#include <string>

#include "entgraph/taxonomy.hpp"

namespace entgraph {

inline constexpr const char* kToolVersion = "1.0.0";

// On-disk state document: amplitudes as explicit [re, im] pairs, most
// significant bit = qubit 1.
struct StateFile {
    int n_qubits = 0;
    std::vector<cdouble> amplitudes;
    std::string comment;
};

StateFile state_file_from(const PureState& psi, std::string comment = {});

// Throws errc::parse_error on malformed JSON or schema violations and
// errc::bad_length / errc::zero_vector on invalid amplitude data.
StateFile read_state_file(std::istream& in);
StateFile read_state_file_text(const std::string& text);

// Deterministic serialization; amplitudes keep full double precision.
std::string write_state_file(const StateFile& file);

// Formats with 12 significant digits, the precision used in reports.
std::string format_sig12(double value);

struct ReportThresholds {
    double edge_eps = kEdgeEps;
    double purity_eps = kPurityEps;
};

std::string report_to_text(const PureState& input, const ClassReport& report,
                           const ReportThresholds& thresholds);
// Byte-stable JSON document (fixed field order, 12-significant-digit
// floats) for machine consumption.
std::string report_to_json(const PureState& input, const ClassReport& report,
                           const ReportThresholds& thresholds);

std::string graph_to_dot(const EntangledGraph& graph);
std::string graph_to_json(const EntangledGraph& graph);

}  // namespace entgraph
