#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "kminor/engine.hpp"
#include "kminor/graph.hpp"
#include "kminor/spectral.hpp"

namespace kminor {

/// Canonical on-disk format: first line "n m", then m lines "u v" with
/// 0-indexed endpoints and u < v.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

nlohmann::json witness_to_json(const MinorWitness& w);
MinorWitness witness_from_json(const nlohmann::json& j, Vertex n);

nlohmann::json gate_to_json(const GateReport& gate);
nlohmann::json expansion_report_to_json(const ExpansionReport& rep);
nlohmann::json params_to_json(const EngineParams& p);
nlohmann::json run_report_to_json(const RunReport& rep, bool include_history);

}  // namespace kminor
