#include "kminor/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kminor {

using nlohmann::json;

Graph read_edge_list(std::istream& in) {
    std::uint64_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
    if (n > 0xFFFFFFFFull) throw std::runtime_error("edge list: n too large");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return build_graph(static_cast<Vertex>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

json witness_to_json(const MinorWitness& w) {
    json sets = json::array();
    for (const VertexSet& s : w.branch_sets) sets.push_back(s.to_vector());
    json j{{"kind", w.kind == MinorWitness::Kind::Complete ? "complete" : "pair-fraction"},
           {"order", w.order()},
           {"branch_sets", sets}};
    if (w.kind == MinorWitness::Kind::PairFraction) j["threshold"] = w.threshold;
    return j;
}

MinorWitness witness_from_json(const json& j, Vertex n) {
    MinorWitness w;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "complete") {
        w.kind = MinorWitness::Kind::Complete;
    } else if (kind == "pair-fraction") {
        w.kind = MinorWitness::Kind::PairFraction;
        w.threshold = j.at("threshold").get<double>();
    } else {
        throw std::runtime_error("witness: unknown kind '" + kind + "'");
    }
    for (const auto& arr : j.at("branch_sets"))
        w.branch_sets.push_back(VertexSet::of(n, arr.get<std::vector<Vertex>>()));
    if (j.contains("order") &&
        j.at("order").get<std::size_t>() != w.branch_sets.size())
        throw std::runtime_error("witness: order does not match branch_sets");
    return w;
}

json gate_to_json(const GateReport& gate) {
    json j{{"route", route_name(gate.route)},
           {"certified", gate.certified},
           {"eps", gate.eps},
           {"d", gate.d}};
    if (gate.exact_evaluated) {
        j["exact"] = {{"certified", gate.exact_certified},
                      {"h", gate.h},
                      {"h_k", gate.h_k},
                      {"k", gate.k}};
    }
    if (gate.eigen_evaluated) {
        json e{{"certified", gate.eigen_certified},
               {"lambda2", gate.lambda2},
               {"threshold", gate.lambda2_threshold}};
        if (gate.eigen_certified) {
            e["implied_h_lower"] = gate.implied_h_lower;
            e["implied_hk_lower"] = gate.implied_hk_lower;
            e["implied_k"] = gate.implied_k;
        }
        j["eigenvalue"] = e;
    }
    return j;
}

namespace {

json cut_to_json(const CutMinimum& c, const char* method) {
    return json{{"value", c.value},
                {"cut", c.cut},
                {"denom", c.denom},
                {"set", c.set.to_vector()},
                {"method", method}};
}

}  // namespace

json expansion_report_to_json(const ExpansionReport& rep) {
    json j{{"n", rep.n},
           {"m", rep.m},
           {"max_degree", rep.max_degree},
           {"connected", rep.connected}};
    if (rep.h) j["h"] = cut_to_json(*rep.h, "exact");
    if (rep.h_k) {
        j["h_k"] = cut_to_json(*rep.h_k, "exact");
        j["h_k"]["k"] = rep.k;
    }
    if (rep.h_prime) j["h_prime"] = cut_to_json(*rep.h_prime, "exact");
    if (rep.phi)
        j["phi"] = {{"value", rep.phi->value},
                    {"disconnected", rep.phi->disconnected},
                    {"cut", rep.phi->cut},
                    {"vol", rep.phi->vol},
                    {"set", rep.phi->set.to_vector()},
                    {"method", "exact"}};
    j["lambda_norm"] = {{"value", rep.lambda_norm.value},
                        {"disconnected", rep.lambda_norm.disconnected},
                        {"residual", rep.lambda_norm.residual},
                        {"matvecs", rep.lambda_norm.matvecs},
                        {"method", rep.lambda_norm.disconnected ? "exact"
                                                                : "iterative-estimate"}};
    if (rep.adjacency)
        j["lambda2_adj"] = {{"lambda2", rep.adjacency->lambda2},
                            {"lambda_min", rep.adjacency->lambda_min},
                            {"lambda_abs2", rep.adjacency->lambda_abs2},
                            {"residual", rep.adjacency->residual},
                            {"matvecs", rep.adjacency->matvecs},
                            {"method", "iterative-estimate"}};
    if (rep.h_lower_bound)
        j["h_lower_bound"] = {{"value", *rep.h_lower_bound},
                              {"method", "certified-bound"}};
    if (rep.sweep)
        j["sweep"] = {{"set", rep.sweep->set.to_vector()},
                      {"cut", rep.sweep->cut},
                      {"vol", rep.sweep->vol},
                      {"cut_ratio", rep.sweep->cut_ratio},
                      {"bound", rep.sweep->bound},
                      {"rayleigh", rep.sweep->rayleigh},
                      {"method", "iterative-estimate"}};
    j["gate"] = gate_to_json(rep.gate);
    return j;
}

json params_to_json(const EngineParams& p) {
    return json{{"mode", mode_name(p.mode)},
                {"n", p.n},
                {"d", p.d},
                {"eps", p.eps},
                {"zeta", p.zeta},
                {"slack", p.slack},
                {"t", p.t},
                {"r", p.r},
                {"size_cap", p.size_cap},
                {"keep_threshold", p.keep_threshold},
                {"keep_edges", p.keep_edges},
                {"u_min_deg", p.u_min_deg},
                {"growth_threshold", p.growth_threshold},
                {"spectral_gate", p.spectral_gate},
                {"d_rate_small", p.d_rate_small},
                {"d_rate_big", p.d_rate_big},
                {"hit_fraction", p.hit_fraction},
                {"pair_threshold", p.pair_threshold},
                {"s", p.s},
                {"cover_coeff", p.cover_coeff},
                {"cover_cap", p.cover_cap},
                {"K", p.K},
                {"C", p.C},
                {"retries", p.retries}};
}

json run_report_to_json(const RunReport& rep, bool include_history) {
    json j{{"outcome", rep.success ? "success" : "failure"},
           {"target_r", rep.target_r},
           {"achieved_order", rep.achieved_order},
           {"iterations", rep.iterations},
           {"final", {{"q", rep.final_partition.branch_sets.size()},
                      {"d_size", rep.final_partition.d_set.size()},
                      {"u_size", rep.final_partition.u_set.size()}}}};
    if (!rep.success) j["failure_reason"] = rep.failure_reason;
    if (rep.witness) j["witness"] = witness_to_json(*rep.witness);
    if (include_history) {
        json h = json::array();
        for (const HistoryEntry& e : rep.history)
            h.push_back({{"iteration", e.iteration},
                         {"event", event_name(e.event)},
                         {"moved", e.moved},
                         {"q", e.q},
                         {"d_size", e.d_size},
                         {"u_size", e.u_size}});
        j["history"] = h;
    }
    return j;
}

}  // namespace kminor
