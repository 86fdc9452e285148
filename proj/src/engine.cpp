#include "kminor/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

#include "kminor/eigen_iter.hpp"
#include "kminor/spectral.hpp"
#include "kminor/walks.hpp"

namespace kminor {

std::optional<EngineMode> parse_mode(const std::string& name) {
    if (name == "sparse") return EngineMode::Sparse;
    if (name == "constd") return EngineMode::ConstantDegree;
    if (name == "intermediate") return EngineMode::Intermediate;
    return std::nullopt;
}

const char* mode_name(EngineMode m) {
    switch (m) {
        case EngineMode::Sparse: return "sparse";
        case EngineMode::ConstantDegree: return "constd";
        case EngineMode::Intermediate: return "intermediate";
    }
    return "?";
}

const char* event_name(EngineEvent e) {
    switch (e) {
        case EngineEvent::TiRecycled: return "T_i-recycled";
        case EngineEvent::VertexMoved: return "vertex-moved";
        case EngineEvent::SweepMoved: return "sweep-moved";
        case EngineEvent::CoveringBuilt: return "covering-built";
        case EngineEvent::ExpanderGrown: return "expander-grown";
        case EngineEvent::SMoved: return "S-moved";
    }
    return "?";
}

EngineParams compute_params(Vertex n, std::uint32_t d, double eps, EngineMode mode) {
    if (!(eps > 0.0 && eps < 0.5))
        throw std::invalid_argument("compute_params: eps must lie in (0, 1/2)");
    if (d < 3) throw std::invalid_argument("compute_params: need d >= 3");
    if (n < 4) throw std::invalid_argument("compute_params: need n >= 4");

    EngineParams p;
    p.mode = mode;
    p.n = n;
    p.d = d;
    p.eps = eps;
    p.zeta = eps / 8.0;
    p.slack = std::max(p.zeta, 1.0);
    p.C = 3.0;
    p.retries = static_cast<int>(std::ceil(p.C * std::log(static_cast<double>(n))));
    p.cover_coeff = 16.0;
    p.K = 32.0 / (p.zeta * p.zeta * p.zeta);
    p.u_min_deg = p.zeta * d;
    p.spectral_gate = p.zeta * p.zeta / 2.0;
    p.growth_threshold = (0.5 + 3.0 * p.zeta) * d;

    const double dn = static_cast<double>(n);
    const double dd = static_cast<double>(d);
    auto derive_r = [&](double t, double cap_coeff) {
        double room = dn / (4.0 * (1.0 + p.slack) * t);
        return std::max<std::uint32_t>(
            1, static_cast<std::uint32_t>(std::floor(std::min(cap_coeff * t, room))));
    };

    switch (mode) {
        case EngineMode::Sparse: {
            const std::uint32_t t_limit =
                static_cast<std::uint32_t>(std::floor(eps * dn / (4.0 * dd)));
            if (t_limit < 4)
                throw std::invalid_argument(
                    "compute_params: regime error, eps*n/(4d) = " +
                    std::to_string(eps * dn / (4.0 * dd)) +
                    " < 4 leaves no room for branch-set growth (need t <= eps*n/(4d))");
            double t_raw = std::sqrt(dn * std::max(std::log(dd), 1.0) / dd);
            p.t = std::clamp<std::uint32_t>(
                static_cast<std::uint32_t>(std::ceil(t_raw)), 4, t_limit);
            p.keep_threshold = std::max(
                1.0, (p.growth_threshold - std::max(p.zeta * dd, 1.0 + p.slack)) * p.t);
            p.d_rate_small = (0.5 + 3.0 * p.zeta) * dd;
            p.d_rate_big = 3.0 * p.zeta * dd;
            p.size_cap = (1.0 + p.slack) * p.t;
            p.cover_cap = p.slack * p.t;
            p.s = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(p.keep_threshold)));
            // A pruned covering skeleton pays roughly one graph diameter of
            // vertices per branch set it must touch.
            double diameter_est =
                std::max(2.0, std::log(dn) / std::log(std::max(2.0, dd - 1.0)));
            p.r = derive_r(p.t, p.slack / diameter_est);
            p.hit_fraction = 1.0;
            break;
        }
        case EngineMode::ConstantDegree: {
            p.t = static_cast<std::uint32_t>(std::ceil(std::sqrt(dn)));
            if (p.t >= n)
                throw std::invalid_argument("compute_params: n too small for constant-degree mode");
            // Edge thresholds above (d-2)/d per vertex are unsatisfiable for
            // connected sets; run the bookkeeping at a feasible effective eps.
            const double eps_eff = std::min(eps, (dd - 2.0) / (2.0 * dd));
            p.keep_edges = eps_eff * p.t * dd;
            p.d_rate_small = eps_eff * dd;
            p.d_rate_big = p.d_rate_small;
            p.size_cap = (1.0 + p.slack) * p.t;
            p.cover_cap = p.size_cap;
            p.s = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(eps_eff * p.t)));
            p.r = derive_r(p.t, 0.5);
            p.hit_fraction = 1.0;
            break;
        }
        case EngineMode::Intermediate: {
            p.t = std::max<std::uint32_t>(
                4, static_cast<std::uint32_t>(std::ceil(2.0 * std::sqrt(dn / dd))));
            p.keep_threshold = std::max(
                1.0, (p.growth_threshold - std::max(p.zeta * dd, 1.0 + p.slack)) * p.t);
            p.d_rate_small = (0.5 + 3.0 * p.zeta) * dd;
            p.d_rate_big = 3.0 * p.zeta * dd;
            p.size_cap = (1.0 + p.slack) * p.t;
            p.cover_cap = p.slack * p.t;
            p.s = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(p.keep_threshold)));
            p.r = derive_r(p.t, 1.5 * p.slack);
            p.hit_fraction = 0.1;
            p.pair_threshold = 0.1;
            break;
        }
    }
    return p;
}

GrowthResult grow_connected_expander(const Graph& g, Vertex v, std::uint32_t s,
                                     double threshold) {
    if (s < 1 || s > g.n())
        throw std::invalid_argument("grow_connected_expander: s out of range");
    if (v >= g.n())
        throw std::invalid_argument("grow_connected_expander: start vertex out of range");

    VertexSet x(g.n()), y(g.n());
    x.insert(v);
    for (Vertex w : g.neighbors(v)) y.insert(w);

    auto gain = [&](Vertex cand) {
        std::uint32_t fresh = 0;
        for (Vertex w : g.neighbors(cand))
            if (!x.contains(w) && !y.contains(w)) ++fresh;
        return fresh;
    };
    auto extend = [&](Vertex cand) {
        x.insert(cand);
        y.erase(cand);
        for (Vertex w : g.neighbors(cand))
            if (!x.contains(w)) y.insert(w);
    };
    auto make_obstruction = [&]() {
        GrowthResult res;
        res.kind = GrowthResult::Kind::Obstruction;
        res.set = x;
        res.set |= y;
        res.external = external_neighborhood(g, res.set).size();
        return res;
    };

    while (x.size() < s) {
        if (y.empty()) return make_obstruction();  // component exhausted, cut is 0
        const double need = (threshold - 1.0) * static_cast<double>(x.size() + 1);
        Vertex pick = ~Vertex{0};
        Vertex forced = ~Vertex{0};
        std::uint32_t forced_gain = 0;
        y.for_each([&](Vertex cand) {
            if (pick != ~Vertex{0}) return;
            std::uint32_t fresh = gain(cand);
            if (static_cast<double>(y.size()) - 1.0 + fresh >= need) pick = cand;
        });
        if (pick != ~Vertex{0}) {
            extend(pick);
            continue;
        }
        // No extension maintains the expansion bound. Certify the
        // obstruction (all outgoing edges leave through Y) or force the
        // best candidate and keep going.
        std::uint64_t out_edges = 0;
        y.for_each([&](Vertex cand) {
            std::uint32_t fresh = gain(cand);
            out_edges += fresh;
            if (forced == ~Vertex{0} || fresh > forced_gain) {
                forced = cand;
                forced_gain = fresh;
            }
        });
        if (static_cast<double>(out_edges) <
            threshold * static_cast<double>(x.size() + y.size()))
            return make_obstruction();
        extend(forced);
    }

    std::uint64_t external = y.size();
    if (static_cast<double>(external) >=
        (threshold - 1.0) * static_cast<double>(s)) {
        GrowthResult res;
        res.kind = GrowthResult::Kind::Grown;
        res.set = std::move(x);
        res.external = external;
        return res;
    }
    std::uint64_t out_edges = 0;
    y.for_each([&](Vertex cand) { out_edges += gain(cand); });
    if (static_cast<double>(out_edges) <
        threshold * static_cast<double>(x.size() + y.size()))
        return make_obstruction();
    GrowthResult res;
    res.kind = GrowthResult::Kind::Stuck;
    res.set = std::move(x);
    res.set |= y;
    res.external = external_neighborhood(g, res.set).size();
    return res;
}

namespace {

bool sets_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
    const VertexSet& small = a.size() <= b.size() ? a : b;
    const VertexSet& other = a.size() <= b.size() ? b : a;
    bool found = false;
    small.for_each([&](Vertex v) {
        if (found) return;
        for (Vertex w : g.neighbors(v))
            if (other.contains(w)) {
                found = true;
                return;
            }
    });
    return found;
}

}  // namespace

WitnessReport verify_witness(const Graph& g, const MinorWitness& w) {
    WitnessReport rep;
    const std::size_t q = w.branch_sets.size();
    for (std::size_t i = 0; i < q; ++i) {
        if (w.branch_sets[i].empty()) {
            rep.violation = "branch set is empty";
            rep.index_a = static_cast<int>(i);
            return rep;
        }
        if (w.branch_sets[i].universe() != g.n()) {
            rep.violation = "branch set universe mismatch";
            rep.index_a = static_cast<int>(i);
            return rep;
        }
    }
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j)
            if (w.branch_sets[i].intersects(w.branch_sets[j])) {
                rep.violation = "branch sets overlap";
                rep.index_a = static_cast<int>(i);
                rep.index_b = static_cast<int>(j);
                return rep;
            }
    for (std::size_t i = 0; i < q; ++i)
        if (!is_connected_set(g, w.branch_sets[i])) {
            rep.violation = "branch set is disconnected";
            rep.index_a = static_cast<int>(i);
            return rep;
        }
    std::uint64_t adjacent_pairs = 0;
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            bool adj = sets_adjacent(g, w.branch_sets[i], w.branch_sets[j]);
            if (adj) ++adjacent_pairs;
            if (!adj && w.kind == MinorWitness::Kind::Complete) {
                rep.violation = "branch sets not adjacent";
                rep.index_a = static_cast<int>(i);
                rep.index_b = static_cast<int>(j);
                return rep;
            }
        }
    rep.adjacent_ordered_pairs = 2 * adjacent_pairs;
    if (w.kind == MinorWitness::Kind::PairFraction) {
        double required = w.threshold * static_cast<double>(q) *
                          (static_cast<double>(q) - 1.0);
        if (static_cast<double>(rep.adjacent_ordered_pairs) < required) {
            rep.violation = "adjacent pair fraction below threshold";
            return rep;
        }
    }
    rep.valid = true;
    return rep;
}

PartitionReport verify_partition(const Graph& g, const Partition& p,
                                 const EngineParams& params) {
    PartitionReport rep;
    const Vertex n = g.n();
    auto fail = [&](const std::string& why) {
        rep.valid = false;
        rep.violation = why;
        return rep;
    };

    VertexSet seen = p.d_set;
    std::size_t total = p.d_set.size();
    for (const VertexSet& t : p.branch_sets) {
        total += t.size();
        seen |= t;
    }
    total += p.u_set.size();
    seen |= p.u_set;
    if (seen.size() != n || total != n)
        return fail("D, T_i, U do not partition V");

    const std::size_t q = p.branch_sets.size();
    for (std::size_t i = 0; i < q; ++i) {
        const VertexSet& t = p.branch_sets[i];
        if (t.empty()) return fail("(a) branch set " + std::to_string(i) + " empty");
        if (static_cast<double>(t.size()) > params.size_cap + 1e-9)
            return fail("(a) branch set " + std::to_string(i) + " exceeds size cap");
        if (!is_connected_set(g, t))
            return fail("(a) branch set " + std::to_string(i) + " disconnected");
        if (params.mode != EngineMode::ConstantDegree) {
            std::uint64_t nbr = external_neighborhood(g, t).size();
            if (static_cast<double>(nbr) + 1e-9 < params.keep_threshold)
                return fail("(a) branch set " + std::to_string(i) +
                            " neighborhood below threshold");
        }
    }

    if (params.mode == EngineMode::Intermediate) {
        std::uint64_t adjacent = 0;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j)
                if (sets_adjacent(g, p.branch_sets[i], p.branch_sets[j])) ++adjacent;
        double required = params.pair_threshold * static_cast<double>(q) *
                          (static_cast<double>(q) - 1.0);
        if (static_cast<double>(2 * adjacent) < required)
            return fail("(b) adjacent pair fraction below threshold");
    } else {
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j)
                if (!sets_adjacent(g, p.branch_sets[i], p.branch_sets[j]))
                    return fail("(b) branch sets " + std::to_string(i) + "," +
                                std::to_string(j) + " not adjacent");
    }

    if (static_cast<double>(p.d_set.size()) > 2.0 * n / 3.0 + 1e-9)
        return fail("(c) |D| > 2n/3");

    if (!p.d_set.empty()) {
        std::uint64_t e_du = edges_between(g, p.d_set, p.u_set);
        double dsz = static_cast<double>(p.d_set.size());
        if (params.mode == EngineMode::ConstantDegree) {
            if (static_cast<double>(e_du) >= params.d_rate_small * dsz)
                return fail("(d) e(D,U) >= eps |D| d");
        } else {
            double rate = dsz <= params.eps * n ? params.d_rate_small : params.d_rate_big;
            if (static_cast<double>(e_du) > rate * dsz + 1e-9)
                return fail("(d) e(D,U) above rate");
        }
    }
    rep.valid = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Engine loop.
// ---------------------------------------------------------------------------

namespace {

struct EngineState {
    const Graph& g;
    const EngineParams& P;
    VertexSet u_set;
    VertexSet d_set;
    std::vector<VertexSet> branch;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_edges;
    std::vector<std::uint32_t> u_deg;
    std::set<Vertex> low;
    std::uint64_t u_version = 1;

    InducedSubgraph gu;
    std::vector<Vertex> local_id;
    std::uint64_t gu_version = 0;

    std::vector<double> warm;  // previous Fiedler direction, by original id

    EngineState(const Graph& graph, const EngineParams& params)
        : g(graph), P(params), u_set(VertexSet::full(graph.n())),
          d_set(graph.n()), u_deg(graph.n()), local_id(graph.n(), 0) {
        for (Vertex v = 0; v < graph.n(); ++v) {
            u_deg[v] = graph.degree(v);
            if (u_deg[v] < P.u_min_deg) low.insert(v);
        }
    }

    void remove_from_u(const VertexSet& s) {
        s.for_each([&](Vertex v) {
            u_set.erase(v);
            low.erase(v);
            for (Vertex w : g.neighbors(v)) {
                if (u_deg[w] > 0) --u_deg[w];
                if (u_set.contains(w) && u_deg[w] < P.u_min_deg) low.insert(w);
            }
        });
        ++u_version;
    }

    void refresh_gu() {
        if (gu_version == u_version) return;
        gu = induced_subgraph(g, u_set);
        for (Vertex i = 0; i < gu.to_original.size(); ++i)
            local_id[gu.to_original[i]] = i;
        gu_version = u_version;
    }

    std::uint64_t nbr_u_count(const VertexSet& t) const {
        VertexSet seen(g.n());
        t.for_each([&](Vertex v) {
            for (Vertex w : g.neighbors(v))
                if (u_set.contains(w)) seen.insert(w);
        });
        return seen.size();
    }

    std::uint64_t edges_to_u(const VertexSet& t) const {
        std::uint64_t e = 0;
        t.for_each([&](Vertex v) {
            for (Vertex w : g.neighbors(v))
                if (u_set.contains(w)) ++e;
        });
        return e;
    }

    VertexSet to_original(const VertexSet& local) const {
        VertexSet out(g.n());
        local.for_each([&](Vertex v) { out.insert(gu.to_original[v]); });
        return out;
    }
};

}  // namespace

RunReport find_minor(const Graph& g, const EngineParams& params, RngStream& rng,
                     const EngineOptions& opts) {
    if (params.n != g.n())
        throw std::invalid_argument("find_minor: params derived for a different order");
    if (!is_connected(g))
        throw std::invalid_argument("find_minor: graph must be connected");

    const Vertex n = g.n();
    const std::uint32_t max_iter =
        opts.max_iterations > 0 ? opts.max_iterations : 2 * n;
    const auto start_time = std::chrono::steady_clock::now();
    auto out_of_time = [&]() {
        if (opts.time_budget_s <= 0) return false;
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_time;
        return dt.count() > opts.time_budget_s;
    };

    EngineState st(g, params);
    RunReport rep;
    rep.target_r = params.r;

    auto snapshot_partition = [&]() {
        rep.final_partition.d_set = st.d_set;
        rep.final_partition.branch_sets = st.branch;
        rep.final_partition.u_set = st.u_set;
        rep.final_partition.pair_edges = st.pair_edges;
    };
    auto fail = [&](std::uint32_t iter, const std::string& why) {
        rep.success = false;
        rep.failure_reason = why;
        rep.iterations = iter;
        snapshot_partition();
        return rep;
    };

    // Verify and remember the witness each time q reaches a new peak, so
    // even failed runs report the best minor actually found.
    auto record_peak = [&]() -> bool {
        std::uint32_t q = static_cast<std::uint32_t>(st.branch.size());
        if (q <= rep.achieved_order) return true;
        MinorWitness w;
        w.kind = params.mode == EngineMode::Intermediate
                     ? MinorWitness::Kind::PairFraction
                     : MinorWitness::Kind::Complete;
        w.threshold = params.pair_threshold;
        w.branch_sets = st.branch;
        WitnessReport check = verify_witness(g, w);
        if (!check.valid) return false;
        rep.witness = std::move(w);
        rep.achieved_order = q;
        return true;
    };

    std::uint32_t iter = 0;
    while (true) {
        std::uint32_t q = static_cast<std::uint32_t>(st.branch.size());
        if (q >= params.r) {
            rep.success = true;
            rep.iterations = iter;
            snapshot_partition();
            return rep;
        }
        if (iter >= max_iter) return fail(iter, "iteration-cap");
        if (out_of_time()) return fail(iter, "timeout");
        if (st.u_set.size() < n / 2) return fail(iter, "u-underflow");
        ++iter;

        auto log_event = [&](EngineEvent ev, std::uint32_t moved) {
            rep.history.push_back({iter, ev, moved,
                                   static_cast<std::uint32_t>(st.branch.size()),
                                   st.d_set.size(), st.u_set.size()});
        };
        auto end_iteration = [&]() -> std::optional<RunReport> {
            if (opts.check_invariants) {
                Partition snap{st.d_set, st.branch, st.u_set, st.pair_edges};
                PartitionReport pr = verify_partition(g, snap, params);
                if (!pr.valid) return fail(iter, "invariant: " + pr.violation);
            }
            return std::nullopt;
        };

        // Rule 1: recycle branch sets starved of U-neighbors.
        bool fired = false;
        for (std::size_t i = 0; i < st.branch.size(); ++i) {
            bool recycle;
            if (params.mode == EngineMode::ConstantDegree)
                recycle = static_cast<double>(st.edges_to_u(st.branch[i])) <=
                          params.keep_edges;
            else
                recycle = static_cast<double>(st.nbr_u_count(st.branch[i])) <
                          params.keep_threshold;
            if (!recycle) continue;
            std::uint32_t moved = static_cast<std::uint32_t>(st.branch[i].size());
            st.d_set |= st.branch[i];
            st.branch.erase(st.branch.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
            for (auto [a, b] : st.pair_edges) {
                if (a == i || b == i) continue;
                kept.emplace_back(a > i ? a - 1 : a, b > i ? b - 1 : b);
            }
            st.pair_edges = std::move(kept);
            log_event(EngineEvent::TiRecycled, moved);
            fired = true;
            break;
        }
        if (fired) {
            if (auto r = end_iteration()) return *r;
            continue;
        }

        // Rule 2: shed a vertex with too few U-neighbors.
        if (!st.low.empty()) {
            Vertex v = *st.low.begin();
            VertexSet s(n);
            s.insert(v);
            st.d_set.insert(v);
            st.remove_from_u(s);
            log_event(EngineEvent::VertexMoved, 1);
            if (auto r = end_iteration()) return *r;
            continue;
        }

        st.refresh_gu();
        const Graph& gu = st.gu.graph;

        // A fragmented working graph: keep the largest component, move the
        // rest to D (their cut into the remaining U is empty).
        Components comps = connected_components(gu);
        if (comps.count > 1) {
            std::vector<std::uint64_t> size(comps.count, 0);
            for (Vertex v = 0; v < gu.n(); ++v) ++size[comps.comp[v]];
            Vertex keep = 0;
            for (Vertex c = 1; c < comps.count; ++c)
                if (size[c] > size[keep]) keep = c;
            VertexSet drop(n);
            for (Vertex v = 0; v < gu.n(); ++v)
                if (comps.comp[v] != keep) drop.insert(st.gu.to_original[v]);
            st.d_set |= drop;
            st.remove_from_u(drop);
            log_event(EngineEvent::SweepMoved, static_cast<std::uint32_t>(drop.size()));
            if (auto r = end_iteration()) return *r;
            continue;
        }

        // Rule 3: spectral gate on the working graph.
        bool did_sweep = false;
        if (gu.n() >= 2 && gu.m() >= 1) {
            std::vector<double> kernel(gu.n());
            for (Vertex v = 0; v < gu.n(); ++v)
                kernel[v] = std::sqrt(static_cast<double>(gu.degree(v)));
            double norm = std::sqrt(static_cast<double>(2 * gu.m()));
            for (double& x : kernel) x /= norm;

            std::vector<double> warm_local;
            if (!st.warm.empty()) {
                warm_local.resize(gu.n());
                for (Vertex v = 0; v < gu.n(); ++v)
                    warm_local[v] = st.warm[st.gu.to_original[v]];
            }
            auto op = eigen_iter::SymOperator::normalized(gu);
            auto eig = eigen_iter::top_eigenpair(
                op, {kernel}, warm_local.empty() ? nullptr : &warm_local,
                opts.spectral_tol, opts.spectral_budget);
            double lambda_est = 2.0 - eig.theta;
            if (!eig.vec.empty()) {
                st.warm.assign(n, 0.0);
                for (Vertex v = 0; v < gu.n(); ++v)
                    st.warm[st.gu.to_original[v]] = eig.vec[v];
            }

            if (lambda_est <= params.spectral_gate + 1e-6 && !eig.vec.empty()) {
                SweepCut sweep = sweep_cut_from_vector(gu, eig.vec, lambda_est);
                VertexSet side = sweep.set;
                if (side.size() > gu.n() / 2) {
                    VertexSet comp = VertexSet::full(gu.n());
                    comp.subtract(side);
                    side = std::move(comp);
                }
                std::uint64_t cut = edge_cut(gu, side);
                if (!side.empty() &&
                    static_cast<double>(cut) <=
                        params.u_min_deg * static_cast<double>(side.size()) + 1e-9) {
                    VertexSet orig = st.to_original(side);
                    st.d_set |= orig;
                    st.remove_from_u(orig);
                    log_event(EngineEvent::SweepMoved,
                              static_cast<std::uint32_t>(orig.size()));
                    did_sweep = true;
                }
            }
        }
        if (did_sweep) {
            if (auto r = end_iteration()) return *r;
            continue;
        }

        // Rule 4: connected covering set for the branch-set neighborhoods.
        VertexSet t_local(gu.n());
        std::vector<std::uint32_t> hits;
        if (q == 0) {
            t_local.insert(0);  // any seed works when there is nothing to hit
            log_event(EngineEvent::CoveringBuilt, 1);
        } else {
            std::vector<VertexSet> targets;
            targets.reserve(q);
            std::uint64_t min_target = ~std::uint64_t{0};
            for (const VertexSet& t : st.branch) {
                VertexSet tgt(gu.n());
                t.for_each([&](Vertex v) {
                    for (Vertex w : g.neighbors(v))
                        if (st.u_set.contains(w)) tgt.insert(st.local_id[w]);
                });
                min_target = std::min<std::uint64_t>(min_target, tgt.size());
                targets.push_back(std::move(tgt));
            }
            std::uint64_t s_eff = std::max<std::uint64_t>(1, std::min(params.s, min_target));
            double un = static_cast<double>(gu.n());
            double q_eff = std::max(static_cast<double>(q),
                                    std::ceil(2.0 * un / static_cast<double>(s_eff)));
            double log_term = std::log(q_eff * static_cast<double>(s_eff) / un);
            CoveringOptions copts;
            copts.ell_override = static_cast<std::uint64_t>(
                std::ceil(params.cover_coeff * (un / static_cast<double>(s_eff)) * log_term));
            copts.size_cap_override = params.cover_cap;
            copts.prune = true;
            copts.hit_fraction = params.hit_fraction;
            RngStream cov_rng = rng.derive(iter);
            CoveringResult cov = covering_set(gu, targets, s_eff, params.zeta,
                                              params.K, params.retries, cov_rng, copts);
            if (!cov.success)
                return fail(iter, "covering-failed(best=" +
                                      std::to_string(cov.best_size) + ", cap=" +
                                      std::to_string(params.cover_cap) + ")");
            t_local = std::move(cov.t);
            hits = std::move(cov.hit);
            log_event(EngineEvent::CoveringBuilt,
                      static_cast<std::uint32_t>(t_local.size()));
        }

        // Rule 5: grow the covering seed into a full branch set.
        if (params.mode == EngineMode::ConstantDegree) {
            // Pad to size t by BFS; no expansion requirement in this mode.
            std::vector<Vertex> frontier = t_local.to_vector();
            while (t_local.size() < params.t && !frontier.empty()) {
                std::vector<Vertex> next;
                for (Vertex v : frontier) {
                    for (Vertex w : gu.neighbors(v)) {
                        if (t_local.size() >= params.t) break;
                        if (!t_local.contains(w)) {
                            t_local.insert(w);
                            next.push_back(w);
                        }
                    }
                    if (t_local.size() >= params.t) break;
                }
                frontier = std::move(next);
            }
            VertexSet branch_set = st.to_original(t_local);
            st.branch.push_back(branch_set);
            st.remove_from_u(branch_set);
            if (!record_peak()) return fail(iter, "internal: witness verification failed");
            if (auto r = end_iteration()) return *r;
            continue;
        }

        Vertex start = t_local.front();
        GrowthResult growth =
            grow_connected_expander(gu, start, params.t, params.growth_threshold);
        switch (growth.kind) {
            case GrowthResult::Kind::Grown: {
                VertexSet combined = t_local;
                combined |= growth.set;
                VertexSet branch_set = st.to_original(combined);
                std::uint32_t new_index = static_cast<std::uint32_t>(st.branch.size());
                st.branch.push_back(branch_set);
                if (params.mode == EngineMode::Intermediate)
                    for (std::uint32_t h : hits) st.pair_edges.emplace_back(h, new_index);
                st.remove_from_u(branch_set);
                log_event(EngineEvent::ExpanderGrown,
                          static_cast<std::uint32_t>(branch_set.size()));
                if (!record_peak())
                    return fail(iter, "internal: witness verification failed");
                break;
            }
            case GrowthResult::Kind::Obstruction: {
                VertexSet orig = st.to_original(growth.set);
                st.d_set |= orig;
                st.remove_from_u(orig);
                log_event(EngineEvent::SMoved, static_cast<std::uint32_t>(orig.size()));
                break;
            }
            case GrowthResult::Kind::Stuck:
                return fail(iter, "growth-stuck");
        }
        if (auto r = end_iteration()) return *r;
    }
}

// ---------------------------------------------------------------------------
// Exhaustive contraction-clique oracle.
// ---------------------------------------------------------------------------

namespace {

struct CclSearch {
    const Graph& g;
    std::vector<std::uint32_t> row;  // adjacency masks
    std::vector<std::uint32_t> blocks;
    std::vector<std::uint32_t> best_blocks;
    std::uint32_t best = 0;

    explicit CclSearch(const Graph& graph) : g(graph), row(graph.n(), 0) {
        for (Vertex v = 0; v < g.n(); ++v)
            for (Vertex w : g.neighbors(v)) row[v] |= 1u << w;
    }

    bool mask_connected(std::uint32_t mask) const {
        if (mask == 0) return false;
        std::uint32_t start = mask & (~mask + 1);
        std::uint32_t reached = start;
        for (;;) {
            std::uint32_t frontier = 0;
            std::uint32_t m = reached;
            while (m) {
                unsigned v = static_cast<unsigned>(__builtin_ctz(m));
                m &= m - 1;
                frontier |= row[v];
            }
            std::uint32_t next = (reached | frontier) & mask;
            if (next == reached) break;
            reached = next;
        }
        return reached == mask;
    }

    std::uint32_t neighborhood(std::uint32_t mask) const {
        std::uint32_t nb = 0;
        std::uint32_t m = mask;
        while (m) {
            unsigned v = static_cast<unsigned>(__builtin_ctz(m));
            m &= m - 1;
            nb |= row[v];
        }
        return nb & ~mask;
    }

    void rec(std::uint32_t remaining) {
        if (blocks.size() > best) {
            best = static_cast<std::uint32_t>(blocks.size());
            best_blocks = blocks;
        }
        if (remaining == 0) return;
        if (blocks.size() + static_cast<std::uint32_t>(__builtin_popcount(remaining)) <= best)
            return;
        unsigned v = static_cast<unsigned>(__builtin_ctz(remaining));
        std::uint32_t vbit = 1u << v;
        std::uint32_t rest = remaining & ~vbit;
        // Blocks containing v first: finds large collections early.
        std::uint32_t sub = 0;
        for (;;) {
            std::uint32_t s = sub | vbit;
            if (mask_connected(s)) {
                std::uint32_t nb = neighborhood(s);
                bool ok = true;
                for (std::uint32_t b : blocks)
                    if ((nb & b) == 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    blocks.push_back(s);
                    rec(remaining & ~s);
                    blocks.pop_back();
                }
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
        rec(rest);  // v unused
    }
};

}  // namespace

MinorWitness brute_force_ccl_witness(const Graph& g) {
    if (g.n() > 10)
        throw std::invalid_argument("brute_force_ccl: n > 10 is out of reach");
    if (g.n() == 0) throw std::invalid_argument("brute_force_ccl: empty graph");
    CclSearch search(g);
    search.rec((g.n() == 32 ? ~0u : (1u << g.n()) - 1));
    MinorWitness w;
    w.kind = MinorWitness::Kind::Complete;
    for (std::uint32_t mask : search.best_blocks) {
        VertexSet s(g.n());
        std::uint32_t m = mask;
        while (m) {
            unsigned v = static_cast<unsigned>(__builtin_ctz(m));
            m &= m - 1;
            s.insert(static_cast<Vertex>(v));
        }
        w.branch_sets.push_back(std::move(s));
    }
    return w;
}

std::uint32_t brute_force_ccl(const Graph& g) {
    return brute_force_ccl_witness(g).order();
}

}  // namespace kminor
