#include "corank/community.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace corank {

namespace {

// Slack on the similarity threshold so that J == threshold survives
// rounding in threshold(t) and in the union sum.
constexpr double kThresholdSlack = 1e-9;

} // namespace

void CommunityConfig::validate() const {
    if (!(delta_csoan > 0.0 && delta_csoan <= 1.0)) {
        throw std::invalid_argument("delta_csoan must lie in (0, 1]");
    }
    if (!(alpha_decay > 0.0 && alpha_decay <= 1.0)) {
        throw std::invalid_argument("alpha_decay must lie in (0, 1]");
    }
    if (max_iterations && *max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
}

double CommunityConfig::threshold(std::size_t iteration) const {
    return delta_csoan * std::pow(alpha_decay, static_cast<double>(iteration) - 1.0);
}

std::size_t CommunityConfig::iteration_cap(const WeightedGraph& g) const {
    return max_iterations.value_or(std::max<std::size_t>(g.edge_count(), 1));
}

NeighborState compute_foan(const WeightedGraph& g) {
    NeighborState state;
    state.iteration = 1;
    state.per_edge.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        EdgeSet set = g.incident(e.u);
        const EdgeSet& other = g.incident(e.v);
        set.insert(set.end(), other.begin(), other.end());
        state.per_edge.push_back(make_edge_set(std::move(set)));
    }
    return state;
}

EdgeSet compute_soan(const NeighborState& state, EdgeRef e) {
    EdgeSet out;
    for (EdgeRef f : state.at(e)) {
        const EdgeSet& nf = state.at(f);
        out.insert(out.end(), nf.begin(), nf.end());
    }
    return make_edge_set(std::move(out));
}

EdgeWeightVector edge_vector(const WeightedGraph& g, const EdgeSet& neighbors) {
    if (neighbors.empty()) {
        throw std::invalid_argument("edge_vector: empty neighbor set");
    }
    EdgeWeightVector v;
    v.components.reserve(neighbors.size());
    for (EdgeRef f : neighbors) {
        v.components.emplace_back(f, g.weight(f));
    }
    return v;
}

double weighted_jaccard(const EdgeWeightVector& x, const EdgeWeightVector& y) {
    double num = 0.0;
    double den = 0.0;
    auto ix = x.components.begin();
    auto iy = y.components.begin();
    while (ix != x.components.end() || iy != y.components.end()) {
        if (iy == y.components.end() || (ix != x.components.end() && ix->first < iy->first)) {
            den += std::max(ix->second, 0.0);
            num += std::min(ix->second, 0.0);
            ++ix;
        } else if (ix == x.components.end() || iy->first < ix->first) {
            den += std::max(iy->second, 0.0);
            num += std::min(iy->second, 0.0);
            ++iy;
        } else {
            num += std::min(ix->second, iy->second);
            den += std::max(ix->second, iy->second);
            ++ix;
            ++iy;
        }
    }
    if (den <= 0.0) {
        return 0.0;
    }
    return std::clamp(num / den, 0.0, 1.0);
}

NeighborState csoan_step(const WeightedGraph& g, const NeighborState& state, const CommunityConfig& config) {
    const std::size_t m = state.edge_count();
    if (m != g.edge_count()) {
        throw std::invalid_argument("csoan_step: state does not match graph");
    }
    const double delta = config.threshold(state.iteration) - kThresholdSlack;

    // Vector components are edge weights, so min/max over a shared component
    // both equal its weight: J(e, f) = w(N(e) ∩ N(f)) / w(N(e) ∪ N(f)).
    std::vector<double> mass(m, 0.0);
    std::vector<std::vector<std::uint32_t>> holders(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (EdgeRef f : state.per_edge[i]) {
            mass[i] += g.weight(f);
            holders[f.index - 1].push_back(static_cast<std::uint32_t>(i));
        }
    }

    NeighborState next;
    next.iteration = state.iteration + 1;
    next.per_edge.resize(m);

    std::vector<double> shared(m, 0.0);
    std::vector<char> in_soan(m, 0);
    std::vector<std::uint32_t> touched;
    std::vector<std::uint32_t> soan;
    for (std::size_t i = 0; i < m; ++i) {
        soan.clear();
        for (EdgeRef f : state.per_edge[i]) {
            for (EdgeRef h : state.per_edge[f.index - 1]) {
                if (!in_soan[h.index - 1]) {
                    in_soan[h.index - 1] = 1;
                    soan.push_back(h.index - 1);
                }
            }
        }
        std::sort(soan.begin(), soan.end());

        touched.clear();
        for (EdgeRef f : state.per_edge[i]) {
            const double w = g.weight(f);
            for (std::uint32_t holder : holders[f.index - 1]) {
                if (shared[holder] == 0.0) {
                    touched.push_back(holder);
                }
                shared[holder] += w;
            }
        }

        EdgeSet& out = next.per_edge[i];
        for (std::uint32_t h : soan) {
            in_soan[h] = 0;
            const double inter = shared[h];
            const double uni = mass[i] + mass[h] - inter;
            const double j = uni > 0.0 ? inter / uni : 0.0;
            if (h == i || j >= delta) {
                out.push_back(EdgeRef{h + 1});
            }
        }
        for (std::uint32_t h : touched) {
            shared[h] = 0.0;
        }
    }
    return next;
}

StabilityResult iterate_to_stability(const WeightedGraph& g, const CommunityConfig& config,
                                     std::vector<NeighborState>* history) {
    config.validate();
    const std::size_t cap = config.iteration_cap(g);
    StabilityResult result;
    result.state = compute_foan(g);
    if (history != nullptr) {
        history->push_back(result.state);
    }
    while (true) {
        NeighborState next = csoan_step(g, result.state, config);
        ++result.iterations;
        const bool stable = next.same_sets(result.state);
        if (history != nullptr) {
            history->push_back(next);
        }
        result.state = std::move(next);
        if (stable) {
            return result;
        }
        if (result.iterations >= cap) {
            result.capped = true;
            return result;
        }
    }
}

NodeSet link_node_set(const WeightedGraph& g, const EdgeSet& csoan) {
    NodeSet nodes;
    nodes.reserve(csoan.size() * 2);
    for (EdgeRef e : csoan) {
        const Edge& ed = g.edge(e);
        nodes.push_back(ed.u);
        nodes.push_back(ed.v);
    }
    return make_node_set(std::move(nodes));
}

namespace {

// Working set for merge_lns. Every distinct node set gets a stable id so
// conductance values and rejected pairs can be cached across passes.
class MergeState {
public:
    MergeState(const WeightedGraph& g, ConductanceMode mode) : g_(g), mode_(mode) {}

    std::size_t intern(const NodeSet& s) {
        const auto [it, inserted] = ids_.try_emplace(s, sets_.size());
        if (inserted) {
            sets_.push_back(s);
            phi_.push_back(try_conductance(g_, s, mode_));
        }
        return it->second;
    }

    const NodeSet& set(std::size_t id) const { return sets_[id]; }
    const std::optional<double>& phi(std::size_t id) const { return phi_[id]; }

    void sort(std::vector<std::size_t>& ids) const {
        std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
            if (*phi_[a] != *phi_[b]) {
                return *phi_[a] < *phi_[b];
            }
            return sets_[a] < sets_[b];
        });
    }

    // Id of the union when merging a and b lowers conductance.
    std::optional<std::size_t> try_merge(std::size_t a, std::size_t b) {
        const auto key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
        if (rejected_.count(key) > 0) {
            return std::nullopt;
        }
        NodeSet u;
        std::set_union(sets_[a].begin(), sets_[a].end(), sets_[b].begin(), sets_[b].end(),
                       std::back_inserter(u));
        const std::size_t id = intern(u);
        const auto& phi_u = phi_[id];
        if (phi_u && *phi_u < std::min(*phi_[a], *phi_[b])) {
            return id;
        }
        rejected_.insert(key);
        return std::nullopt;
    }

private:
    const WeightedGraph& g_;
    ConductanceMode mode_;
    std::map<NodeSet, std::size_t> ids_;
    std::vector<NodeSet> sets_;
    std::vector<std::optional<double>> phi_;
    std::unordered_set<std::uint64_t> rejected_;
};

} // namespace

MergeResult merge_lns(const WeightedGraph& g, const std::vector<NodeSet>& sets, ConductanceMode mode) {
    MergeState st(g, mode);
    MergeResult result;
    std::vector<std::size_t> work;
    for (const NodeSet& raw : sets) {
        const NodeSet s = make_node_set(raw);
        const std::size_t id = st.intern(s);
        if (!st.phi(id)) {
            if (std::find(result.excluded.begin(), result.excluded.end(), s) == result.excluded.end()) {
                result.excluded.push_back(s);
            }
        } else if (std::find(work.begin(), work.end(), id) == work.end()) {
            work.push_back(id);
        }
    }

    bool merged = true;
    while (merged) {
        merged = false;
        st.sort(work);
        for (std::size_t i = 0; i < work.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !merged; ++j) {
                const auto u = st.try_merge(work[i], work[j]);
                if (!u) {
                    continue;
                }
                const std::size_t a = work[i];
                const std::size_t b = work[j];
                std::erase_if(work, [&](std::size_t id) { return id == a || id == b; });
                if (std::find(work.begin(), work.end(), *u) == work.end()) {
                    work.push_back(*u);
                }
                merged = true;
            }
        }
    }
    st.sort(work);

    result.communities.reserve(work.size());
    for (std::size_t id : work) {
        result.communities.push_back({st.set(id), st.phi(id)});
    }
    return result;
}

Detection detect_communities(const WeightedGraph& g, const CommunityConfig& config) {
    config.validate();
    Detection d;
    if (g.edge_count() > 0) {
        const StabilityResult stable = iterate_to_stability(g, config);
        d.iterations = stable.iterations;
        d.capped = stable.capped;
        d.link_node_sets.reserve(g.edge_count());
        for (const EdgeSet& c : stable.state.per_edge) {
            d.link_node_sets.push_back(link_node_set(g, c));
        }
        MergeResult merged = merge_lns(g, d.link_node_sets, config.conductance_mode);
        d.communities = std::move(merged.communities);
        d.excluded = std::move(merged.excluded);
        std::vector<NodeSet> held = d.excluded;
        std::sort(held.begin(), held.end());
        for (NodeSet& s : held) {
            d.communities.push_back({std::move(s), std::nullopt});
        }
    }
    for (NodeId v : g.nodes()) {
        if (g.degree(v) == 0) {
            d.communities.push_back({NodeSet{v}, std::nullopt});
        }
    }
    return d;
}

} // namespace corank
