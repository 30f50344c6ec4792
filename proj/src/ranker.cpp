#include "corank/ranker.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corank {

void RankConfig::validate() const {
    if (k.has_value() == word_budget.has_value()) {
        throw std::invalid_argument("exactly one of k and word_budget must be set");
    }
    if (k.value_or(1) < 1 || word_budget.value_or(1) < 1) {
        throw std::invalid_argument("k and word_budget must be at least 1");
    }
}

namespace {

struct Candidate {
    std::size_t community = 0;
    std::size_t size = 0;
    double total_degree = 0.0;
    NodeId best = 0;
    double best_degree = 0.0;
};

Candidate evaluate(const WeightedGraph& g, const NodeSet& members, std::size_t index) {
    Candidate c;
    c.community = index;
    c.size = members.size();
    bool first = true;
    for (NodeId v : members) {
        const double d = weighted_degree_in_subgraph(g, v, members);
        c.total_degree += d;
        // members is sorted, so strict > keeps the lower id on ties
        if (first || d > c.best_degree) {
            c.best = v;
            c.best_degree = d;
            first = false;
        }
    }
    return c;
}

bool better(const Candidate& a, const Candidate& b) {
    if (a.size != b.size) {
        return a.size > b.size;
    }
    if (a.total_degree != b.total_degree) {
        return a.total_degree > b.total_degree;
    }
    return a.community < b.community;
}

} // namespace

RankedSelection select_influential(const WeightedGraph& g, const std::vector<Community>& communities,
                                   const RankConfig& config) {
    config.validate();
    std::vector<NodeSet> remaining;
    remaining.reserve(communities.size());
    std::set<NodeId> available;
    for (const Community& c : communities) {
        remaining.push_back(make_node_set(c.members));
        available.insert(c.members.begin(), c.members.end());
    }
    const std::size_t target = config.k.value_or(available.size());

    RankedSelection sel;
    while (sel.ordered_nodes.size() < target) {
        std::optional<Candidate> best;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (remaining[i].empty()) {
                continue;
            }
            Candidate c = evaluate(g, remaining[i], i);
            if (!best || better(c, *best)) {
                best = c;
            }
        }
        if (!best) {
            break;
        }
        sel.ordered_nodes.push_back(best->best);
        sel.provenance.push_back({best->best, best->community, best->best_degree});
        for (NodeSet& s : remaining) {
            std::erase(s, best->best);
        }
    }
    sel.short_of_target = config.k.has_value() && sel.ordered_nodes.size() < *config.k;
    return sel;
}

std::size_t word_count(const std::string& sentence) {
    std::istringstream in(sentence);
    std::size_t n = 0;
    std::string w;
    while (in >> w) {
        ++n;
    }
    return n;
}

Summary assemble_summary(const std::vector<SentenceRecord>& records, const RankedSelection& selection,
                         const RankConfig& config) {
    Summary out;
    std::size_t used = 0;
    for (NodeId v : selection.ordered_nodes) {
        if (v >= records.size()) {
            throw std::out_of_range("selected node " + std::to_string(v) + " is not a sentence index");
        }
        if (config.word_budget) {
            const std::size_t words = word_count(records[v].raw);
            if (used + words > *config.word_budget) {
                out.budget_exhausted = true;
                break;
            }
            used += words;
        }
        out.indices.push_back(v);
    }
    std::sort(out.indices.begin(), out.indices.end());
    for (std::size_t i = 0; i < out.indices.size(); ++i) {
        if (i > 0) {
            out.text.push_back('\n');
        }
        out.text += records[out.indices[i]].raw;
    }
    return out;
}

} // namespace corank
