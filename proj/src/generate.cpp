#include "hyperlam/generate.hpp"

#include <set>

#include "hyperlam/canonical.hpp"

namespace hyperlam {

namespace {

void tuples(int n, int rank, std::vector<NodeId>& cur, std::vector<std::vector<NodeId>>& out) {
    if (static_cast<int>(cur.size()) == rank) {
        out.push_back(cur);
        return;
    }
    for (NodeId v = 0; v < n; ++v) {
        cur.push_back(v);
        tuples(n, rank, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Hypergraph> all_graphs(const std::vector<Type>& labels, int max_nodes, int max_edges) {
    std::vector<Hypergraph> out;
    for (int n = 0; n <= max_nodes; ++n) {
        std::vector<Edge> candidates;
        for (const auto& l : labels) {
            std::vector<std::vector<NodeId>> atts;
            std::vector<NodeId> cur;
            tuples(n, l.rank(), cur, atts);
            for (auto& att : atts)
                candidates.push_back(Edge{l, std::move(att)});
        }
        std::set<CanonicalForm> seen;
        // Multisets of candidate edges, grown in non-decreasing index order.
        std::vector<std::size_t> pick;
        auto emit = [&]() {
            std::vector<Edge> edges;
            for (std::size_t i : pick)
                edges.push_back(candidates[i]);
            Hypergraph g(n, std::move(edges), {});
            if (seen.insert(canonical(g)).second)
                out.push_back(std::move(g));
        };
        auto grow = [&](auto&& self, std::size_t from) -> void {
            emit();
            if (static_cast<int>(pick.size()) == max_edges)
                return;
            for (std::size_t i = from; i < candidates.size(); ++i) {
                pick.push_back(i);
                self(self, i);
                pick.pop_back();
            }
        };
        grow(grow, 0);
    }
    return out;
}

} // namespace hyperlam
