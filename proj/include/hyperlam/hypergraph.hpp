#ifndef HYPERLAM_HYPERGRAPH_HPP
#define HYPERLAM_HYPERGRAPH_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlam/error.hpp"
#include "hyperlam/type.hpp"

namespace hyperlam {

struct Edge {
    Type label;
    std::vector<NodeId> att;
};

/**
 * A hypergraph ⟨V, E, att, lab, ext⟩. Nodes are 0..node_count()-1 and edges are
 * 0..edge_count()-1; ids are local to one value and every cross-graph
 * operation renumbers. Attachment and external sequences may repeat nodes.
 *
 * Values are immutable once constructed.
 */
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int node_count, std::vector<Edge> edges, std::vector<NodeId> ext = {});

    /// a• : rank(a) nodes, all external, one edge attached to them in order.
    static Hypergraph handle_filled(const Type& a);
    /// a° : as a• but with no external nodes.
    static Hypergraph handle_open(const Type& a);
    /// D_k : k isolated nodes, no edges, no external nodes.
    static Hypergraph discrete(int k);

    int node_count() const { return nodes_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const;
    const Type& label(EdgeId e) const { return edge(e).label; }
    const std::vector<NodeId>& ext() const { return ext_; }
    int rank() const { return static_cast<int>(ext_.size()); }
    bool zero_rank() const { return ext_.empty(); }

    Hypergraph with_ext(std::vector<NodeId> ext) const;
    Hypergraph with_label(EdgeId e, Type label) const;
    Hypergraph without_edge(EdgeId e) const;
    Hypergraph with_edge(Edge edge) const;

    /// Nodes attached to no edge and absent from ext.
    std::vector<bool> isolated_mask() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b);

private:
    int nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<NodeId> ext_;
};

/// f(H): same structure, labels from f. Throws RankMismatch.
Hypergraph relabel(const Hypergraph& h, const std::function<Type(EdgeId)>& f);

/// G[e0/H]. Edges of G other than e0 keep their relative order and come
/// first; H's edges are appended.
Hypergraph replace(const Hypergraph& g, EdgeId e0, const Hypergraph& h);

/// G[e1/H1, ..., ek/Hk], performed simultaneously.
Hypergraph replace_many(const Hypergraph& g, const std::vector<std::pair<EdgeId, Hypergraph>>& subst);

/// H1 + H2; at least one argument must be zero rank (BothRanked otherwise).
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// k·H for zero-rank H.
Hypergraph repeat_union(int k, const Hypergraph& h);

/// G1 +_{φ1,φ2} G2 over D_k, with phi1[i], phi2[i] the images of interface
/// node i. Computed directly as a quotient of the disjoint union.
Hypergraph gluing(const Hypergraph& g1, const std::vector<NodeId>& phi1,
                  const Hypergraph& g2, const std::vector<NodeId>& phi2);

/// Sum of connective counts over all edge labels.
int connectives(const Hypergraph& h);

std::string to_string(const Hypergraph& h);

} // namespace hyperlam

#endif // HYPERLAM_HYPERGRAPH_HPP
