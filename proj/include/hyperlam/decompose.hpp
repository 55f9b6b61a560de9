#ifndef HYPERLAM_DECOMPOSE_HPP
#define HYPERLAM_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hyperlam/canonical.hpp"
#include "hyperlam/hypergraph.hpp"

namespace hyperlam {

enum class PatternRole { Literal, Hole };

/**
 * Reads a host graph G as an instance of a pattern P:
 *
 *   whole mode:    G = P[h1/H1, ..., hm/Hm]
 *   context mode:  G = K[e0 / P[h1/H1, ..., hm/Hm]]
 *
 * Literal pattern edges map injectively onto host edges with the same label;
 * hole edges are replaced by arbitrary subgraphs. The anchor pins one literal
 * pattern edge to a given host edge and skips its label comparison.
 */
struct DecomposeQuery {
    const Hypergraph* host = nullptr;
    const Hypergraph* pattern = nullptr;
    std::vector<PatternRole> roles;
    bool outer_context = false;
    std::optional<std::pair<EdgeId, EdgeId>> anchor;
};

struct Decomposition {
    std::vector<NodeId> node_map;              // pattern node -> host node
    std::vector<EdgeId> literal_image;         // pattern edge -> host edge, -1 for holes
    std::vector<std::vector<EdgeId>> hole_edges; // per pattern edge
    std::vector<std::vector<NodeId>> hole_nodes; // internal host nodes per hole
    std::vector<EdgeId> context_edges;
    std::vector<NodeId> context_nodes;         // non-image host nodes of the context

    // Several pattern nodes may share one host node. Each piece (a hole, or
    // the context) then decides which of its positions stay fused: a position
    // is mapped to the first position of its block.
    std::vector<std::vector<int>> hole_blocks; // per pattern edge, per att position
    std::vector<int> context_blocks;           // per ext(P) position
    // Per host edge and tentacle: the block (position in the owning piece) it
    // attaches to, or -1 when the node is internal to the piece.
    std::vector<std::vector<int>> tentacle_blocks;
    std::vector<int> ext_blocks;               // context mode, per ext(G) entry
};

std::vector<Decomposition> decompose(const DecomposeQuery& q);

/// H_h, with ext = images of att(h).
Hypergraph hole_graph(const Hypergraph& host, const Hypergraph& pattern, const Decomposition& d, EdgeId h);

/// K with the hole edge appended last; att(e0) = images of ext(P), ext = ext(G).
Hypergraph context_graph(const Hypergraph& host, const Hypergraph& pattern, const Decomposition& d,
                         const Type& hole_label);

struct Context {
    Hypergraph graph; // contains the hole edge
    EdgeId hole = -1;
    Morphism embedding; // F -> G
};

/// All ways to present G as C[e0/F], up to the choice of embedding.
std::vector<Context> enumerate_contexts(const Hypergraph& g, const Hypergraph& f);

} // namespace hyperlam

#endif // HYPERLAM_DECOMPOSE_HPP
