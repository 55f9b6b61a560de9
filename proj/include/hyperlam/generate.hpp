#ifndef HYPERLAM_GENERATE_HPP
#define HYPERLAM_GENERATE_HPP

#include <vector>

#include "hyperlam/hypergraph.hpp"

namespace hyperlam {

/// Every zero-rank hypergraph over the labels with at most max_nodes nodes
/// and max_edges edges, one per isomorphism class, grouped by node count.
std::vector<Hypergraph> all_graphs(const std::vector<Type>& labels, int max_nodes, int max_edges);

} // namespace hyperlam

#endif // HYPERLAM_GENERATE_HPP
