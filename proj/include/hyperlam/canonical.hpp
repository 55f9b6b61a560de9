#ifndef HYPERLAM_CANONICAL_HPP
#define HYPERLAM_CANONICAL_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hyperlam/hypergraph.hpp"

namespace hyperlam {

/// Serialization determined by the isomorphism class alone.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// A label-, attachment- and ext-preserving map between two hypergraphs.
struct Morphism {
    std::vector<NodeId> node_map;
    std::vector<EdgeId> edge_map;
};

/// Colour refinement on the incidence structure, then backtracking over
/// the remaining ties; the lexicographically least serialization wins.
CanonicalForm canonical(const Hypergraph& g);

/// A witnessing isomorphism g -> h, if one exists.
std::optional<Morphism> isomorphic(const Hypergraph& g, const Hypergraph& h);

/// Checks that m is a morphism g -> h (labels, att, ext).
bool is_morphism(const Morphism& m, const Hypergraph& g, const Hypergraph& h);

/// Checks that m is a bijective morphism.
bool is_isomorphism(const Morphism& m, const Hypergraph& g, const Hypergraph& h);

inline bool iso(const Hypergraph& g, const Hypergraph& h) { return canonical(g) == canonical(h); }

} // namespace hyperlam

#endif // HYPERLAM_CANONICAL_HPP
