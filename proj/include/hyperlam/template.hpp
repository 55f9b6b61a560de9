#ifndef HYPERLAM_TEMPLATE_HPP
#define HYPERLAM_TEMPLATE_HPP

#include "hyperlam/hypergraph.hpp"

namespace hyperlam {

/// A rank-k hypergraph with exactly two rank-k slot edges (0 and 1), plus
/// the unit used for the zeroth iteration. Slots are stored relabeled as
/// Type::hole(k, 1) and Type::hole(k, 2).
struct Template {
    Hypergraph body;
    Hypergraph unit;

    friend bool operator==(const Template&, const Template&) = default;
};

/// Exactly two edges, both of rank rk(body); unit of the same rank.
bool is_template(const Hypergraph& body, const Hypergraph& unit);

/// Validates and normalizes slot labels. Throws InvalidType.
Template make_template(const Hypergraph& body, const Hypergraph& unit);

/// T(A, B) = T[slot1/A, slot2/B].
Hypergraph instantiate(const Template& t, const Hypergraph& a, const Hypergraph& b);

/// Associativity and unit laws, checked on three fresh distinct handles.
bool is_monoidal(const Template& t);

/// T^0(A) = U_T, T^{n+1}(A) = T(T^n(A), A•).
Hypergraph t_iterate(const Template& t, const Type& a, int n);

/// Two floating rank-0 slots; O(H, G) = H + G.
Template floating_template();
/// Rank-2 path (1) -> . -> (2) through the two slots.
Template path_template();

} // namespace hyperlam

#endif // HYPERLAM_TEMPLATE_HPP
