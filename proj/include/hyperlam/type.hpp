#ifndef HYPERLAM_TYPE_HPP
#define HYPERLAM_TYPE_HPP

#include <compare>
#include <map>
#include <memory>
#include <string>

namespace hyperlam {

class Hypergraph;
struct Template;

using NodeId = int;
using EdgeId = int;

enum class TypeKind {
    Prim,   // primitive type, doubles as a plain ranked label
    Dollar, // reserved $_d label inside a division denominator
    Hole,   // reserved placeholder (context hole, template slots)
    Div,
    Mul,
    Bang,
    Star,
};

namespace detail {
struct TypeNode;
}

/// Immutable, shared handle to a type expression. Every hyperedge label is a
/// Type; plain alphabets use primitive types. Equality and ordering go through
/// a canonical key, so types that embed isomorphic hypergraphs compare equal.
class Type {
public:
    static Type prim(std::string name, int rank);
    static Type dollar(int rank);
    /// index 0 is the context hole; 1 and 2 are the template slots.
    static Type hole(int rank, int index = 0);
    /// N ÷ D. The denominator must carry exactly one Dollar edge.
    static Type div(Type numerator, Hypergraph denominator);
    static Type mul(Hypergraph body);
    static Type bang(Type inner);
    static Type star(Template tmpl, Type inner);

    TypeKind kind() const;
    int rank() const;

    const std::string& name() const;        // Prim
    int hole_index() const;                 // Hole
    const Type& numerator() const;          // Div
    const Hypergraph& denominator() const;  // Div
    EdgeId dollar_edge() const;             // Div
    const Hypergraph& body() const;         // Mul
    const Type& inner() const;              // Bang, Star
    const Template& tmpl() const;           // Star

    /// Canonical serialization; equal keys iff equal types.
    const std::string& key() const;
    /// Number of ×, ÷, ! and * constructors, including those nested in
    /// embedded hypergraphs.
    int connectives() const;
    /// True when a ! or * occurs anywhere inside.
    bool modal() const;
    /// Signed primitive occurrence counts (numerators positive, denominators
    /// negative). Every derivable HL sequent balances these.
    const std::map<std::string, int>& prim_counts() const;

    bool is_logical() const { return kind() != TypeKind::Dollar && kind() != TypeKind::Hole; }

    /// Human-readable rendering, not canonical.
    std::string str() const;

    friend bool operator==(const Type& a, const Type& b);
    friend std::strong_ordering operator<=>(const Type& a, const Type& b);

private:
    explicit Type(std::shared_ptr<const detail::TypeNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::TypeNode> node_;
};

} // namespace hyperlam

#endif // HYPERLAM_TYPE_HPP
