#include "hyperlam/type.hpp"

#include <optional>
#include <sstream>

#include "hyperlam/canonical.hpp"
#include "hyperlam/hypergraph.hpp"
#include "hyperlam/template.hpp"

namespace hyperlam {

namespace detail {

struct TypeNode {
    TypeKind kind = TypeKind::Prim;
    int rank = 0;
    std::string name;
    int index = 0;
    std::optional<Type> sub;
    std::optional<Hypergraph> graph;
    EdgeId dollar = -1;
    std::optional<Template> tmpl;

    std::string key;
    int connectives = 0;
    bool modal = false;
    std::map<std::string, int> counts;
};

} // namespace detail

namespace {

std::string lp(const std::string& s) { return std::to_string(s.size()) + ":" + s; }

void add_counts(std::map<std::string, int>& into, const std::map<std::string, int>& from, int sign) {
    for (const auto& [k, v] : from) {
        into[k] += sign * v;
        if (into[k] == 0)
            into.erase(k);
    }
}

void require_logical_labels(const Hypergraph& g, const char* where) {
    for (const auto& e : g.edges())
        if (!e.label.is_logical())
            throw Error(ErrorCode::InvalidType, std::string("reserved label inside ") + where);
}

} // namespace

Type Type::prim(std::string name, int rank) {
    if (name.empty())
        throw Error(ErrorCode::InvalidType, "empty primitive name");
    if (name[0] == '$' || name[0] == '#')
        throw Error(ErrorCode::InvalidType, "reserved prefix in primitive name '" + name + "'");
    if (rank < 0)
        throw Error(ErrorCode::InvalidType, "negative rank");
    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Prim;
    n->rank = rank;
    n->name = std::move(name);
    n->key = "p" + n->name + "/" + std::to_string(rank);
    n->counts[n->key] = 1;
    return Type(std::move(n));
}

Type Type::dollar(int rank) {
    if (rank < 0)
        throw Error(ErrorCode::InvalidType, "negative rank");
    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Dollar;
    n->rank = rank;
    n->key = "$" + std::to_string(rank);
    return Type(std::move(n));
}

Type Type::hole(int rank, int index) {
    if (rank < 0 || index < 0)
        throw Error(ErrorCode::InvalidType, "negative rank or index");
    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Hole;
    n->rank = rank;
    n->index = index;
    n->key = "#" + std::to_string(index) + "/" + std::to_string(rank);
    return Type(std::move(n));
}

Type Type::div(Type numerator, Hypergraph denominator) {
    if (!numerator.is_logical())
        throw Error(ErrorCode::InvalidType, "numerator must be a type");
    EdgeId dollar = -1;
    for (EdgeId e = 0; e < denominator.edge_count(); ++e) {
        const Type& l = denominator.label(e);
        if (l.kind() == TypeKind::Dollar) {
            if (dollar >= 0)
                throw Error(ErrorCode::InvalidType, "denominator has more than one $ edge");
            dollar = e;
        } else if (!l.is_logical()) {
            throw Error(ErrorCode::InvalidType, "reserved label inside denominator");
        }
    }
    if (dollar < 0)
        throw Error(ErrorCode::InvalidType, "denominator has no $ edge");
    if (numerator.rank() != denominator.rank())
        throw Error(ErrorCode::RankMismatch, "rk(numerator) != rk(denominator)");

    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Div;
    n->rank = denominator.label(dollar).rank();
    n->dollar = dollar;
    n->connectives = 1 + numerator.connectives();
    n->modal = numerator.modal();
    n->counts = numerator.prim_counts();
    for (EdgeId e = 0; e < denominator.edge_count(); ++e) {
        if (e == dollar)
            continue;
        const Type& l = denominator.label(e);
        n->connectives += l.connectives();
        n->modal = n->modal || l.modal();
        add_counts(n->counts, l.prim_counts(), -1);
    }
    n->key = "D(" + lp(numerator.key()) + lp(canonical(denominator).bytes) + ")";
    n->sub = std::move(numerator);
    n->graph = std::move(denominator);
    return Type(std::move(n));
}

Type Type::mul(Hypergraph body) {
    require_logical_labels(body, "product");
    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Mul;
    n->rank = body.rank();
    n->connectives = 1;
    for (const auto& e : body.edges()) {
        n->connectives += e.label.connectives();
        n->modal = n->modal || e.label.modal();
        add_counts(n->counts, e.label.prim_counts(), 1);
    }
    n->key = "M(" + lp(canonical(body).bytes) + ")";
    n->graph = std::move(body);
    return Type(std::move(n));
}

Type Type::bang(Type inner) {
    if (!inner.is_logical())
        throw Error(ErrorCode::InvalidType, "! needs a type");
    if (inner.rank() != 0)
        throw Error(ErrorCode::InvalidType, "! is only defined on rank-0 types");
    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Bang;
    n->rank = 0;
    n->connectives = 1 + inner.connectives();
    n->modal = true;
    n->counts = inner.prim_counts();
    n->key = "!(" + lp(inner.key()) + ")";
    n->sub = std::move(inner);
    return Type(std::move(n));
}

Type Type::star(Template tmpl, Type inner) {
    if (!inner.is_logical())
        throw Error(ErrorCode::InvalidType, "* needs a type");
    if (!is_template(tmpl.body, tmpl.unit))
        throw Error(ErrorCode::InvalidType, "star over a non-template");
    if (inner.rank() != tmpl.body.rank())
        throw Error(ErrorCode::RankMismatch, "rk(inner) != rk(template)");
    auto n = std::make_shared<detail::TypeNode>();
    n->kind = TypeKind::Star;
    n->rank = inner.rank();
    n->connectives = 1 + inner.connectives();
    n->modal = true;
    n->counts = inner.prim_counts();
    n->key = "*(" + lp(canonical(tmpl.body).bytes) + lp(canonical(tmpl.unit).bytes) + lp(inner.key()) + ")";
    n->sub = std::move(inner);
    n->tmpl = std::move(tmpl);
    return Type(std::move(n));
}

TypeKind Type::kind() const { return node_->kind; }
int Type::rank() const { return node_->rank; }

const std::string& Type::name() const {
    if (node_->kind != TypeKind::Prim)
        throw Error(ErrorCode::InvalidType, "name() on non-primitive " + str());
    return node_->name;
}

int Type::hole_index() const { return node_->index; }

const Type& Type::numerator() const {
    if (node_->kind != TypeKind::Div)
        throw Error(ErrorCode::InvalidType, "numerator() on " + str());
    return *node_->sub;
}

const Hypergraph& Type::denominator() const {
    if (node_->kind != TypeKind::Div)
        throw Error(ErrorCode::InvalidType, "denominator() on " + str());
    return *node_->graph;
}

EdgeId Type::dollar_edge() const { return node_->dollar; }

const Hypergraph& Type::body() const {
    if (node_->kind != TypeKind::Mul)
        throw Error(ErrorCode::InvalidType, "body() on " + str());
    return *node_->graph;
}

const Type& Type::inner() const {
    if (node_->kind != TypeKind::Bang && node_->kind != TypeKind::Star)
        throw Error(ErrorCode::InvalidType, "inner() on " + str());
    return *node_->sub;
}

const Template& Type::tmpl() const {
    if (node_->kind != TypeKind::Star)
        throw Error(ErrorCode::InvalidType, "tmpl() on " + str());
    return *node_->tmpl;
}

const std::string& Type::key() const { return node_->key; }
int Type::connectives() const { return node_->connectives; }
bool Type::modal() const { return node_->modal; }
const std::map<std::string, int>& Type::prim_counts() const { return node_->counts; }

std::string Type::str() const {
    switch (node_->kind) {
    case TypeKind::Prim:
        return node_->name;
    case TypeKind::Dollar:
        return "$" + std::to_string(node_->rank);
    case TypeKind::Hole:
        return "#" + std::to_string(node_->index);
    case TypeKind::Div:
        return "(" + node_->sub->str() + " / " + to_string(*node_->graph) + ")";
    case TypeKind::Mul:
        return "x" + to_string(*node_->graph);
    case TypeKind::Bang:
        return "!" + node_->sub->str();
    case TypeKind::Star:
        return "*" + node_->sub->str();
    }
    return "?";
}

bool operator==(const Type& a, const Type& b) {
    return a.node_ == b.node_ || a.node_->key == b.node_->key;
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    return a.node_->key <=> b.node_->key;
}

} // namespace hyperlam
