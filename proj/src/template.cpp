#include "hyperlam/template.hpp"

#include "hyperlam/canonical.hpp"

namespace hyperlam {

bool is_template(const Hypergraph& body, const Hypergraph& unit) {
    if (body.edge_count() != 2 || unit.rank() != body.rank())
        return false;
    return body.label(0).rank() == body.rank() && body.label(1).rank() == body.rank();
}

Template make_template(const Hypergraph& body, const Hypergraph& unit) {
    if (!is_template(body, unit))
        throw Error(ErrorCode::InvalidType, "not a template: " + to_string(body));
    int k = body.rank();
    Hypergraph slots = relabel(body, [k](EdgeId e) { return Type::hole(k, e + 1); });
    return Template{slots, unit};
}

Hypergraph instantiate(const Template& t, const Hypergraph& a, const Hypergraph& b) {
    return replace_many(t.body, {{0, a}, {1, b}});
}

bool is_monoidal(const Template& t) {
    int k = t.body.rank();
    auto a = Hypergraph::handle_filled(Type::hole(k, 3));
    auto b = Hypergraph::handle_filled(Type::hole(k, 4));
    auto c = Hypergraph::handle_filled(Type::hole(k, 5));
    if (!iso(instantiate(t, a, instantiate(t, b, c)), instantiate(t, instantiate(t, a, b), c)))
        return false;
    return iso(instantiate(t, t.unit, a), a) && iso(instantiate(t, a, t.unit), a);
}

Hypergraph t_iterate(const Template& t, const Type& a, int n) {
    if (a.rank() != t.body.rank())
        throw Error(ErrorCode::RankMismatch, "iterated type rank differs from template rank");
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative iteration count");
    Hypergraph out = t.unit;
    auto handle = Hypergraph::handle_filled(a);
    for (int i = 0; i < n; ++i)
        out = instantiate(t, out, handle);
    return out;
}

Template floating_template() {
    return Template{Hypergraph(0, {Edge{Type::hole(0, 1), {}}, Edge{Type::hole(0, 2), {}}}, {}),
                    Hypergraph::discrete(0)};
}

Template path_template() {
    return Template{Hypergraph(3, {Edge{Type::hole(2, 1), {0, 1}}, Edge{Type::hole(2, 2), {1, 2}}}, {0, 2}),
                    Hypergraph(1, {}, {0, 0})};
}

} // namespace hyperlam
