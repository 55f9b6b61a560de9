#include "hyperlam/sequent.hpp"

#include <array>

#include "hyperlam/canonical.hpp"

namespace hyperlam {

void validate(const Sequent& s) {
    if (s.antecedent.rank() != s.succedent.rank())
        throw Error(ErrorCode::RankMismatch, "antecedent and succedent ranks differ");
    if (!s.succedent.is_logical())
        throw Error(ErrorCode::InvalidType, "succedent must be a logical type");
    for (const auto& e : s.antecedent.edges())
        if (!e.label.is_logical())
            throw Error(ErrorCode::InvalidType, "antecedent label " + e.label.str() + " is not a type");
}

std::string sequent_key(const Sequent& s) {
    std::string out = canonical(s.antecedent).bytes;
    out += "=>";
    out += s.succedent.key();
    return out;
}

int connectives(const Sequent& s) { return connectives(s.antecedent) + s.succedent.connectives(); }

bool modal(const Sequent& s) {
    if (s.succedent.modal())
        return true;
    for (const auto& e : s.antecedent.edges())
        if (e.label.modal())
            return true;
    return false;
}

namespace {

constexpr std::array<std::pair<Rule, const char*>, 12> kRuleNames{{
    {Rule::Axiom, "axiom"},
    {Rule::DivLeft, "div-left"},
    {Rule::DivRight, "div-right"},
    {Rule::MulRight, "mul-right"},
    {Rule::MulLeft, "mul-left"},
    {Rule::BangLeft, "bang-left"},
    {Rule::BangRight, "bang-right"},
    {Rule::Weakening, "weakening"},
    {Rule::Contraction, "contraction"},
    {Rule::Cut, "cut"},
    {Rule::StarLeft, "star-left"},
    {Rule::StarRightBounded, "star-right-bounded"},
}};

bool fail(std::string* why, const std::string& msg) {
    if (why)
        *why = msg;
    return false;
}

} // namespace

const char* to_string(Rule r) {
    for (auto [rule, name] : kRuleNames)
        if (rule == r)
            return name;
    return "?";
}

std::optional<Rule> rule_from_string(const std::string& s) {
    for (auto [rule, name] : kRuleNames)
        if (s == name)
            return rule;
    return std::nullopt;
}

namespace {

bool check_node(const Derivation& d, std::string* why) {
    const Hypergraph& g = d.conclusion.antecedent;
    const Type& a = d.conclusion.succedent;
    try {
        validate(d.conclusion);
    } catch (const Error& e) {
        return fail(why, std::string("invalid conclusion: ") + e.what());
    }
    auto count = [&](std::size_t k) { return d.premises.size() == k; };
    auto prem = [&](std::size_t i) -> const Sequent& { return d.premises[i]->conclusion; };
    auto principal = [&](TypeKind kind) -> const Type* {
        if (!d.edge || *d.edge < 0 || *d.edge >= g.edge_count())
            return nullptr;
        const Type& t = g.label(*d.edge);
        return t.kind() == kind ? &t : nullptr;
    };
    auto same_succ = [&](std::size_t i) { return prem(i).succedent == a; };

    switch (d.rule) {
    case Rule::Axiom:
        if (!count(0) || !iso(g, Hypergraph::handle_filled(a)))
            return fail(why, "axiom: antecedent is not the succedent's handle");
        return true;
    case Rule::DivRight:
        if (a.kind() != TypeKind::Div || !count(1) || !(prem(0).succedent == a.numerator()))
            return fail(why, "div-right: shape");
        if (!iso(prem(0).antecedent, replace(a.denominator(), a.dollar_edge(), g)))
            return fail(why, "div-right: premise is not D[$/F]");
        return true;
    case Rule::DivLeft: {
        const Type* t = principal(TypeKind::Div);
        if (!t)
            return fail(why, "div-left: principal edge is not a division");
        const Hypergraph& den = t->denominator();
        if (!count(static_cast<std::size_t>(den.edge_count())) || !same_succ(0))
            return fail(why, "div-left: premise count or succedent");
        const Hypergraph& main = prem(0).antecedent;
        if (!d.premise_edge || *d.premise_edge < 0 || *d.premise_edge >= main.edge_count() ||
            !(main.label(*d.premise_edge) == t->numerator()))
            return fail(why, "div-left: main premise lacks the numerator edge");
        std::vector<std::pair<EdgeId, Hypergraph>> subst;
        std::size_t next = 1;
        for (EdgeId e = 0; e < den.edge_count(); ++e) {
            if (e == t->dollar_edge()) {
                subst.emplace_back(e, Hypergraph::handle_filled(*t));
                continue;
            }
            if (!(prem(next).succedent == den.label(e)))
                return fail(why, "div-left: side premise succedent");
            subst.emplace_back(e, prem(next).antecedent);
            ++next;
        }
        if (!iso(replace(main, *d.premise_edge, replace_many(den, subst)), g))
            return fail(why, "div-left: reconstruction differs from the conclusion");
        return true;
    }
    case Rule::MulLeft: {
        const Type* t = principal(TypeKind::Mul);
        if (!t || !count(1) || !same_succ(0))
            return fail(why, "mul-left: shape");
        if (!iso(prem(0).antecedent, replace(g, *d.edge, t->body())))
            return fail(why, "mul-left: premise is not G[e/M]");
        return true;
    }
    case Rule::MulRight: {
        if (a.kind() != TypeKind::Mul)
            return fail(why, "mul-right: succedent is not a product");
        const Hypergraph& body = a.body();
        if (!count(static_cast<std::size_t>(body.edge_count())))
            return fail(why, "mul-right: premise count");
        std::vector<std::pair<EdgeId, Hypergraph>> subst;
        for (EdgeId e = 0; e < body.edge_count(); ++e) {
            if (!(prem(e).succedent == body.label(e)))
                return fail(why, "mul-right: premise succedent");
            subst.emplace_back(e, prem(e).antecedent);
        }
        if (!iso(replace_many(body, subst), g))
            return fail(why, "mul-right: reconstruction differs from the conclusion");
        return true;
    }
    case Rule::BangLeft: {
        const Type* t = principal(TypeKind::Bang);
        if (!t || !count(1) || !same_succ(0))
            return fail(why, "bang-left: shape");
        if (!iso(prem(0).antecedent, replace(g, *d.edge, Hypergraph::handle_filled(t->inner()))))
            return fail(why, "bang-left: premise is not G[e/A•]");
        return true;
    }
    case Rule::BangRight:
        if (a.kind() != TypeKind::Bang || !count(1) || !(prem(0).succedent == a.inner()))
            return fail(why, "bang-right: shape");
        if (g.node_count() != 0)
            return fail(why, "bang-right: antecedent has nodes");
        for (const auto& e : g.edges())
            if (e.label.kind() != TypeKind::Bang)
                return fail(why, "bang-right: antecedent has an unbanged edge");
        if (!iso(prem(0).antecedent, g))
            return fail(why, "bang-right: antecedent changed");
        return true;
    case Rule::Weakening:
        if (!principal(TypeKind::Bang) || !count(1) || !same_succ(0) ||
            !iso(prem(0).antecedent, g.without_edge(*d.edge)))
            return fail(why, "weakening: premise is not the conclusion minus the edge");
        return true;
    case Rule::Contraction:
        if (!principal(TypeKind::Bang) || !count(1) || !same_succ(0) ||
            !iso(prem(0).antecedent, g.with_edge(Edge{g.label(*d.edge), {}})))
            return fail(why, "contraction: premise does not duplicate the edge");
        return true;
    case Rule::Cut: {
        if (!count(2) || !same_succ(1))
            return fail(why, "cut: shape");
        const Hypergraph& outer = prem(1).antecedent;
        if (!d.premise_edge || *d.premise_edge < 0 || *d.premise_edge >= outer.edge_count() ||
            !(outer.label(*d.premise_edge) == prem(0).succedent))
            return fail(why, "cut: cut edge");
        if (!iso(replace(outer, *d.premise_edge, prem(0).antecedent), g))
            return fail(why, "cut: reconstruction differs from the conclusion");
        return true;
    }
    case Rule::StarLeft: {
        const Type* t = principal(TypeKind::Star);
        if (!t || !count(1) || !same_succ(0) || d.n < 0)
            return fail(why, "star-left: shape");
        if (!iso(prem(0).antecedent, replace(g, *d.edge, t_iterate(t->tmpl(), t->inner(), d.n))))
            return fail(why, "star-left: premise is not G[e/T^n(A)]");
        return true;
    }
    case Rule::StarRightBounded:
        if (a.kind() != TypeKind::Star || d.n < 0 || !count(static_cast<std::size_t>(d.n) + 1))
            return fail(why, "star-right: shape");
        for (int k = 0; k <= d.n; ++k) {
            if (!(prem(k).succedent == Type::mul(t_iterate(a.tmpl(), a.inner(), k))) || !iso(prem(k).antecedent, g))
                return fail(why, "star-right: premise " + std::to_string(k));
        }
        return true;
    }
    return fail(why, "unknown rule");
}

} // namespace

bool check_tree(const Derivation& d, std::string* why) {
    if (!check_node(d, why))
        return false;
    for (const auto& p : d.premises)
        if (!p || !check_tree(*p, why))
            return false;
    return true;
}

int count_rule(const Derivation& d, Rule r) {
    int n = d.rule == r ? 1 : 0;
    for (const auto& p : d.premises)
        n += count_rule(*p, r);
    return n;
}

int tree_size(const Derivation& d) {
    int n = 1;
    for (const auto& p : d.premises)
        n += tree_size(*p);
    return n;
}

int tree_height(const Derivation& d) {
    int h = 0;
    for (const auto& p : d.premises)
        h = std::max(h, tree_height(*p));
    return h + 1;
}

namespace {

// Premises indexed by the non-$ edges of from, reordered to follow to.
// Equal types may list their embedded edges in different orders.
void follow(std::vector<DerivationPtr>& premises, std::size_t offset, const Hypergraph& from, const Hypergraph& to) {
    if (from == to)
        return;
    auto m = isomorphic(from, to);
    if (!m)
        throw Error(ErrorCode::InvalidArgument, "rebase onto a different type");
    auto slot = [&](const Hypergraph& g, EdgeId e) {
        std::size_t k = offset;
        for (EdgeId x = 0; x < e; ++x)
            k += g.label(x).kind() != TypeKind::Dollar;
        return k;
    };
    std::vector<DerivationPtr> out = premises;
    for (EdgeId e = 0; e < from.edge_count(); ++e)
        if (from.label(e).kind() != TypeKind::Dollar)
            out[slot(to, m->edge_map[e])] = premises[slot(from, e)];
    premises = std::move(out);
}

} // namespace

DerivationPtr rebase(const DerivationPtr& d, const Sequent& target) {
    if (!(d->conclusion.succedent == target.succedent))
        throw Error(ErrorCode::InvalidArgument, "rebase onto a different succedent");
    std::optional<Morphism> m;
    if (!(d->conclusion.antecedent == target.antecedent)) {
        m = isomorphic(d->conclusion.antecedent, target.antecedent);
        if (!m)
            throw Error(ErrorCode::InvalidArgument, "rebase onto a non-isomorphic antecedent");
    }
    auto out = std::make_shared<Derivation>(*d);
    out->conclusion = target;
    if (out->edge && m)
        out->edge = m->edge_map[*out->edge];
    if (d->rule == Rule::MulRight)
        follow(out->premises, 0, d->conclusion.succedent.body(), target.succedent.body());
    if (d->rule == Rule::DivLeft) {
        const Type& before = d->conclusion.antecedent.label(*d->edge);
        const Type& after = target.antecedent.label(*out->edge);
        follow(out->premises, 1, before.denominator(), after.denominator());
    }
    return out;
}

} // namespace hyperlam
