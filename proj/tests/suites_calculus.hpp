// Proof-search suites over generated derivable sequents.
#ifndef HYPERLAM_TESTS_SUITES_CALCULUS_HPP
#define HYPERLAM_TESTS_SUITES_CALCULUS_HPP

#include "generators.hpp"
#include "suites.hpp"

namespace suites {

using generators::random_prim;
using generators::SequentGen;

inline Type swap_prims(const Type& t) {
    auto graph = [](const Hypergraph& h) { return relabel(h, [&](EdgeId e) { return swap_prims(h.label(e)); }); };
    switch (t.kind()) {
    case TypeKind::Prim: {
        std::string n = t.name();
        if (!n.empty() && (n[0] == 'p' || n[0] == 'q'))
            n[0] = n[0] == 'p' ? 'q' : 'p';
        return Type::prim(n, t.rank());
    }
    case TypeKind::Div: return Type::div(swap_prims(t.numerator()), graph(t.denominator()));
    case TypeKind::Mul: return Type::mul(graph(t.body()));
    case TypeKind::Bang: return Type::bang(swap_prims(t.inner()));
    case TypeKind::Star: return Type::star(t.tmpl(), swap_prims(t.inner()));
    default: return t;
    }
}

inline void note_proof(Report& r, const ProofResult& res, const std::string& what) {
    if (res.verdict == Verdict::Found) {
        std::string why;
        if (!res.tree || !check_tree(*res.tree, &why))
            r.fail("tree rejected for " + what + ": " + why);
    }
}

inline bool found(const ProofResult& p) { return p.verdict == Verdict::Found; }

inline std::string show(const Sequent& s) { return to_string(s.antecedent) + " -> " + s.succedent.str(); }

/// Generated derivable sequents stay derivable after (×→) and (→÷) are
/// inverted; on perturbed sequents both sides agree.
inline Report invertibility(unsigned seed, int n) {
    Rng rng(seed);
    SequentGen gen(rng);
    Prover hl(Calculus::HL);
    Report r;
    auto inversions = [](const Sequent& s) {
        std::vector<Sequent> out;
        for (EdgeId e = 0; e < s.antecedent.edge_count(); ++e)
            if (s.antecedent.label(e).kind() == TypeKind::Mul)
                out.push_back(invert_product(s, e));
        if (s.succedent.kind() == TypeKind::Div)
            out.push_back(invert_rdiv(s));
        return out;
    };
    while (r.cases < n) {
        Sequent s = gen.derivable(2, uniform(rng, 0, 2));
        if (inversions(s).empty()) {
            auto next = coin(rng) ? gen.product_left(s) : gen.division_right(s);
            if (!next)
                continue;
            s = *next;
        }
        ++r.cases;
        auto res = hl.prove(s);
        if (res.verdict == Verdict::Unknown)
            ++r.unknown;
        if (!found(res))
            r.fail("generated sequent not derived: " + show(s));
        note_proof(r, res, show(s));
        for (const auto& inv : inversions(s)) {
            auto ri = hl.prove(inv);
            if (!found(ri))
                r.fail("inverted sequent not derived: " + show(inv));
            note_proof(r, ri, show(inv));
        }
        // Converse, on a copy with one label's primitives swapped.
        Sequent m = s;
        int pick = uniform(rng, -1, s.antecedent.edge_count() - 1);
        if (pick < 0)
            m.succedent = swap_prims(s.succedent);
        else
            m.antecedent = s.antecedent.with_label(pick, swap_prims(s.antecedent.label(pick)));
        auto rm = hl.prove(m);
        note_proof(r, rm, show(m));
        r.tally[found(rm) ? "perturbed_found" : "perturbed_not"]++;
        for (const auto& inv : inversions(m)) {
            auto ri = hl.prove(inv);
            if (ri.verdict != rm.verdict)
                r.fail("verdicts differ across inversion: " + show(m));
            if (ri.verdict == Verdict::Unknown || rm.verdict == Verdict::Unknown)
                ++r.unknown;
        }
    }
    r.tally["metric"] = static_cast<int>(hl.metric_checks());
    return r;
}

/// Cut of two derivable HL sequents is derivable without cut.
inline Report cut_hl(unsigned seed, int n) {
    Rng rng(seed);
    SequentGen gen(rng);
    Prover hl(Calculus::HL);
    Report r;
    while (r.cases < n) {
        Sequent right = gen.derivable(2, uniform(rng, 0, 1));
        if (right.antecedent.edge_count() == 0)
            continue;
        EdgeId e0 = uniform(rng, 0, right.antecedent.edge_count() - 1);
        Sequent left = gen.ending_in(right.antecedent.label(e0), uniform(rng, 0, 2));
        auto lt = hl.prove(left), rt = hl.prove(right);
        ++r.cases;
        if (!found(lt) || !found(rt)) {
            r.fail("premise not derived: " + show(found(lt) ? right : left));
            continue;
        }
        auto c = cut_compose(*lt.tree, *rt.tree, e0, Calculus::HL);
        if (c.verdict == Verdict::Unknown)
            ++r.unknown;
        if (c.verdict != Verdict::Found)
            r.fail(std::string("composed ") + to_string(c.verdict) + ": " + show(c.composed));
        else if (!check_tree(*c.tree))
            r.fail("composed tree rejected: " + show(c.composed));
        r.tally[left.antecedent.edge_count() == 1 && left.antecedent.label(0) == left.succedent ? "axiom_left" : "proper"]++;
    }
    r.tally["metric"] = static_cast<int>(hl.metric_checks());
    return r;
}

inline Hypergraph floating(const std::vector<Type>& labels) {
    std::vector<Edge> edges;
    for (const auto& l : labels)
        edges.push_back(Edge{l, {}});
    return Hypergraph(0, std::move(edges), {});
}

/// Mix (or cut, for one copy) of !Γ -> !C into G + n·(!C)• -> B in HMEL₀.
/// Pairs whose premises exceed the budgets are skipped and counted.
inline Report mix_hmel(unsigned seed, int n) {
    Rng rng(seed);
    Prover hm(Calculus::HMEL0);
    Report r;
    int attempts = 0;
    while (r.cases < n && attempts < 20 * n) {
        ++attempts;
        std::vector<Type> gamma;
        for (int j = uniform(rng, 1, 2); j > 0; --j)
            gamma.push_back(random_prim(rng, 0));
        Type c = Type::mul(floating(gamma));
        Type bc = Type::bang(c);
        std::vector<Type> banged;
        for (const auto& g : gamma)
            banged.push_back(Type::bang(g));
        Sequent left{floating(banged), bc};

        std::vector<Type> body;
        for (int j = uniform(rng, 0, 1); j > 0; --j)
            body.push_back(random_prim(rng, 0));
        int copies = uniform(rng, 1, 2);
        for (int j = 0; j < copies; ++j)
            body.push_back(c);
        Hypergraph y = floating(body);
        if (coin(rng, 0.3)) {
            Type edge = random_prim(rng, 2);
            y = disjoint_union(y, Hypergraph(2, {Edge{edge, {0, 1}}}, {}));
        }
        Type goal = Type::mul(y);
        Hypergraph ante = relabel(y, [&](EdgeId e) { return y.label(e) == c ? bc : y.label(e); });
        if (coin(rng, 0.3))
            ante = ante.with_edge(Edge{bc, {}});
        Sequent right{ante, goal};
        std::vector<EdgeId> bang_edges;
        for (EdgeId e = 0; e < ante.edge_count(); ++e)
            if (ante.label(e) == bc)
                bang_edges.push_back(e);

        auto lt = hm.prove(left), rt = hm.prove(right);
        if (lt.verdict == Verdict::NotDerivable || rt.verdict == Verdict::NotDerivable) {
            r.fail("premise refuted: " + show(lt.verdict == Verdict::NotDerivable ? left : right));
            ++r.cases;
            continue;
        }
        if (!found(lt) || !found(rt)) {
            r.tally["premise_over_budget"]++;
            continue;
        }
        ++r.cases;
        CutResult res = bang_edges.size() == 1 && coin(rng)
                            ? cut_compose(*lt.tree, *rt.tree, bang_edges[0], Calculus::HMEL0)
                            : mix_compose(*lt.tree, *rt.tree, bang_edges);
        r.tally[bang_edges.size() == 1 ? "one_copy" : "several_copies"]++;
        if (res.verdict == Verdict::Unknown)
            ++r.unknown;
        else if (res.verdict == Verdict::NotDerivable)
            r.fail("composed NotDerivable: " + show(res.composed));
        else if (!check_tree(*res.tree))
            r.fail("composed tree rejected: " + show(res.composed));
    }
    return r;
}

/// G + (*_O A)• -> B is found iff G + k·A• -> B is found for some k <= N_max.
inline Report star_bang(unsigned seed, int n) {
    Rng rng(seed);
    Prover hl(Calculus::HL);
    Prover st(Calculus::HLStar);
    const int cap = SearchConfig{}.star_unfold_cap;
    Report r;
    while (r.cases < n) {
        auto pick = [&]() -> Type {
            switch (uniform(rng, 0, 2)) {
            case 0: return random_prim(rng, 0);
            case 1: return Type::mul(floating({random_prim(rng, 0), random_prim(rng, 0)}));
            default: return Type::div(random_prim(rng, 0), floating({random_prim(rng, 0), Type::dollar(0)}));
            }
        };
        Type a = pick();
        std::vector<Type> rest;
        for (int j = uniform(rng, 0, 2); j > 0; --j)
            rest.push_back(random_prim(rng, 0));
        Hypergraph g = floating(rest);
        if (coin(rng, 0.3))
            g = disjoint_union(g, Hypergraph(2, {Edge{random_prim(rng, 2), {0, 1}}}, {}));
        int m = uniform(rng, 0, cap + 1);
        std::vector<Type> extra(m, a);
        Hypergraph y = disjoint_union(g, floating(extra));
        if (coin(rng, 0.25))
            y = y.with_edge(Edge{random_prim(rng, 0), {}});
        if (y.edge_count() == 0)
            continue;
        Type goal = Type::mul(y);
        ++r.cases;
        Sequent starred{g.with_edge(Edge{Type::star(floating_template(), a), {}}), goal};
        auto rs = st.prove(starred);
        note_proof(r, rs, show(starred));
        bool expect = false;
        for (int k = 0; k <= cap && !expect; ++k) {
            auto rk = hl.prove(Sequent{disjoint_union(g, floating(std::vector<Type>(k, a))), goal});
            expect = found(rk);
        }
        if (expect != found(rs))
            r.fail("star " + std::string(to_string(rs.verdict)) + " but unfoldings " + (expect ? "found" : "none") +
                   ": " + show(starred));
        r.tally[expect ? "found" : "not_found"]++;
    }
    r.tally["metric"] = static_cast<int>(hl.metric_checks() + st.metric_checks());
    return r;
}

/// (!→) and weakening at search level: H + A• -> B found implies
/// H + (!A)• -> B and H + A• + (!C)• -> B found.
inline Report bang_laws(unsigned seed, int n) {
    Rng rng(seed);
    SequentGen gen(rng);
    Prover hl(Calculus::HL), hm(Calculus::HMEL0);
    Report r;
    while (r.cases < n) {
        Sequent s = gen.derivable(2, 0);
        std::vector<EdgeId> rank0;
        for (EdgeId e = 0; e < s.antecedent.edge_count(); ++e)
            if (s.antecedent.label(e).rank() == 0)
                rank0.push_back(e);
        if (rank0.empty() || !found(hl.prove(s)))
            continue;
        ++r.cases;
        EdgeId e = rank0[uniform(rng, 0, static_cast<int>(rank0.size()) - 1)];
        Sequent der{s.antecedent.with_label(e, Type::bang(s.antecedent.label(e))), s.succedent};
        Sequent weak{s.antecedent.with_edge(Edge{Type::bang(random_prim(rng, 0)), {}}), s.succedent};
        for (const auto& t : {der, weak}) {
            auto res = hm.prove(t);
            if (res.verdict == Verdict::Unknown)
                ++r.unknown;
            else if (!found(res))
                r.fail("refuted: " + show(t));
            note_proof(r, res, show(t));
        }
    }
    return r;
}

} // namespace suites

#endif
