// Random sequents that are derivable by construction: forward rule
// applications from axioms.
#ifndef HYPERLAM_TESTS_GENERATORS_HPP
#define HYPERLAM_TESTS_GENERATORS_HPP

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "hyperlam/prover.hpp"

namespace generators {

using namespace hyperlam;
using oracles::coin;
using oracles::Rng;
using oracles::uniform;

inline Type random_prim(Rng& rng, int rank) {
    static const char* names[] = {"p", "q"};
    return Type::prim(std::string(names[uniform(rng, 0, 1)]) + std::to_string(rank), rank);
}

// Node sets of an antecedent split by an edge subset.
struct Cut {
    std::vector<bool> inside; // per edge
    std::vector<bool> in_part, in_rest;
};

inline Cut cut_edges(const Hypergraph& g, const std::vector<bool>& inside) {
    Cut c{inside, std::vector<bool>(g.node_count(), false), std::vector<bool>(g.node_count(), false)};
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (NodeId v : g.edge(e).att)
            (inside[e] ? c.in_part : c.in_rest)[v] = true;
    for (NodeId v : g.ext())
        c.in_rest[v] = true;
    return c;
}

// The sub-hypergraph on the chosen edges, with the shared nodes as its
// interface in a random order, and the remainder with one edge of the given
// label in its place.
inline std::pair<Hypergraph, Hypergraph> carve(Rng& rng, const Hypergraph& g, const std::vector<bool>& inside,
                                               const std::function<Type(const Hypergraph&)>& label_for) {
    Cut c = cut_edges(g, inside);
    std::vector<NodeId> local(g.node_count(), -1), outer(g.node_count(), -1);
    std::vector<NodeId> shared;
    int nl = 0, no = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        bool part = c.in_part[v];
        bool rest = c.in_rest[v] || !part;
        if (part)
            local[v] = nl++;
        if (rest)
            outer[v] = no++;
        if (part && rest)
            shared.push_back(v);
    }
    std::shuffle(shared.begin(), shared.end(), rng);
    std::vector<Edge> pe, re;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Edge out{g.label(e), {}};
        for (NodeId v : g.edge(e).att)
            out.att.push_back(inside[e] ? local[v] : outer[v]);
        (inside[e] ? pe : re).push_back(std::move(out));
    }
    std::vector<NodeId> pext, att, rext;
    for (NodeId v : shared) {
        pext.push_back(local[v]);
        att.push_back(outer[v]);
    }
    Hypergraph part(nl, std::move(pe), std::move(pext));
    re.push_back(Edge{label_for(part), att});
    for (NodeId v : g.ext())
        rext.push_back(outer[v]);
    return {part, Hypergraph(no, std::move(re), std::move(rext))};
}

inline std::vector<bool> random_subset(Rng& rng, int n, bool nonempty_complement) {
    std::vector<bool> s(n, false);
    if (n == 0)
        return s;
    int lo = 1, hi = nonempty_complement ? n - 1 : n;
    if (hi < lo)
        return {};
    int k = uniform(rng, lo, hi);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int i = 0; i < k; ++i)
        s[idx[i]] = true;
    return s;
}

class SequentGen {
public:
    explicit SequentGen(Rng& rng, int max_connectives = 5) : rng_(rng), cap_(max_connectives) {}

    Sequent axiom(int rank) { return axiom_of(random_prim(rng_, rank)); }
    static Sequent axiom_of(const Type& a) { return Sequent{Hypergraph::handle_filled(a), a}; }

    /// (→×) over 1-2 derivable premises.
    Sequent product_right(int depth) {
        int l = uniform(rng_, 1, 2);
        std::vector<Sequent> prem;
        for (int i = 0; i < l; ++i)
            prem.push_back(derivable(depth - 1, uniform(rng_, 0, 2)));
        int n = uniform(rng_, 1, 3);
        std::vector<Edge> edges;
        for (const auto& s : prem) {
            Edge e{s.succedent, {}};
            for (int j = 0; j < s.succedent.rank(); ++j)
                e.att.push_back(uniform(rng_, 0, n - 1));
            edges.push_back(std::move(e));
        }
        std::vector<NodeId> ext;
        for (int j = uniform(rng_, 0, 2); j > 0; --j)
            ext.push_back(uniform(rng_, 0, n - 1));
        Hypergraph body(n, std::move(edges), std::move(ext));
        std::vector<std::pair<EdgeId, Hypergraph>> subst;
        for (int i = 0; i < l; ++i)
            subst.emplace_back(i, prem[i].antecedent);
        return Sequent{replace_many(body, subst), Type::mul(body)};
    }

    /// (×→) backwards: fold some antecedent edges into one product edge.
    std::optional<Sequent> product_left(const Sequent& s) {
        auto inside = random_subset(rng_, s.antecedent.edge_count(), false);
        if (inside.empty())
            return std::nullopt;
        auto [part, rest] = carve(rng_, s.antecedent, inside, [](const Hypergraph& m) { return Type::mul(m); });
        return Sequent{rest, s.succedent};
    }

    /// (→÷): move some antecedent edges into a denominator.
    std::optional<Sequent> division_right(const Sequent& s) {
        auto inside = random_subset(rng_, s.antecedent.edge_count(), true);
        if (inside.empty())
            return std::nullopt;
        for (auto&& b : inside)
            b = !b;
        // inside now marks the edges that stay in F.
        auto [f, den] = carve(rng_, s.antecedent, inside, [](const Hypergraph& m) { return Type::dollar(m.rank()); });
        return Sequent{f, Type::div(s.succedent, den)};
    }

    /// (÷→): H[e/N•] -> A with derivable side premises gives
    /// H[e/D[$/(N÷D)•, d_i/H_i]] -> A.
    std::optional<Sequent> division_left(const Sequent& s, int depth) {
        if (s.antecedent.edge_count() == 0)
            return std::nullopt;
        EdgeId e = uniform(rng_, 0, s.antecedent.edge_count() - 1);
        const Type& num = s.antecedent.label(e);
        int k = num.rank();
        int side = uniform(rng_, 0, 1);
        std::vector<Sequent> prem;
        for (int i = 0; i < side; ++i)
            prem.push_back(derivable(depth - 1, uniform(rng_, 0, 2)));
        int n = std::max(1, k + uniform(rng_, 0, 1));
        auto node = [&] { return uniform(rng_, 0, n - 1); };
        std::vector<Edge> edges;
        int dr = uniform(rng_, 0, 2);
        Edge dollar{Type::dollar(dr), {}};
        for (int j = 0; j < dr; ++j)
            dollar.att.push_back(node());
        edges.push_back(dollar);
        for (const auto& p : prem) {
            Edge d{p.succedent, {}};
            for (int j = 0; j < p.succedent.rank(); ++j)
                d.att.push_back(node());
            edges.push_back(std::move(d));
        }
        std::vector<NodeId> ext;
        for (int j = 0; j < k; ++j)
            ext.push_back(node());
        Hypergraph den(n, std::move(edges), std::move(ext));
        Type t = Type::div(num, den);
        std::vector<std::pair<EdgeId, Hypergraph>> subst{{0, Hypergraph::handle_filled(t)}};
        for (std::size_t i = 0; i < prem.size(); ++i)
            subst.emplace_back(static_cast<EdgeId>(i + 1), prem[i].antecedent);
        return Sequent{replace(s.antecedent, e, replace_many(den, subst)), s.succedent};
    }

    /// A derivable HL sequent of the given rank.
    Sequent derivable(int depth, int rank) {
        Sequent s = axiom(rank);
        if (depth <= 0)
            return s;
        if (rank == 0 && coin(rng_, 0.3))
            s = product_right(depth);
        for (int steps = uniform(rng_, 1, 2); steps > 0; --steps) {
            std::optional<Sequent> next;
            switch (uniform(rng_, 0, 3)) {
            case 0: next = product_left(s); break;
            case 1: next = division_right(s); break;
            case 2: next = division_left(s, depth); break;
            default: break;
            }
            if (next && connectives(*next) <= cap_)
                s = *next;
        }
        return s;
    }

    /// A derivable sequent whose succedent is `goal`: an expansion of the
    /// goal, then antecedent-only steps.
    Sequent ending_in(const Type& goal, int steps) {
        Sequent s = axiom_of(goal);
        for (; steps > 0; --steps) {
            std::optional<Sequent> next = coin(rng_) ? product_left(s) : division_left(s, 1);
            if (next && connectives(*next) <= cap_)
                s = *next;
        }
        return s;
    }

private:
    Rng& rng_;
    int cap_;
};

} // namespace generators

#endif
