#include "hyperlam/encodings.hpp"

#include <algorithm>
#include <set>

#include "hyperlam/canonical.hpp"

namespace hyperlam {

std::vector<Type> LexGrammar::types_for(const Type& terminal) const {
    std::vector<Type> out;
    for (const auto& e : lexicon)
        if (e.terminal == terminal)
            out.push_back(e.type);
    return out;
}

void validate(const LexGrammar& g) {
    for (const auto& e : g.lexicon) {
        if (std::find(g.alphabet.begin(), g.alphabet.end(), e.terminal) == g.alphabet.end())
            throw Error(ErrorCode::UnknownLabel, "lexicon terminal " + e.terminal.str() + " not in the alphabet");
        if (e.terminal.rank() != e.type.rank())
            throw Error(ErrorCode::RankMismatch, "lexicon entry for " + e.terminal.str() + " changes rank");
    }
}

Type dpo_type(const DpoRule& r) {
    if (r.terminal)
        throw Error(ErrorCode::InvalidArgument, "rule " + r.name + " is terminal");
    auto [l, rr] = internal_forms(r);
    return Type::div(Type::mul(l), disjoint_union(rr, Hypergraph::handle_filled(Type::dollar(0))));
}

Hypergraph proxy_graph(const DpoGrammar& normalized, const Hypergraph& h) {
    return relabel(h, [&](EdgeId e) {
        const Type& l = h.label(e);
        auto it = normalized.proxies.find(l.name());
        if (l.kind() != TypeKind::Prim || it == normalized.proxies.end() ||
            std::find(normalized.terminals.begin(), normalized.terminals.end(), l) == normalized.terminals.end())
            throw Error(ErrorCode::InvalidArgument, "edge label " + l.str() + " is not a terminal");
        return it->second;
    });
}

namespace {

void require_normalized(const DpoGrammar& gr) {
    if (!gr.normalized)
        throw Error(ErrorCode::InvalidArgument, "the construction needs a normalized grammar");
}

LexGrammar proxy_lexicon(const DpoGrammar& gr, const Type& start, Calculus calc) {
    LexGrammar g;
    g.alphabet = gr.terminals;
    g.start = start;
    g.calculus = calc;
    for (const auto& a : gr.terminals)
        g.lexicon.push_back(LexEntry{a, gr.proxies.at(a.name())});
    return g;
}

Type start_with_rules(const DpoGrammar& gr, Type (*wrap)(const Type&)) {
    if (gr.start.rank() != 0)
        throw Error(ErrorCode::InvalidArgument, "the start label must have rank 0");
    Hypergraph den;
    for (const auto* r : gr.nonterminal_rules())
        den = disjoint_union(den, Hypergraph::handle_filled(wrap(dpo_type(*r))));
    den = disjoint_union(den, Hypergraph::handle_filled(Type::dollar(0)));
    return Type::div(gr.start, den);
}

Type wrap_bang(const Type& t) { return Type::bang(t); }
Type wrap_star(const Type& t) { return Type::star(floating_template(), t); }

// Multisets of size <= c over n kinds, by size then lexicographically.
void multisets(int n, int c, std::vector<std::vector<int>>& out) {
    for (int size = 0; size <= c; ++size) {
        std::vector<int> pick(size, 0);
        while (true) {
            std::vector<int> counts(n, 0);
            for (int x : pick)
                ++counts[x];
            out.push_back(counts);
            int i = size - 1;
            while (i >= 0 && pick[i] == n - 1)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[i];
        }
        if (n == 0)
            break;
    }
}

} // namespace

LexGrammar lg_hmel(const DpoGrammar& normalized) {
    require_normalized(normalized);
    return proxy_lexicon(normalized, start_with_rules(normalized, wrap_bang), Calculus::HMEL0);
}

LexGrammar lg_star(const DpoGrammar& normalized) {
    require_normalized(normalized);
    return proxy_lexicon(normalized, start_with_rules(normalized, wrap_star), Calculus::HLStar);
}

LexGrammar lg_c(const DpoGrammar& normalized, int c) {
    require_normalized(normalized);
    if (c < 0)
        throw Error(ErrorCode::InvalidArgument, "c must be non-negative");
    std::vector<Type> rule_types;
    for (const auto* r : normalized.nonterminal_rules())
        rule_types.push_back(dpo_type(*r));
    std::vector<std::vector<int>> choices;
    multisets(static_cast<int>(rule_types.size()), c, choices);

    LexGrammar g;
    g.alphabet = normalized.terminals;
    g.start = normalized.start;
    g.calculus = Calculus::HL;
    for (const auto& a : normalized.terminals) {
        std::set<std::string> seen;
        for (const auto& counts : choices) {
            Hypergraph body = Hypergraph::handle_filled(normalized.proxies.at(a.name()));
            for (std::size_t r = 0; r < rule_types.size(); ++r)
                body = disjoint_union(body, repeat_union(counts[r], Hypergraph::handle_filled(rule_types[r])));
            Type t = Type::mul(body);
            if (seen.insert(t.key()).second)
                g.lexicon.push_back(LexEntry{a, t});
        }
    }
    return g;
}

LexGrammar lg_for_lc(const DpoGrammar& normalized, int c) {
    if (c < 1)
        throw Error(ErrorCode::InvalidArgument, "L_c correspondence needs c >= 1");
    return lg_c(normalized, c - 1);
}

DerivationPtr hl_witness_from_dpo(const DpoGrammar& gr, const DpoDerivation& d, const DerivationPtr& base) {
    if (!iso(base->conclusion.antecedent, d.source))
        throw Error(ErrorCode::InvalidArgument, "base tree does not conclude the derivation's source");
    const Type goal = base->conclusion.succedent;
    DerivationPtr tree = base;
    Hypergraph traces; // floating DPO(r)• edges released so far
    for (const auto& step : d.steps) {
        const DpoRule& r = gr.rule(step.rule);
        Type rule_type = dpo_type(r);
        auto [l, rr] = internal_forms(r);
        const Hypergraph& ctx = step.context.graph;
        EdgeId e0 = step.context.hole;

        Hypergraph main = disjoint_union(ctx.with_label(e0, rule_type.numerator()), traces);
        auto unfold = std::make_shared<const Derivation>(
            Derivation{Rule::MulLeft, Sequent{main, goal}, {tree}, e0, std::nullopt, 0});

        std::vector<DerivationPtr> premises{unfold};
        const Hypergraph& den = rule_type.denominator();
        for (EdgeId e = 0; e < den.edge_count(); ++e) {
            if (e == rule_type.dollar_edge())
                continue;
            auto h = Hypergraph::handle_filled(den.label(e));
            premises.push_back(std::make_shared<const Derivation>(
                Derivation{Rule::Axiom, Sequent{h, den.label(e)}, {}, std::nullopt, std::nullopt, 0}));
        }
        traces = disjoint_union(traces, Hypergraph::handle_filled(rule_type));
        Hypergraph conclusion = disjoint_union(step.result, traces);
        tree = std::make_shared<const Derivation>(Derivation{Rule::DivLeft, Sequent{conclusion, goal},
                                                             std::move(premises), conclusion.edge_count() - 1,
                                                             e0, 0});
    }
    return tree;
}

namespace {

std::map<std::string, int> balance_of(const Type& t) { return t.prim_counts(); }

} // namespace

MemberResult member_hl(const LexGrammar& g, const Hypergraph& h, const MemberOptions& opts) {
    Prover prover(g.calculus, opts.search);
    return member_hl(g, h, prover, opts.collect_all);
}

MemberResult member_hl(const LexGrammar& g, const Hypergraph& h, Prover& prover, bool collect_all) {
    validate(g);
    std::vector<std::vector<Type>> options;
    for (const auto& e : h.edges()) {
        if (std::find(g.alphabet.begin(), g.alphabet.end(), e.label) == g.alphabet.end())
            throw Error(ErrorCode::UnknownLabel, "edge label " + e.label.str() + " is not in the alphabet");
        options.push_back(g.types_for(e.label));
    }
    MemberResult res;
    res.route = "search";
    bool unknown = false;
    for (const auto& o : options)
        if (o.empty())
            return res;

    std::vector<std::size_t> pick(options.size(), 0);
    const bool plain = g.calculus == Calculus::HL;
    while (true) {
        std::vector<Type> assignment;
        std::map<std::string, int> sum;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            assignment.push_back(options[i][pick[i]]);
            for (const auto& [k, v] : balance_of(assignment.back()))
                sum[k] += v;
        }
        for (const auto& [k, v] : g.start.prim_counts())
            sum[k] -= v;
        bool balanced = std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
        if (plain && !balanced) {
            ++res.pruned;
        } else {
            ++res.assignments;
            Hypergraph labeled = relabel(h, [&](EdgeId e) { return assignment[e]; });
            auto proof = prover.prove(Sequent{labeled, g.start});
            if (proof.verdict == Verdict::Found) {
                res.verdict = Verdict::Found;
                res.witnesses.push_back(HlWitness{assignment, proof.tree});
                if (!collect_all)
                    return res;
            } else if (proof.verdict == Verdict::Unknown) {
                unknown = true;
            }
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size())
            break;
    }
    if (res.verdict != Verdict::Found)
        res.verdict = unknown ? Verdict::Unknown : Verdict::NotDerivable;
    return res;
}

MemberResult member_hmel(const DpoGrammar& normalized, const LexGrammar& g, const Hypergraph& h,
                         const HmelOptions& opts) {
    require_normalized(normalized);
    validate(g);
    if (g.start.kind() != TypeKind::Div)
        throw Error(ErrorCode::InvalidArgument, "expected the start type of an lg_hmel grammar");
    Hypergraph target = proxy_graph(normalized, h);
    MemberResult res;

    DpoExplorer explorer(normalized, opts.replay_state_cap, normalized.nonterminal_rules());
    DpoGrammar nonterminal_part = normalized;
    auto found = [&]() -> std::optional<DpoDerivation> {
        for (int d = 0; d <= opts.replay_max_steps; ++d) {
            explorer.expand_to(d);
            if (explorer.depth_of(target))
                return explorer.path_to(target);
            if (explorer.capped() || explorer.explored_depth() < d)
                break;
        }
        return std::nullopt;
    }();

    if (found) {
        const Type& s = normalized.start;
        auto axiom = std::make_shared<const Derivation>(Derivation{
            Rule::Axiom, Sequent{Hypergraph::handle_filled(s), s}, {}, std::nullopt, std::nullopt, 0});
        DerivationPtr hl = hl_witness_from_dpo(normalized, *found, axiom);
        auto counts = found->rule_counts();

        const Type& s_prime = g.start;
        Hypergraph graph = replace(s_prime.denominator(), s_prime.dollar_edge(), target);
        struct Step {
            Rule rule;
            Hypergraph graph;
            EdgeId edge;
        };
        std::vector<Step> chain;
        auto find_edge = [&](const Type& t) {
            for (EdgeId e = 0; e < graph.edge_count(); ++e)
                if (graph.label(e) == t)
                    return e;
            throw Error(ErrorCode::InvalidArgument, "missing !-edge for " + t.str());
        };
        auto rules = normalized.nonterminal_rules();
        for (const auto* r : rules) {
            if (counts[r->name] > 0)
                continue;
            EdgeId e = find_edge(Type::bang(dpo_type(*r)));
            chain.push_back(Step{Rule::Weakening, graph, e});
            graph = graph.without_edge(e);
        }
        for (const auto* r : rules) {
            int k = counts[r->name];
            if (k == 0)
                continue;
            Type banged = Type::bang(dpo_type(*r));
            for (int i = 1; i < k; ++i) {
                EdgeId e = find_edge(banged);
                chain.push_back(Step{Rule::Contraction, graph, e});
                graph = graph.with_edge(Edge{banged, {}});
            }
            for (int i = 0; i < k; ++i) {
                EdgeId e = find_edge(banged);
                chain.push_back(Step{Rule::BangLeft, graph, e});
                graph = replace(graph, e, Hypergraph::handle_filled(banged.inner()));
            }
        }
        DerivationPtr cur = hl;
        for (std::size_t i = chain.size(); i-- > 0;)
            cur = std::make_shared<const Derivation>(Derivation{chain[i].rule, Sequent{chain[i].graph, s},
                                                                {cur}, chain[i].edge, std::nullopt, 0});
        cur = std::make_shared<const Derivation>(
            Derivation{Rule::DivRight, Sequent{target, s_prime}, {cur}, std::nullopt, std::nullopt, 0});
        res.verdict = Verdict::Found;
        res.route = "replay";
        std::vector<Type> assignment;
        for (const auto& e : target.edges())
            assignment.push_back(e.label);
        res.witnesses.push_back(HlWitness{assignment, cur});
        return res;
    }

    if (!opts.allow_search) {
        res.verdict = Verdict::Unknown;
        res.route = "replay";
        return res;
    }
    Prover prover(Calculus::HMEL0, opts.search);
    auto proof = prover.prove(Sequent{target, g.start});
    res.route = "search";
    res.verdict = proof.verdict;
    if (proof.verdict == Verdict::Found) {
        std::vector<Type> assignment;
        for (const auto& e : target.edges())
            assignment.push_back(e.label);
        res.witnesses.push_back(HlWitness{assignment, proof.tree});
    }
    return res;
}

} // namespace hyperlam
