#include "hyperlam/dpo.hpp"

#include <algorithm>
#include <numeric>

namespace hyperlam {

namespace {

bool contains(const std::vector<Type>& ts, const Type& t) { return std::find(ts.begin(), ts.end(), t) != ts.end(); }

Hypergraph apply_unchecked(const DpoRule& r, const Context& ctx) {
    return replace(ctx.graph, ctx.hole, internal_forms(r).second);
}

} // namespace

void validate(const DpoRule& r) {
    if (!r.left.zero_rank() || !r.right.zero_rank())
        throw Error(ErrorCode::InvalidArgument, "rule " + r.name + ": sides must have rank 0");
    if (static_cast<int>(r.phi_left.size()) != r.k || static_cast<int>(r.phi_right.size()) != r.k)
        throw Error(ErrorCode::ArityMismatch, "rule " + r.name + ": interface maps must have length k");
    for (NodeId v : r.phi_left)
        if (v < 0 || v >= r.left.node_count())
            throw Error(ErrorCode::UnknownNode, "rule " + r.name + ": phiL image out of range");
    for (NodeId v : r.phi_right)
        if (v < 0 || v >= r.right.node_count())
            throw Error(ErrorCode::UnknownNode, "rule " + r.name + ": phiR image out of range");
}

const DpoRule& DpoGrammar::rule(const std::string& name) const {
    for (const auto& r : rules)
        if (r.name == name)
            return r;
    throw Error(ErrorCode::InvalidArgument, "no rule named " + name);
}

std::vector<const DpoRule*> DpoGrammar::nonterminal_rules() const {
    std::vector<const DpoRule*> out;
    for (const auto& r : rules)
        if (!r.terminal)
            out.push_back(&r);
    return out;
}

std::vector<const DpoRule*> DpoGrammar::terminal_rules() const {
    std::vector<const DpoRule*> out;
    for (const auto& r : rules)
        if (r.terminal)
            out.push_back(&r);
    return out;
}

bool DpoGrammar::is_terminal_graph(const Hypergraph& h) const {
    return std::all_of(h.edges().begin(), h.edges().end(),
                       [&](const Edge& e) { return contains(terminals, e.label); });
}

void validate(const DpoGrammar& gr) {
    for (const auto& t : gr.terminals)
        if (contains(gr.nonterminals, t))
            throw Error(ErrorCode::InvalidArgument, "label " + t.str() + " is both terminal and nonterminal");
    if (!contains(gr.nonterminals, gr.start))
        throw Error(ErrorCode::InvalidArgument, "start label is not a nonterminal");
    for (const auto& r : gr.rules) {
        validate(r);
        for (const auto* side : {&r.left, &r.right})
            for (const auto& e : side->edges())
                if (!contains(gr.nonterminals, e.label) && !contains(gr.terminals, e.label))
                    throw Error(ErrorCode::UnknownLabel, "rule " + r.name + " uses label " + e.label.str());
    }
}

std::pair<Hypergraph, Hypergraph> internal_forms(const DpoRule& r) {
    return {r.left.with_ext(r.phi_left), r.right.with_ext(r.phi_right)};
}

std::vector<Context> find_matches(const Hypergraph& g, const DpoRule& r) {
    auto contexts = enumerate_contexts(g, internal_forms(r).first);
    std::vector<std::pair<CanonicalForm, std::size_t>> order;
    for (std::size_t i = 0; i < contexts.size(); ++i)
        order.emplace_back(canonical(contexts[i].graph), i);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Context> out;
    for (auto& [form, i] : order)
        out.push_back(std::move(contexts[i]));
    return out;
}

Hypergraph apply(const Hypergraph& g, const DpoRule& r, const Context& ctx) {
    if (ctx.hole < 0 || ctx.hole >= ctx.graph.edge_count() ||
        ctx.graph.label(ctx.hole).rank() != r.k || ctx.graph.rank() != g.rank())
        throw Error(ErrorCode::InvalidContext, "context does not fit rule " + r.name);
    auto [l, rr] = internal_forms(r);
    if (!iso(replace(ctx.graph, ctx.hole, l), g))
        throw Error(ErrorCode::InvalidContext, "context is not an occurrence of rule " + r.name);
    return replace(ctx.graph, ctx.hole, rr);
}

DpoRule reverse(const DpoRule& r) {
    return DpoRule{r.name + "^-1", r.right, r.k, r.phi_right, r.phi_left, r.left, r.terminal};
}

DpoGrammar normalize(const DpoGrammar& gr) {
    if (gr.normalized)
        return gr;
    validate(gr);
    std::set<std::string> names;
    for (const auto& t : gr.nonterminals)
        names.insert(t.name());
    for (const auto& t : gr.terminals)
        names.insert(t.name());
    std::set<std::string> rule_names;
    for (const auto& r : gr.rules)
        rule_names.insert(r.name);

    DpoGrammar out;
    out.nonterminals = gr.nonterminals;
    out.terminals = gr.terminals;
    out.start = gr.start;
    out.normalized = true;
    for (const auto& a : gr.terminals) {
        std::string name = "T_" + a.name();
        while (names.count(name))
            name += "'";
        names.insert(name);
        Type proxy = Type::prim(name, a.rank());
        out.proxies.emplace(a.name(), proxy);
        out.nonterminals.push_back(proxy);
    }
    auto proxied = [&](const Hypergraph& h) {
        return relabel(h, [&](EdgeId e) {
            const Type& l = h.label(e);
            return contains(gr.terminals, l) ? out.proxies.at(l.name()) : l;
        });
    };
    for (const auto& r : gr.rules)
        out.rules.push_back(DpoRule{r.name, proxied(r.left), r.k, r.phi_left, r.phi_right, proxied(r.right), false});
    for (const auto& a : gr.terminals) {
        std::string name = "term_" + a.name();
        while (rule_names.count(name))
            name += "'";
        rule_names.insert(name);
        std::vector<NodeId> id(a.rank());
        std::iota(id.begin(), id.end(), 0);
        out.rules.push_back(DpoRule{name, Hypergraph::handle_open(out.proxies.at(a.name())), a.rank(), id, id,
                                    Hypergraph::handle_open(a), true});
    }
    return out;
}

std::map<std::string, int> DpoDerivation::rule_counts() const {
    std::map<std::string, int> out;
    for (const auto& s : steps)
        ++out[s.rule];
    return out;
}

bool check_derivation(const DpoGrammar& gr, const DpoDerivation& d) {
    Hypergraph current = d.source;
    for (const auto& s : d.steps) {
        try {
            Hypergraph next = apply(current, gr.rule(s.rule), s.context);
            if (!iso(next, s.result))
                return false;
            current = s.result;
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

DpoExplorer::DpoExplorer(const DpoGrammar& gr, std::size_t state_cap, std::vector<const DpoRule*> rules)
    : gr_(gr), rules_(std::move(rules)), cap_(state_cap) {
    if (rules_.empty())
        for (const auto& r : gr_.rules)
            rules_.push_back(&r);
    Hypergraph start = Hypergraph::handle_filled(gr_.start);
    index_.emplace(canonical(start).bytes, 0);
    nodes_.push_back(Node{start, 0, -1, nullptr, std::nullopt});
}

bool DpoExplorer::expand_to(int max_steps) {
    while (depth_ < max_steps) {
        if (capped_)
            return false;
        std::size_t end = nodes_.size();
        for (std::size_t i = frontier_begin_; i < end; ++i) {
            for (const DpoRule* r : rules_) {
                for (auto& ctx : find_matches(nodes_[i].graph, *r)) {
                    Hypergraph next = apply_unchecked(*r, ctx);
                    auto [it, fresh] = index_.emplace(canonical(next).bytes, static_cast<int>(nodes_.size()));
                    if (!fresh)
                        continue;
                    if (nodes_.size() >= cap_) {
                        index_.erase(it);
                        capped_ = true;
                        return false;
                    }
                    nodes_.push_back(Node{std::move(next), depth_ + 1, static_cast<int>(i), r, std::move(ctx)});
                }
            }
        }
        frontier_begin_ = end;
        ++depth_;
    }
    return true;
}

std::optional<int> DpoExplorer::depth_of(const Hypergraph& h) const {
    auto it = index_.find(canonical(h).bytes);
    if (it == index_.end())
        return std::nullopt;
    return nodes_[it->second].depth;
}

DpoDerivation DpoExplorer::path_to(const Hypergraph& h) const {
    auto it = index_.find(canonical(h).bytes);
    if (it == index_.end())
        throw Error(ErrorCode::InvalidArgument, "graph not reached");
    std::vector<int> chain;
    for (int i = it->second; i > 0; i = nodes_[i].parent)
        chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    DpoDerivation d{nodes_[0].graph, {}};
    for (int i : chain)
        d.steps.push_back(DpoStep{nodes_[i].rule->name, *nodes_[i].context, nodes_[i].graph});
    return d;
}

std::vector<Hypergraph> DpoExplorer::reached() const {
    std::vector<Hypergraph> out;
    for (const auto& n : nodes_)
        out.push_back(n.graph);
    return out;
}

namespace {

DpoSearchResult search_with(DpoExplorer& ex, const Hypergraph& h, int max_steps) {
    DpoSearchResult res;
    for (int d = 0;; ++d) {
        ex.expand_to(std::min(d, max_steps));
        auto depth = ex.depth_of(h);
        if (depth && *depth <= max_steps) {
            res.status = SearchStatus::Found;
            res.derivation = ex.path_to(h);
            break;
        }
        if (ex.capped()) {
            res.status = SearchStatus::BudgetExceeded;
            break;
        }
        if (d >= max_steps) {
            res.status = SearchStatus::NotFound;
            break;
        }
    }
    res.states = ex.states();
    return res;
}

} // namespace

DpoSearchResult derive_search(const DpoGrammar& gr, const Hypergraph& h, int max_steps, std::size_t state_cap) {
    if (max_steps < 0)
        throw Error(ErrorCode::InvalidArgument, "negative step bound");
    DpoExplorer ex(gr, state_cap);
    return search_with(ex, h, max_steps);
}

DpoSearchResult lc_member(const DpoGrammar& gr, const Hypergraph& h, int c, const LcOptions& opts) {
    if (opts.count_original_steps) {
        if (!gr.is_terminal_graph(h))
            throw Error(ErrorCode::InvalidArgument, "L_c membership needs a terminal graph");
        if (c < 0)
            throw Error(ErrorCode::InvalidArgument, "negative c");
        DpoExplorer ex(gr, opts.state_cap);
        return search_with(ex, h, c * h.edge_count());
    }
    DpoGrammar norm = normalize(gr);
    DpoExplorer ex(norm, opts.state_cap);
    return lc_member(ex, h, c);
}

DpoSearchResult lc_member(DpoExplorer& explorer, const Hypergraph& h, int c) {
    if (c < 0)
        throw Error(ErrorCode::InvalidArgument, "negative c");
    if (!explorer.grammar().is_terminal_graph(h))
        throw Error(ErrorCode::InvalidArgument, "L_c membership needs a terminal graph");
    return search_with(explorer, h, c * h.edge_count());
}

std::map<CanonicalForm, Hypergraph> enumerate_language(const DpoGrammar& gr, int max_steps, int max_nodes,
                                                       int max_edges, std::size_t state_cap) {
    DpoExplorer ex(gr, state_cap);
    if (!ex.expand_to(max_steps))
        throw Error(ErrorCode::BudgetExceeded, "state cap reached while enumerating");
    std::map<CanonicalForm, Hypergraph> out;
    for (auto& h : ex.reached())
        if (gr.is_terminal_graph(h) && h.node_count() <= max_nodes && h.edge_count() <= max_edges)
            out.emplace(canonical(h), h);
    return out;
}

} // namespace hyperlam
