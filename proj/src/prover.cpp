#include "hyperlam/prover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hyperlam/canonical.hpp"

namespace hyperlam {

const char* to_string(Calculus c) {
    switch (c) {
    case Calculus::HL: return "hl";
    case Calculus::HMEL0: return "hmel0";
    case Calculus::HLStar: return "hl-star";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Found: return "found";
    case Verdict::NotDerivable: return "not-derivable";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

Hypergraph explicit_graph(const Hypergraph& delta, const std::vector<Type>& bank) {
    std::vector<Edge> edges = delta.edges();
    for (const auto& t : bank)
        edges.push_back(Edge{t, {}});
    return Hypergraph(delta.node_count(), std::move(edges), delta.ext());
}

DerivationPtr make_node(Rule rule, Sequent conclusion, std::vector<DerivationPtr> premises,
                        std::optional<EdgeId> edge = std::nullopt, std::optional<EdgeId> premise_edge = std::nullopt,
                        int n = 0) {
    return std::make_shared<const Derivation>(
        Derivation{rule, std::move(conclusion), std::move(premises), edge, premise_edge, n});
}

// Removes the listed edges of g one (w) step at a time, bottom to top.
DerivationPtr weaken_chain(const Hypergraph& g, const Type& goal, std::vector<EdgeId> edges, const DerivationPtr& top) {
    std::sort(edges.rbegin(), edges.rend());
    std::vector<Hypergraph> graphs{g};
    for (EdgeId e : edges)
        graphs.push_back(graphs.back().without_edge(e));
    DerivationPtr cur = rebase(top, Sequent{graphs.back(), goal});
    for (std::size_t i = edges.size(); i-- > 0;)
        cur = make_node(Rule::Weakening, Sequent{graphs[i], goal}, {cur}, edges[i]);
    return cur;
}

// Duplicates each listed edge of g once per entry by (c) steps; `top`
// concludes the graph with all copies appended in list order.
DerivationPtr contract_chain(const Hypergraph& g, const Type& goal, const std::vector<EdgeId>& edges,
                             const DerivationPtr& top) {
    std::vector<Hypergraph> graphs{g};
    for (EdgeId e : edges)
        graphs.push_back(graphs.back().with_edge(Edge{g.label(e), {}}));
    DerivationPtr cur = top;
    for (std::size_t i = edges.size(); i-- > 0;)
        cur = make_node(Rule::Contraction, Sequent{graphs[i], goal}, {cur}, edges[i]);
    return cur;
}

Hypergraph with_copies(const Hypergraph& g, const std::vector<EdgeId>& edges) {
    Hypergraph out = g;
    for (EdgeId e : edges)
        out = out.with_edge(Edge{g.label(e), {}});
    return out;
}

std::string tuple_key(const std::vector<const Hypergraph*>& graphs) {
    std::string key;
    for (const auto* g : graphs) {
        auto form = canonical(*g).bytes;
        key += std::to_string(form.size());
        key += ':';
        key += form;
    }
    return key;
}

bool balanced(const Hypergraph& delta, const Type& goal) {
    std::map<std::string, int> sum;
    for (const auto& e : delta.edges())
        for (const auto& [k, v] : e.label.prim_counts())
            sum[k] += v;
    for (const auto& [k, v] : goal.prim_counts())
        sum[k] -= v;
    return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
}

// With a bank of non-modal !-types, the goal's counts minus the antecedent's
// must be a sum of bank counts with multiplicities >= 0. Checked per
// primitive by sign, and exactly when the bank spans a single direction.
bool balanced(const Hypergraph& delta, const std::vector<Type>& bank, const Type& goal) {
    if (bank.empty())
        return balanced(delta, goal);
    std::map<std::string, int> need = goal.prim_counts();
    for (const auto& e : delta.edges())
        for (const auto& [k, v] : e.label.prim_counts())
            need[k] -= v;
    std::vector<std::map<std::string, int>> dirs;
    for (const auto& t : bank) {
        if (t.inner().modal())
            return true;
        if (!t.inner().prim_counts().empty())
            dirs.push_back(t.inner().prim_counts());
    }
    for (const auto& d : dirs)
        for (const auto& [k, v] : d)
            need.try_emplace(k, 0);
    for (const auto& [k, v] : need) {
        bool up = false, down = false;
        for (const auto& d : dirs)
            if (auto it = d.find(k); it != d.end())
                (it->second > 0 ? up : down) = true;
        if ((v > 0 && !up) || (v < 0 && !down))
            return false;
    }
    if (dirs.size() == 1 || (dirs.size() > 1 && std::all_of(dirs.begin() + 1, dirs.end(),
                                                            [&](const auto& d) { return d == dirs[0]; }))) {
        const auto& d = dirs[0];
        const auto& [k0, v0] = *d.begin();
        int n = need[k0];
        if (n % v0 != 0 || n / v0 < 0)
            return false;
        int mult = n / v0;
        for (const auto& [k, v] : need) {
            auto it = d.find(k);
            if (v != (it == d.end() ? 0 : it->second) * mult)
                return false;
        }
    }
    return true;
}

bool uses(const Type& t, TypeKind kind) {
    if (t.kind() == kind)
        return true;
    switch (t.kind()) {
    case TypeKind::Div:
        if (uses(t.numerator(), kind))
            return true;
        for (const auto& e : t.denominator().edges())
            if (e.label.is_logical() && uses(e.label, kind))
                return true;
        return false;
    case TypeKind::Mul:
        for (const auto& e : t.body().edges())
            if (uses(e.label, kind))
                return true;
        return false;
    case TypeKind::Bang:
    case TypeKind::Star:
        return uses(t.inner(), kind);
    default:
        return false;
    }
}

} // namespace

std::vector<DivisorSplit> match_divisor(const Hypergraph& g, EdgeId f) {
    const Type& t = g.label(f);
    if (t.kind() != TypeKind::Div)
        throw Error(ErrorCode::InvalidArgument, "edge is not labeled by a division");
    const Hypergraph& den = t.denominator();
    DecomposeQuery q;
    q.host = &g;
    q.pattern = &den;
    q.roles.assign(den.edge_count(), PatternRole::Hole);
    q.roles[t.dollar_edge()] = PatternRole::Literal;
    q.outer_context = true;
    q.anchor = std::make_pair(t.dollar_edge(), f);
    std::set<std::string> seen;
    std::vector<DivisorSplit> out;
    for (const auto& d : decompose(q)) {
        DivisorSplit s{context_graph(g, den, d, t.numerator()), -1, {}};
        s.numerator_edge = s.main.edge_count() - 1;
        for (EdgeId e = 0; e < den.edge_count(); ++e)
            if (e != t.dollar_edge())
                s.parts.push_back(hole_graph(g, den, d, e));
        std::vector<const Hypergraph*> all{&s.main};
        for (const auto& p : s.parts)
            all.push_back(&p);
        if (seen.insert(tuple_key(all)).second)
            out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Hypergraph>> match_product(const Hypergraph& g, const Hypergraph& m) {
    DecomposeQuery q;
    q.host = &g;
    q.pattern = &m;
    q.roles.assign(m.edge_count(), PatternRole::Hole);
    std::set<std::string> seen;
    std::vector<std::vector<Hypergraph>> out;
    for (const auto& d : decompose(q)) {
        std::vector<Hypergraph> parts;
        for (EdgeId e = 0; e < m.edge_count(); ++e)
            parts.push_back(hole_graph(g, m, d, e));
        std::vector<const Hypergraph*> all;
        for (const auto& p : parts)
            all.push_back(&p);
        if (seen.insert(tuple_key(all)).second)
            out.push_back(std::move(parts));
    }
    return out;
}

Prover::Prover(Calculus calc, SearchConfig cfg) : calc_(calc), cfg_(cfg), active_(cfg) {}

void Prover::check_metric(const Sequent& conclusion, const std::vector<Sequent>& premises) {
    int sum = 0;
    for (const auto& p : premises)
        sum += connectives(p);
    if (sum != connectives(conclusion) - 1)
        throw std::logic_error("connective count did not decrease by one");
    ++metric_checks_;
}

ProofResult Prover::prove(const Sequent& s) {
    validate(s);
    bool bang = uses(s.succedent, TypeKind::Bang);
    bool star = uses(s.succedent, TypeKind::Star);
    for (const auto& e : s.antecedent.edges()) {
        bang = bang || uses(e.label, TypeKind::Bang);
        star = star || uses(e.label, TypeKind::Star);
    }
    if (bang && calc_ != Calculus::HMEL0)
        throw Error(ErrorCode::InvalidType, std::string("! is not available in ") + to_string(calc_));
    if (star && calc_ != Calculus::HLStar)
        throw Error(ErrorCode::InvalidType, std::string("the star is not available in ") + to_string(calc_));

    active_ = cfg_;
    if (active_.max_depth <= 0)
        active_.max_depth = std::max(4, 4 * connectives(s));
    if (active_.max_bang_copies <= 0)
        active_.max_bang_copies = s.antecedent.edge_count() + 8;
    if (active_.star_unfold_cap < 0)
        throw Error(ErrorCode::InvalidArgument, "negative star unfold cap");
    query_states_ = 0;
    capped_ = false;
    std::erase_if(memo_, [](const auto& kv) { return kv.second.verdict == Verdict::Unknown; });

    Outcome o = solve(s.antecedent, {}, s.succedent, Budget{active_.max_depth, {}});
    ProofResult res;
    res.verdict = o.verdict;
    res.tree = o.tree;
    res.states = query_states_;
    if (o.verdict == Verdict::Unknown)
        res.diagnostics = capped_ ? "state cap reached" : "search budget exhausted";
    return res;
}

Prover::Outcome Prover::solve(const Hypergraph& delta, const std::vector<Type>& bank, const Type& goal,
                              Budget budget) {
    std::vector<Type> settled = bank;
    std::vector<EdgeId> weaken, moved;
    for (EdgeId e = 0; e < delta.edge_count(); ++e) {
        const Type& t = delta.label(e);
        if (t.kind() != TypeKind::Bang)
            continue;
        auto it = std::lower_bound(settled.begin(), settled.end(), t);
        if (it != settled.end() && *it == t) {
            weaken.push_back(e);
        } else {
            settled.insert(it, t);
            moved.push_back(e);
        }
    }
    if (weaken.empty() && moved.empty())
        return search(delta, bank, goal, budget);

    std::vector<bool> drop(delta.edge_count(), false);
    for (EdgeId e : weaken)
        drop[e] = true;
    for (EdgeId e : moved)
        drop[e] = true;
    std::vector<Edge> kept;
    for (EdgeId e = 0; e < delta.edge_count(); ++e)
        if (!drop[e])
            kept.push_back(delta.edge(e));
    Hypergraph core(delta.node_count(), std::move(kept), delta.ext());
    Outcome o = search(core, settled, goal, budget);
    if (o.verdict != Verdict::Found)
        return Outcome{o.verdict, nullptr};
    return Outcome{Verdict::Found, weaken_chain(explicit_graph(delta, bank), goal, weaken, o.tree)};
}

Prover::Outcome Prover::search(const Hypergraph& delta, const std::vector<Type>& bank, const Type& goal,
                               Budget& budget) {
    ++states_;
    ++query_states_;
    const bool modal_calc = calc_ != Calculus::HL;
    const Sequent conclusion{explicit_graph(delta, bank), goal};

    std::string key = canonical(delta).bytes;
    key += '|';
    for (const auto& t : bank) {
        key += t.key();
        key += ',';
    }
    key += '|';
    key += goal.key();
    std::string budget_key;
    if (modal_calc) {
        budget_key = key + "#" + std::to_string(budget.depth);
        for (const auto& [k, v] : budget.copies)
            budget_key += "/" + std::to_string(v) + k;
    }
    if (auto it = memo_.find(key); it != memo_.end()) {
        if (it->second.verdict == Verdict::Found)
            return Outcome{Verdict::Found, rebase(it->second.tree, conclusion)};
        return it->second;
    }
    if (modal_calc) {
        if (auto it = memo_.find(budget_key); it != memo_.end())
            return it->second;
        if (query_states_ > active_.state_cap) {
            capped_ = true;
            return Outcome{Verdict::Unknown, nullptr};
        }
        if (budget.depth <= 0)
            return Outcome{Verdict::Unknown, nullptr};
    }

    bool unknown = false;
    Budget child = budget;
    child.depth -= 1;

    auto remember = [&](Outcome o) {
        if (o.verdict == Verdict::Unknown)
            memo_[budget_key] = o;
        else
            memo_[key] = o;
        return o;
    };
    auto found = [&](DerivationPtr tree) { return remember(Outcome{Verdict::Found, std::move(tree)}); };
    auto note = [&](Verdict v) {
        if (v == Verdict::Unknown)
            unknown = true;
    };

    // Axiom, with the bank weakened away.
    if (iso(delta, Hypergraph::handle_filled(goal))) {
        auto ax = make_node(Rule::Axiom, Sequent{delta, goal}, {});
        std::vector<EdgeId> bank_edges;
        for (std::size_t j = 0; j < bank.size(); ++j)
            bank_edges.push_back(delta.edge_count() + static_cast<EdgeId>(j));
        return found(weaken_chain(conclusion.antecedent, goal, bank_edges, ax));
    }

    if (!modal(Sequent{delta, goal}) && !balanced(delta, bank, goal))
        return remember(Outcome{Verdict::NotDerivable, nullptr});

    // Sequents solved with the same bank; on success the trees come back in
    // the given order.
    auto solve_all = [&](const std::vector<std::pair<Hypergraph, Type>>& prems,
                         std::vector<DerivationPtr>& trees) -> Verdict {
        trees.assign(prems.size(), nullptr);
        std::vector<std::size_t> order;
        for (std::size_t i = 1; i < prems.size(); ++i)
            order.push_back(i);
        if (!prems.empty())
            order.push_back(0);
        for (std::size_t i : order) {
            Outcome o = solve(prems[i].first, bank, prems[i].second, child);
            if (o.verdict != Verdict::Found)
                return o.verdict;
            trees[i] = o.tree;
        }
        return Verdict::Found;
    };
    auto premise_sequents = [&](const std::vector<DerivationPtr>& trees) {
        std::vector<Sequent> out;
        for (const auto& t : trees)
            out.push_back(t->conclusion);
        return out;
    };
    // The bank edges of the explicit conclusion, once per extra premise.
    auto copies_for = [&](std::size_t premises) {
        std::vector<EdgeId> out;
        for (std::size_t k = 1; k < premises; ++k)
            for (std::size_t j = 0; j < bank.size(); ++j)
                out.push_back(delta.edge_count() + static_cast<EdgeId>(j));
        return out;
    };

    if (cfg_.eager_invertible) {
        if (goal.kind() == TypeKind::Div) {
            Hypergraph raw = replace(goal.denominator(), goal.dollar_edge(), delta);
            Outcome o = solve(raw, bank, goal.numerator(), child);
            if (o.verdict != Verdict::Found)
                return remember(Outcome{o.verdict, nullptr});
            check_metric(conclusion, {o.tree->conclusion});
            return found(make_node(Rule::DivRight, conclusion, {o.tree}));
        }
        for (EdgeId f = 0; f < delta.edge_count(); ++f) {
            if (delta.label(f).kind() != TypeKind::Mul)
                continue;
            Outcome o = solve(replace(delta, f, delta.label(f).body()), bank, goal, child);
            if (o.verdict != Verdict::Found)
                return remember(Outcome{o.verdict, nullptr});
            check_metric(conclusion, {o.tree->conclusion});
            return found(make_node(Rule::MulLeft, conclusion, {o.tree}, f));
        }
    } else {
        if (goal.kind() == TypeKind::Div) {
            Hypergraph raw = replace(goal.denominator(), goal.dollar_edge(), delta);
            Outcome o = solve(raw, bank, goal.numerator(), child);
            if (o.verdict == Verdict::Found) {
                check_metric(conclusion, {o.tree->conclusion});
                return found(make_node(Rule::DivRight, conclusion, {o.tree}));
            }
            note(o.verdict);
        }
        for (EdgeId f = 0; f < delta.edge_count(); ++f) {
            if (delta.label(f).kind() != TypeKind::Mul)
                continue;
            Outcome o = solve(replace(delta, f, delta.label(f).body()), bank, goal, child);
            if (o.verdict == Verdict::Found) {
                check_metric(conclusion, {o.tree->conclusion});
                return found(make_node(Rule::MulLeft, conclusion, {o.tree}, f));
            }
            note(o.verdict);
        }
    }

    if (goal.kind() == TypeKind::Bang && delta.node_count() == 0 && delta.edge_count() == 0) {
        Outcome o = solve(delta, bank, goal.inner(), child);
        if (o.verdict == Verdict::Found)
            return found(make_node(Rule::BangRight, conclusion, {o.tree}));
        note(o.verdict);
    }

    for (EdgeId f = 0; f < delta.edge_count(); ++f) {
        const Type& t = delta.label(f);
        if (t.kind() != TypeKind::Div)
            continue;
        const Hypergraph& den = t.denominator();
        for (const auto& split : match_divisor(delta, f)) {
            std::vector<std::pair<Hypergraph, Type>> prems{{split.main, goal}};
            std::size_t next = 0;
            for (EdgeId e = 0; e < den.edge_count(); ++e)
                if (e != t.dollar_edge())
                    prems.emplace_back(split.parts[next++], den.label(e));
            std::vector<DerivationPtr> trees;
            Verdict v = solve_all(prems, trees);
            if (v != Verdict::Found) {
                note(v);
                continue;
            }
            auto copies = copies_for(prems.size());
            Sequent rule_conclusion{with_copies(conclusion.antecedent, copies), goal};
            check_metric(rule_conclusion, premise_sequents(trees));
            auto node = make_node(Rule::DivLeft, rule_conclusion, trees, f, split.numerator_edge);
            return found(contract_chain(conclusion.antecedent, goal, copies, node));
        }
    }

    if (goal.kind() == TypeKind::Mul) {
        const Hypergraph& body = goal.body();
        for (const auto& parts : match_product(delta, body)) {
            std::vector<std::pair<Hypergraph, Type>> prems;
            for (EdgeId e = 0; e < body.edge_count(); ++e)
                prems.emplace_back(parts[e], body.label(e));
            std::vector<DerivationPtr> trees;
            Verdict v = solve_all(prems, trees);
            if (v != Verdict::Found) {
                note(v);
                continue;
            }
            if (prems.empty()) {
                auto node = make_node(Rule::MulRight, Sequent{delta, goal}, {});
                check_metric(node->conclusion, {});
                std::vector<EdgeId> bank_edges;
                for (std::size_t j = 0; j < bank.size(); ++j)
                    bank_edges.push_back(delta.edge_count() + static_cast<EdgeId>(j));
                return found(weaken_chain(conclusion.antecedent, goal, bank_edges, node));
            }
            auto copies = copies_for(prems.size());
            Sequent rule_conclusion{with_copies(conclusion.antecedent, copies), goal};
            check_metric(rule_conclusion, premise_sequents(trees));
            auto node = make_node(Rule::MulRight, rule_conclusion, trees);
            return found(contract_chain(conclusion.antecedent, goal, copies, node));
        }
    }

    if (calc_ == Calculus::HMEL0) {
        for (std::size_t j = 0; j < bank.size(); ++j) {
            const Type& bt = bank[j];
            Budget next = child;
            int& used = next.copies[bt.key()];
            if (used >= active_.max_bang_copies) {
                unknown = true;
                continue;
            }
            ++used;
            Outcome o = solve(disjoint_union(delta, Hypergraph::handle_filled(bt.inner())), bank, goal, next);
            if (o.verdict != Verdict::Found) {
                note(o.verdict);
                continue;
            }
            EdgeId bank_edge = delta.edge_count() + static_cast<EdgeId>(j);
            Hypergraph doubled = with_copies(conclusion.antecedent, {bank_edge});
            auto deref = make_node(Rule::BangLeft, Sequent{doubled, goal}, {o.tree}, doubled.edge_count() - 1);
            return found(contract_chain(conclusion.antecedent, goal, {bank_edge}, deref));
        }
    }

    if (calc_ == Calculus::HLStar) {
        for (EdgeId f = 0; f < delta.edge_count(); ++f) {
            const Type& t = delta.label(f);
            if (t.kind() != TypeKind::Star)
                continue;
            for (int n = 0; n <= active_.star_unfold_cap; ++n) {
                Outcome o = solve(replace(delta, f, t_iterate(t.tmpl(), t.inner(), n)), bank, goal, child);
                if (o.verdict == Verdict::Found)
                    return found(make_node(Rule::StarLeft, conclusion, {o.tree}, f, std::nullopt, n));
            }
            unknown = true;
        }
        if (goal.kind() == TypeKind::Star) {
            std::vector<DerivationPtr> trees;
            bool refuted = false, open = false;
            for (int n = 0; n <= active_.star_unfold_cap; ++n) {
                Outcome o = solve(delta, bank, Type::mul(t_iterate(goal.tmpl(), goal.inner(), n)), child);
                if (o.verdict == Verdict::NotDerivable) {
                    refuted = true;
                    break;
                }
                if (o.verdict == Verdict::Unknown)
                    open = true;
                trees.push_back(o.tree);
            }
            if (!refuted) {
                if (!open && active_.accept_bounded_omega)
                    return found(make_node(Rule::StarRightBounded, conclusion, trees, std::nullopt, std::nullopt,
                                           active_.star_unfold_cap));
                unknown = true;
            }
        }
    }

    return remember(Outcome{unknown ? Verdict::Unknown : Verdict::NotDerivable, nullptr});
}

ProofResult derive(const Sequent& s, Calculus calc, const SearchConfig& cfg) { return Prover(calc, cfg).prove(s); }

Sequent invert_product(const Sequent& s, EdgeId e) {
    const Type& t = s.antecedent.label(e);
    if (t.kind() != TypeKind::Mul)
        throw Error(ErrorCode::InvalidArgument, "edge is not labeled by a product");
    return Sequent{replace(s.antecedent, e, t.body()), s.succedent};
}

Sequent invert_rdiv(const Sequent& s) {
    if (s.succedent.kind() != TypeKind::Div)
        throw Error(ErrorCode::InvalidArgument, "succedent is not a division");
    return Sequent{replace(s.succedent.denominator(), s.succedent.dollar_edge(), s.antecedent),
                   s.succedent.numerator()};
}

CutResult cut_compose(const Derivation& left, const Derivation& right, EdgeId e0, Calculus calc,
                      const SearchConfig& cfg) {
    const Hypergraph& outer = right.conclusion.antecedent;
    if (!(outer.label(e0) == left.conclusion.succedent))
        throw Error(ErrorCode::InvalidArgument, "cut edge label differs from the cut formula");
    CutResult out{Sequent{replace(outer, e0, left.conclusion.antecedent), right.conclusion.succedent},
                  Verdict::Unknown, nullptr};
    auto res = derive(out.composed, calc, cfg);
    out.verdict = res.verdict;
    out.tree = res.tree;
    return out;
}

CutResult mix_compose(const Derivation& left, const Derivation& right, const std::vector<EdgeId>& copies,
                      const SearchConfig& cfg) {
    const Type& bang = left.conclusion.succedent;
    if (bang.kind() != TypeKind::Bang || !left.conclusion.antecedent.zero_rank())
        throw Error(ErrorCode::InvalidArgument, "mix needs a zero-rank H -> !C");
    Hypergraph rest = right.conclusion.antecedent;
    std::vector<EdgeId> sorted = copies;
    std::sort(sorted.rbegin(), sorted.rend());
    for (EdgeId e : sorted) {
        if (!(rest.label(e) == bang))
            throw Error(ErrorCode::InvalidArgument, "mix copy is not labeled by the cut formula");
        rest = rest.without_edge(e);
    }
    CutResult out{Sequent{disjoint_union(rest, left.conclusion.antecedent), right.conclusion.succedent},
                  Verdict::Unknown, nullptr};
    auto res = derive(out.composed, Calculus::HMEL0, cfg);
    out.verdict = res.verdict;
    out.tree = res.tree;
    return out;
}

} // namespace hyperlam
