#include <doctest.h>

#include "hyperlam/encodings.hpp"
#include "samples.hpp"

using namespace hyperlam;
using namespace samples;

namespace {

Hypergraph floating(std::vector<Type> labels) {
    std::vector<Edge> edges;
    for (auto& l : labels)
        edges.push_back(Edge{std::move(l), {}});
    return Hypergraph(0, std::move(edges), {});
}

DerivationPtr node(Rule rule, Sequent s, std::vector<DerivationPtr> premises, std::optional<EdgeId> edge = {},
                   std::optional<EdgeId> premise_edge = {}) {
    return std::make_shared<const Derivation>(Derivation{rule, std::move(s), std::move(premises), edge, premise_edge, 0});
}

DerivationPtr axiom(const Type& a) { return node(Rule::Axiom, Sequent{Hypergraph::handle_filled(a), a}, {}); }

} // namespace

TEST_CASE("axiom and mismatch") {
    auto ax = derive(Sequent{Hypergraph::handle_filled(p()), p()}, Calculus::HL);
    REQUIRE(ax.verdict == Verdict::Found);
    CHECK(ax.tree->rule == Rule::Axiom);
    CHECK(ax.tree->premises.empty());
    CHECK(derive(Sequent{Hypergraph::handle_filled(p()), Type::prim("q", 2)}, Calculus::HL).verdict ==
          Verdict::NotDerivable);
}

TEST_CASE("fork rule as a type") {
    auto rho = fork_rule();
    Type expected = Type::div(Type::mul(rho.left.with_ext({0, 1, 2})),
                              rho.right.with_ext({0, 1, 2}).with_edge(Edge{Type::dollar(0), {}}));
    Type got = dpo_type(rho);
    CHECK(got == expected);
    CHECK(got.rank() == 0);
    CHECK(got.denominator().edge_count() == 3);
}

TEST_CASE("fork sequent proof") {
    Prover hl(Calculus::HL);
    auto res = hl.prove(fork_sequent());
    REQUIRE(res.verdict == Verdict::Found);
    const Derivation& d = *res.tree;
    CHECK(d.rule == Rule::DivLeft);
    CHECK(count_rule(d, Rule::DivLeft) == 1);
    CHECK(count_rule(d, Rule::MulLeft) == 1);
    CHECK(count_rule(d, Rule::MulRight) == 1);
    CHECK(count_rule(d, Rule::Axiom) == 5);
    CHECK(tree_size(d) == 8);
    CHECK(check_tree(d));
    CHECK(hl.metric_checks() >= 3);

    auto tampered = std::make_shared<Derivation>(d);
    tampered->edge = 0;
    CHECK_FALSE(check_tree(*tampered));
}

TEST_CASE("hand-built fork proof") {
    Sequent s = fork_sequent();
    Type num = Type::mul(fork_rule().left.with_ext({0, 1, 2}));
    Hypergraph main(3, {Edge{p(), {1, 2}}, Edge{num, {0, 1, 2}}}, {});
    auto inner = node(Rule::MulRight, Sequent{fork_source(), s.succedent}, {axiom(l()), axiom(r()), axiom(p())});
    auto unfold = node(Rule::MulLeft, Sequent{main, s.succedent}, {inner}, 1);
    auto root = node(Rule::DivLeft, s, {unfold, axiom(t()), axiom(f())}, 3, 1);
    std::string why;
    CHECK_MESSAGE(check_tree(*root, &why), why);
    auto wrong = node(Rule::DivLeft, s, {unfold, axiom(f()), axiom(t())}, 3, 1);
    CHECK_FALSE(check_tree(*wrong));
}

TEST_CASE("product and division matching") {
    auto s = fork_sequent();
    Hypergraph den = s.antecedent.label(3).denominator();
    std::vector<Type> wanted;
    for (EdgeId d = 0; d < den.edge_count(); ++d)
        if (den.label(d).kind() != TypeKind::Dollar)
            wanted.push_back(den.label(d));
    auto own_labels = [](const std::vector<Hypergraph>& parts, const std::vector<Type>& labels) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!iso(parts[i], Hypergraph::handle_filled(labels[i])))
                return false;
        return true;
    };
    auto splits = match_divisor(s.antecedent, 3);
    int edgewise = 0;
    for (const auto& sp : splits) {
        CHECK(sp.parts.size() == wanted.size());
        if (own_labels(sp.parts, wanted)) {
            ++edgewise;
            REQUIRE(sp.main.edge_count() == 2);
            CHECK(sp.main.label(sp.numerator_edge) == s.antecedent.label(3).numerator());
            CHECK(sp.main.label(1 - sp.numerator_edge) == p());
        }
    }
    CHECK(edgewise == 1);

    auto triangle = fork_source();
    std::vector<Type> tri_labels;
    for (EdgeId e = 0; e < triangle.edge_count(); ++e)
        tri_labels.push_back(triangle.label(e));
    int direct = 0;
    for (const auto& parts : match_product(triangle, triangle))
        direct += own_labels(parts, tri_labels);
    CHECK(direct == 1);
    auto single = match_product(triangle, Hypergraph::handle_filled(Type::mul(triangle)).with_ext({}));
    REQUIRE(single.size() == 1);
    CHECK(iso(single[0][0], triangle));
}

TEST_CASE("memo hits follow the edge order of equal types") {
    Type u = Type::prim("u", 0), v = Type::prim("v", 0);
    Type pq = Type::mul(floating({u, v}));
    Hypergraph ante = floating({u, v, u, v, S()});
    Type forward = Type::mul(floating({pq, pq, S()}));
    Type backward = Type::mul(floating({S(), pq, pq}));
    REQUIRE(forward == backward);
    Prover hl(Calculus::HL);
    auto first = hl.prove(Sequent{ante, forward});
    REQUIRE(first.verdict == Verdict::Found);
    auto second = hl.prove(Sequent{ante, backward});
    REQUIRE(second.verdict == Verdict::Found);
    std::string why;
    CHECK_MESSAGE(check_tree(*first.tree, &why), why);
    CHECK_MESSAGE(check_tree(*second.tree, &why), why);
    CHECK(second.tree->conclusion.succedent.body() == backward.body());
}

TEST_CASE("trivial division") {
    // N ÷ $• with an empty context: the premise relabels the edge.
    Type n = Type::prim("n", 0);
    Type d = Type::div(n, floating({Type::dollar(0)}));
    Hypergraph g = floating({d, S()});
    auto splits = match_divisor(g, 0);
    REQUIRE(splits.size() == 1);
    CHECK(iso(splits[0].main, floating({n, S()})));
    CHECK(splits[0].parts.empty());
}

TEST_CASE("inversions") {
    auto s = fork_sequent();
    auto norm = normalize(node_edge_grammar());
    auto lex = lg_hmel(norm);
    Type ta = norm.proxies.at("a");
    Hypergraph th = relabel(two_loops_graph(), [&](EdgeId) { return ta; });
    Sequent inv = invert_rdiv(Sequent{th, lex.start});
    std::vector<Type> banged;
    for (const auto* r : norm.nonterminal_rules())
        banged.push_back(Type::bang(dpo_type(*r)));
    CHECK(iso(inv.antecedent, disjoint_union(th, floating(banged))));
    CHECK(inv.succedent == S());

    Hypergraph handle = Hypergraph::handle_filled(Type::mul(fork_source())).with_ext({});
    Sequent ps{handle, Type::mul(fork_source())};
    CHECK(iso(invert_product(ps, 0).antecedent, fork_source()));
    CHECK_THROWS_AS(invert_product(s, 0), Error);
    CHECK_THROWS_AS(invert_rdiv(s), Error);
}

TEST_CASE("cut with an axiom") {
    Prover hl(Calculus::HL);
    auto right = hl.prove(fork_sequent());
    REQUIRE(right.verdict == Verdict::Found);
    auto c = cut_compose(*axiom(p()), *right.tree, 2, Calculus::HL);
    CHECK(iso(c.composed.antecedent, fork_sequent().antecedent));
    CHECK(c.verdict == Verdict::Found);
}

TEST_CASE("mix with two copies") {
    Type bs = Type::bang(S());
    auto left = derive(Sequent{floating({bs}), bs}, Calculus::HMEL0);
    REQUIRE(left.verdict == Verdict::Found);
    auto right = derive(Sequent{floating({bs, bs}), Type::mul(floating({S(), S()}))}, Calculus::HMEL0);
    REQUIRE(right.verdict == Verdict::Found);
    auto m = mix_compose(*left.tree, *right.tree, {0, 1});
    CHECK(m.composed.antecedent.edge_count() == 1);
    CHECK(m.verdict == Verdict::Found);
    CHECK(count_rule(*m.tree, Rule::Contraction) + count_rule(*m.tree, Rule::BangLeft) >= 2);
    CHECK(check_tree(*m.tree));
}

TEST_CASE("modal calculi reject foreign connectives") {
    Type bs = Type::bang(S());
    CHECK_THROWS_AS(derive(Sequent{floating({bs}), S()}, Calculus::HL), Error);
    Type st = Type::star(floating_template(), S());
    CHECK_THROWS_AS(derive(Sequent{floating({st}), S()}, Calculus::HMEL0), Error);
}

TEST_CASE("star rules") {
    Type st = Type::star(floating_template(), S());
    auto two = Type::mul(floating({S(), S()}));
    auto left = derive(Sequent{floating({st}), two}, Calculus::HLStar);
    REQUIRE(left.verdict == Verdict::Found);
    CHECK(left.tree->rule == Rule::StarLeft);
    CHECK(left.tree->n == 2);
    CHECK(check_tree(*left.tree));

    SearchConfig cfg;
    Type wrapped = Type::star(floating_template(), Type::mul(floating({S()})));
    CHECK(derive(Sequent{floating({st}), wrapped}, Calculus::HLStar, cfg).verdict == Verdict::Unknown);
    cfg.accept_bounded_omega = true;
    auto omega = derive(Sequent{floating({st}), wrapped}, Calculus::HLStar, cfg);
    REQUIRE(omega.verdict == Verdict::Found);
    CHECK(check_tree(*omega.tree));
}

TEST_CASE("types of the node-edge grammar") {
    auto norm = normalize(node_edge_grammar());
    Type x1 = dpo_type(norm.rule("r1"));
    CHECK(x1 == Type::div(Type::mul(floating({S()})), floating({Type::dollar(0)})));
    Type x2 = dpo_type(norm.rule("r2"));
    CHECK_FALSE(x1 == x2);
    Type x3 = dpo_type(norm.rule("r3"));
    Type ta = norm.proxies.at("a");
    CHECK(x3 == Type::div(Type::mul(Hypergraph(2, {}, {0, 1})),
                          Hypergraph(2, {Edge{ta, {0, 1}}, Edge{Type::dollar(0), {}}}, {0, 1})));
    CHECK_THROWS_AS(dpo_type(norm.rule("term_a")), Error);
}

TEST_CASE("bang lexicon") {
    auto norm = normalize(node_edge_grammar());
    auto lex = lg_hmel(norm);
    CHECK(lex.calculus == Calculus::HMEL0);
    CHECK(lex.start.rank() == 0);
    REQUIRE(lex.start.kind() == TypeKind::Div);
    CHECK(lex.start.numerator() == S());
    int bangs = 0;
    for (const auto& e : lex.start.denominator().edges())
        bangs += e.label.kind() == TypeKind::Bang;
    CHECK(bangs == 3);
    CHECK(lex.start.denominator().edge_count() == 4);
    REQUIRE(lex.types_for(a()).size() == 1);
    CHECK(lex.types_for(a())[0] == norm.proxies.at("a"));

    DpoGrammar bare;
    bare.nonterminals = {S()};
    bare.terminals = {a()};
    auto empty = lg_hmel(normalize(bare));
    CHECK(empty.start == Type::div(S(), floating({Type::dollar(0)})));

    DpoGrammar ranked = bare;
    ranked.start = Type::prim("R", 1);
    ranked.nonterminals = {ranked.start};
    CHECK_THROWS_AS(lg_hmel(normalize(ranked)), Error);
}

TEST_CASE("bounded lexicon sizes") {
    auto norm = normalize(node_edge_grammar());
    int expected[] = {1, 4, 10, 20};
    for (int c = 0; c <= 3; ++c)
        CHECK(static_cast<int>(lg_c(norm, c).types_for(a()).size()) == expected[c]);
    auto zero = lg_c(norm, 0).types_for(a());
    CHECK(zero[0] == proxy_product(norm, {}));
    CHECK_THROWS_AS(lg_for_lc(norm, 0), Error);
    CHECK(lg_for_lc(norm, 3).types_for(a()).size() == 10);
}

TEST_CASE("bounded lexicon membership") {
    auto norm = normalize(node_edge_grammar());
    auto lex = lg_c(norm, 2);
    MemberOptions opts;
    opts.collect_all = true;
    auto res = member_hl(lex, two_loops_graph(), opts);
    REQUIRE(res.verdict == Verdict::Found);
    std::vector<Type> expected{proxy_product(norm, {"r2", "r2"}), proxy_product(norm, {"r3", "r3"}),
                            proxy_product(norm, {"r1", "r3"})};
    bool seen = false;
    for (const auto& w : res.witnesses) {
        seen = seen || w.assignment == expected;
        CHECK(check_tree(*w.tree));
    }
    CHECK(seen);

    auto c0 = lg_c(norm, 0);
    CHECK(member_hl(c0, Hypergraph(2, {Edge{a(), {0, 1}}}, {})).verdict == Verdict::NotDerivable);
    CHECK(member_hl(lex, Hypergraph::discrete(0)).verdict == Verdict::NotDerivable);
}

TEST_CASE("replay into HL") {
    DpoGrammar gr;
    gr.nonterminals = {l(), r(), p(), t(), f(), S()};
    gr.start = S();
    gr.rules = {fork_rule()};
    auto ms = find_matches(fork_source(), fork_rule());
    REQUIRE(ms.size() == 1);
    DpoDerivation d{fork_source(), {DpoStep{"rho", ms[0], apply(fork_source(), fork_rule(), ms[0])}}};
    auto base = derive(Sequent{fork_source(), Type::mul(fork_source())}, Calculus::HL);
    REQUIRE(base.verdict == Verdict::Found);
    auto tree = hl_witness_from_dpo(gr, d, base.tree);
    CHECK(check_tree(*tree));
    CHECK(iso(tree->conclusion.antecedent, fork_sequent().antecedent));
    CHECK(count_rule(*tree, Rule::DivLeft) == 1);
    CHECK(count_rule(*tree, Rule::MulLeft) == 1);
    CHECK(count_rule(*tree, Rule::MulRight) == 1);

    auto same = hl_witness_from_dpo(gr, DpoDerivation{fork_source(), {}}, base.tree);
    CHECK(same->conclusion.antecedent == base.tree->conclusion.antecedent);
}

TEST_CASE("bang membership") {
    auto norm = normalize(node_edge_grammar());
    auto lex = lg_hmel(norm);
    auto res = member_hmel(norm, lex, two_loops_graph());
    REQUIRE(res.verdict == Verdict::Found);
    CHECK(res.route == "replay");
    REQUIRE(res.witnesses.size() == 1);
    CHECK(check_tree(*res.witnesses[0].tree));
    CHECK_THROWS_AS(member_hmel(norm, lex, Hypergraph::handle_filled(S())), Error);
}

TEST_CASE("lexicon validation") {
    LexGrammar g;
    g.alphabet = {a()};
    g.lexicon = {LexEntry{a(), Type::prim("T", 1)}};
    CHECK_THROWS_AS(validate(g), Error);
    g.lexicon = {LexEntry{Type::prim("b", 2), Type::prim("T", 2)}};
    CHECK_THROWS_AS(validate(g), Error);
}
