// Command-line front end. One JSON object on stdout, diagnostics on stderr.
// Exit codes: 0 positive, 1 negative, 2 unknown or over budget, 3 input error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "hyperlam/generate.hpp"
#include "hyperlam/io.hpp"

using namespace hyperlam;
using io::json;

namespace {

enum Exit { kPositive = 0, kNegative = 1, kUnknown = 2, kInputError = 3 };

struct Options {
    std::vector<std::string> inputs;
    std::string output;
    std::string rule;
    std::string calculus = "hl";
    std::string witness;
    std::string dot;
    std::string grammar;
    int c = 1;
    int max_steps = 8;
    int max_nodes = 3;
    int max_edges = 3;
    int max_depth = 0;
    int bang_copies = 0;
    int star_cap = 3;
    std::size_t state_cap = 200000;
    bool count_original = false;
    bool accept_omega = false;
    bool all = false;
};

int emit(const json& result, int code) {
    std::cout << result.dump() << "\n";
    return code;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
    out << text;
}

// Conversion results go to -o when given, otherwise to stdout.
int emit_document(const Options& o, const std::string& kind, const json& body) {
    json doc = io::document(kind, body);
    if (o.output.empty())
        return emit(doc, kPositive);
    io::write_file(o.output, doc);
    return emit(json{{"kind", kind}, {"written", o.output}}, kPositive);
}

SearchConfig search_config(const Options& o) {
    SearchConfig cfg;
    cfg.max_depth = o.max_depth;
    cfg.max_bang_copies = o.bang_copies;
    cfg.star_unfold_cap = o.star_cap;
    cfg.state_cap = o.state_cap;
    cfg.accept_bounded_omega = o.accept_omega;
    return cfg;
}

Calculus calculus_of(const std::string& s) {
    for (Calculus c : {Calculus::HL, Calculus::HMEL0, Calculus::HLStar})
        if (s == to_string(c))
            return c;
    throw Error(ErrorCode::InvalidArgument, "unknown calculus \"" + s + "\"");
}

int verdict_code(Verdict v) {
    switch (v) {
    case Verdict::Found: return kPositive;
    case Verdict::NotDerivable: return kNegative;
    case Verdict::Unknown: return kUnknown;
    }
    return kUnknown;
}

json rule_counts(const Derivation& d) {
    json out = json::object();
    for (Rule r : {Rule::Axiom, Rule::DivLeft, Rule::DivRight, Rule::MulLeft, Rule::MulRight, Rule::BangLeft,
                   Rule::BangRight, Rule::Weakening, Rule::Contraction, Rule::Cut, Rule::StarLeft,
                   Rule::StarRightBounded})
        if (int n = count_rule(d, r))
            out[to_string(r)] = n;
    return out;
}

void save_tree(const Options& o, const Derivation& d) {
    if (!o.witness.empty())
        io::write_file(o.witness, io::document("derivation", io::to_json(d)));
    if (!o.dot.empty())
        write_text(o.dot, io::to_dot(d));
}

void save_dpo(const Options& o, const DpoDerivation& d) {
    if (!o.witness.empty())
        io::write_file(o.witness, io::document("dpo-derivation", io::to_json(d)));
    if (!o.dot.empty())
        write_text(o.dot, io::to_dot(d));
}

json steps_json(const DpoDerivation& d) {
    json out = json::array();
    for (const auto& s : d.steps)
        out.push_back(s.rule);
    return out;
}

DpoRule pick_rule(const Options& o, const std::string& path, io::Workspace& ws) {
    json doc = io::read_file(path);
    if (io::kind_of(doc) == "rule")
        return io::rule_from_json(doc, ws);
    DpoGrammar gr = io::grammar_from_json(doc, ws);
    if (o.rule.empty())
        throw Error(ErrorCode::InvalidArgument, "--rule is required with a grammar document");
    return gr.rule(o.rule);
}

DpoGrammar normalized(const DpoGrammar& gr) { return gr.normalized ? gr : normalize(gr); }

int cmd_iso(const Options& o) {
    io::Workspace ws;
    Hypergraph a = io::load_hypergraph(o.inputs.at(0), ws);
    Hypergraph b = io::load_hypergraph(o.inputs.at(1), ws);
    auto m = isomorphic(a, b);
    json out{{"isomorphic", m.has_value()}};
    if (m)
        out["morphism"] = json{{"nodes", m->node_map}, {"edges", m->edge_map}};
    return emit(out, m ? kPositive : kNegative);
}

int cmd_dpo_apply(const Options& o) {
    io::Workspace ws;
    Hypergraph g = io::load_hypergraph(o.inputs.at(0), ws);
    DpoRule r = pick_rule(o, o.inputs.at(1), ws);
    json results = json::array();
    for (const auto& ctx : find_matches(g, r))
        results.push_back(io::to_json(apply(g, r, ctx)));
    json out{{"rule", r.name}, {"matches", results.size()}, {"results", results}};
    return emit(out, results.empty() ? kNegative : kPositive);
}

int dpo_result(const Options& o, const DpoSearchResult& res, json out) {
    out["states"] = res.states;
    switch (res.status) {
    case SearchStatus::Found:
        out["result"] = "found";
        out["steps"] = res.derivation->steps.size();
        out["rules"] = steps_json(*res.derivation);
        save_dpo(o, *res.derivation);
        return emit(out, kPositive);
    case SearchStatus::NotFound:
        out["result"] = "not-found";
        return emit(out, kNegative);
    case SearchStatus::BudgetExceeded:
        out["result"] = "budget-exceeded";
        std::cerr << "state cap reached\n";
        return emit(out, kUnknown);
    }
    return kUnknown;
}

int cmd_dpo_derive(const Options& o) {
    io::Workspace ws;
    DpoGrammar gr = io::load_grammar(o.inputs.at(0), ws);
    Hypergraph h = io::load_hypergraph(o.inputs.at(1), ws);
    return dpo_result(o, derive_search(gr, h, o.max_steps, o.state_cap), json{{"max_steps", o.max_steps}});
}

int cmd_dpo_member(const Options& o) {
    io::Workspace ws;
    DpoGrammar gr = io::load_grammar(o.inputs.at(0), ws);
    Hypergraph h = io::load_hypergraph(o.inputs.at(1), ws);
    LcOptions lc{o.count_original, o.state_cap};
    json out{{"c", o.c}, {"bound", o.c * h.edge_count()}, {"normalized_steps", !o.count_original}};
    return dpo_result(o, lc_member(gr, h, o.c, lc), out);
}

int cmd_normalize(const Options& o) {
    io::Workspace ws;
    DpoGrammar gr = io::load_grammar(o.inputs.at(0), ws);
    return emit_document(o, "grammar", io::to_json(normalize(gr)));
}

int cmd_encode(const std::string& what, const Options& o) {
    io::Workspace ws;
    DpoGrammar gr = io::load_grammar(o.inputs.at(0), ws);
    if (what == "dpo-type") {
        if (o.rule.empty())
            throw Error(ErrorCode::InvalidArgument, "--rule is required");
        return emit_document(o, "type", io::to_json(dpo_type(gr.rule(o.rule))));
    }
    DpoGrammar norm = normalized(gr);
    if (what == "lg-hmel")
        return emit_document(o, "lexicon", io::to_json(lg_hmel(norm)));
    if (what == "lg-star")
        return emit_document(o, "lexicon", io::to_json(lg_star(norm)));
    return emit_document(o, "lexicon", io::to_json(lg_c(norm, o.c)));
}

int cmd_prove(const Options& o) {
    io::Workspace ws;
    Sequent s = io::load_sequent(o.inputs.at(0), ws);
    Prover prover(calculus_of(o.calculus), search_config(o));
    ProofResult res = prover.prove(s);
    json out{{"calculus", o.calculus}, {"verdict", to_string(res.verdict)}, {"states", res.states}};
    if (res.tree) {
        std::string why;
        out["checked"] = check_tree(*res.tree, &why);
        out["rules"] = rule_counts(*res.tree);
        out["size"] = tree_size(*res.tree);
        out["height"] = tree_height(*res.tree);
        save_tree(o, *res.tree);
    }
    if (!res.diagnostics.empty())
        std::cerr << res.diagnostics << "\n";
    return emit(out, verdict_code(res.verdict));
}

int cmd_member(const Options& o) {
    io::Workspace ws;
    LexGrammar g = io::load_lexicon(o.inputs.at(0), ws);
    Hypergraph h = io::load_hypergraph(o.inputs.at(1), ws);
    MemberResult res;
    if (!o.grammar.empty() && g.calculus == Calculus::HMEL0) {
        DpoGrammar norm = normalized(io::load_grammar(o.grammar, ws));
        HmelOptions opts;
        opts.replay_state_cap = o.state_cap;
        opts.search = search_config(o);
        res = member_hmel(norm, g, h, opts);
    } else {
        res = member_hl(g, h, MemberOptions{search_config(o), o.all});
    }
    json out{{"calculus", to_string(g.calculus)},
             {"verdict", res.verdict == Verdict::NotDerivable ? "not-member" : to_string(res.verdict)},
             {"route", res.route},
             {"assignments", res.assignments},
             {"pruned", res.pruned},
             {"witnesses", res.witnesses.size()}};
    if (!res.witnesses.empty()) {
        const auto& w = res.witnesses.front();
        json types = json::array();
        for (const auto& t : w.assignment)
            types.push_back(io::to_json(t));
        out["assignment"] = types;
        out["checked"] = check_tree(*w.tree);
        save_tree(o, *w.tree);
    }
    return emit(out, verdict_code(res.verdict));
}

int cmd_enumerate(const Options& o) {
    io::Workspace ws;
    DpoGrammar gr = io::load_grammar(o.inputs.at(0), ws);
    auto lang = enumerate_language(gr, o.max_steps, o.max_nodes, o.max_edges, o.state_cap);
    json graphs = json::array();
    for (const auto& [form, g] : lang)
        graphs.push_back(io::to_json(g));
    return emit(json{{"count", lang.size()}, {"graphs", graphs}}, kPositive);
}

int cmd_crosscheck(const Options& o) {
    io::Workspace ws;
    DpoGrammar gr = io::load_grammar(o.inputs.at(0), ws);
    DpoGrammar norm = normalized(gr);
    auto graphs = all_graphs(gr.terminals, o.max_nodes, o.max_edges);
    DpoExplorer explorer(norm, o.state_cap);
    Prover prover(Calculus::HL, search_config(o));
    json discrepancies = json::array(), members = json::object();
    bool unknown = false;
    for (int c = 1; c <= o.c; ++c) {
        LexGrammar lg = lg_for_lc(norm, c);
        int accepted = 0;
        for (const auto& h : graphs) {
            auto dpo = lc_member(explorer, h, c);
            if (dpo.status == SearchStatus::BudgetExceeded) {
                unknown = true;
                continue;
            }
            bool in_dpo = dpo.status == SearchStatus::Found;
            auto hl = member_hl(lg, h, prover, false);
            bool in_hl = hl.verdict == Verdict::Found;
            accepted += in_dpo;
            if (in_dpo != in_hl)
                discrepancies.push_back(json{{"c", c}, {"graph", io::to_json(h)}, {"dpo", in_dpo},
                                             {"hl", to_string(hl.verdict)}});
        }
        members[std::to_string(c)] = accepted;
    }
    json out{{"graphs", graphs.size()}, {"members", members}, {"discrepancies", discrepancies}};
    if (!discrepancies.empty())
        return emit(out, kNegative);
    if (unknown)
        std::cerr << "state cap reached for some graphs\n";
    return emit(out, unknown ? kUnknown : kPositive);
}

int cmd_dot(const Options& o) {
    io::Workspace ws;
    json doc = io::read_file(o.inputs.at(0));
    std::string kind = io::kind_of(doc);
    std::string text;
    if (kind == "hypergraph")
        text = io::to_dot(io::hypergraph_from_json(doc, ws));
    else if (kind == "sequent")
        text = io::to_dot(io::sequent_from_json(doc, ws).antecedent);
    else if (kind == "derivation")
        text = io::to_dot(*io::derivation_from_json(doc, ws));
    else if (kind == "dpo-derivation")
        text = io::to_dot(io::dpo_derivation_from_json(doc, ws));
    else
        throw Error(ErrorCode::InvalidArgument, "no drawing for a " + kind + " document");
    if (!o.output.empty()) {
        write_text(o.output, text);
        return emit(json{{"kind", kind}, {"written", o.output}}, kPositive);
    }
    return emit(json{{"kind", kind}, {"dot", text}}, kPositive);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* cap = std::getenv("HYPERLAM_STATE_CAP"))
        o.state_cap = std::strtoull(cap, nullptr, 10);

    CLI::App app{"Hypergraph grammars, DPO rewriting and hypergraph Lambek calculi"};
    app.require_subcommand(1);
    auto inputs = [&](CLI::App* cmd, const char* name, int n, const char* what = "") {
        cmd->add_option(name, o.inputs, what)->required()->expected(n)->check(CLI::ExistingFile);
    };
    auto budgets = [&](CLI::App* cmd) {
        cmd->add_option("--state-cap", o.state_cap)->check(CLI::PositiveNumber);
    };
    auto search = [&](CLI::App* cmd) {
        budgets(cmd);
        cmd->add_option("--max-depth", o.max_depth)->check(CLI::PositiveNumber);
        cmd->add_option("--bang-copies", o.bang_copies)->check(CLI::PositiveNumber);
        cmd->add_option("--star-cap", o.star_cap)->check(CLI::NonNegativeNumber);
        cmd->add_flag("--accept-bounded-omega", o.accept_omega);
    };
    auto witness = [&](CLI::App* cmd) {
        cmd->add_option("--emit-witness", o.witness, "write the witness as JSON");
        cmd->add_option("--emit-dot", o.dot, "write the witness as DOT");
    };

    std::function<int()> run;
    auto bind = [&](CLI::App* cmd, std::function<int()> f) { cmd->callback([&run, f] { run = f; }); };

    auto* iso = app.add_subcommand("iso", "isomorphism of two hypergraphs");
    inputs(iso, "graphs", 2);
    bind(iso, [&] { return cmd_iso(o); });

    auto* dpo = app.add_subcommand("dpo", "double-pushout rewriting");
    dpo->require_subcommand(1);
    auto* apply = dpo->add_subcommand("apply", "apply one rule at every match");
    inputs(apply, "inputs", 2, "GRAPH then a RULE or GRAMMAR document");
    apply->add_option("--rule", o.rule);
    bind(apply, [&] { return cmd_dpo_apply(o); });
    auto* derive = dpo->add_subcommand("derive", "search a derivation from the start symbol");
    inputs(derive, "inputs", 2, "GRAMMAR GRAPH");
    derive->add_option("--max-steps", o.max_steps)->check(CLI::PositiveNumber);
    budgets(derive);
    witness(derive);
    bind(derive, [&] { return cmd_dpo_derive(o); });
    auto* dmember = dpo->add_subcommand("member", "membership in the c-bounded language");
    inputs(dmember, "inputs", 2, "GRAMMAR GRAPH");
    dmember->add_option("--c", o.c)->check(CLI::PositiveNumber);
    dmember->add_flag("--count-original-steps", o.count_original);
    budgets(dmember);
    witness(dmember);
    bind(dmember, [&] { return cmd_dpo_member(o); });

    auto* norm = app.add_subcommand("normalize", "add proxy nonterminals for terminals");
    inputs(norm, "grammar", 1);
    norm->add_option("-o,--output", o.output);
    bind(norm, [&] { return cmd_normalize(o); });

    auto* encode = app.add_subcommand("encode", "encode a DPO grammar as types");
    encode->require_subcommand(1);
    for (const char* what : {"dpo-type", "lg-hmel", "lg-c", "lg-star"}) {
        auto* cmd = encode->add_subcommand(what);
        inputs(cmd, "grammar", 1);
        cmd->add_option("-o,--output", o.output);
        if (std::string(what) == "dpo-type")
            cmd->add_option("--rule", o.rule)->required();
        if (std::string(what) == "lg-c")
            cmd->add_option("--c", o.c)->check(CLI::NonNegativeNumber);
        std::string name = what;
        bind(cmd, [&o, name] { return cmd_encode(name, o); });
    }

    auto* prove = app.add_subcommand("prove", "backward proof search");
    inputs(prove, "sequent", 1);
    prove->add_option("--calculus", o.calculus)->check(CLI::IsMember({"hl", "hmel0", "hl-star"}));
    search(prove);
    witness(prove);
    bind(prove, [&] { return cmd_prove(o); });

    auto* member = app.add_subcommand("member", "membership in the language of a type grammar");
    inputs(member, "inputs", 2, "LEXICON GRAPH");
    member->add_option("--grammar", o.grammar, "DPO grammar for the replay route of hmel0 lexicons");
    member->add_flag("--all", o.all, "collect every witness");
    search(member);
    witness(member);
    bind(member, [&] { return cmd_member(o); });

    auto* enumerate = app.add_subcommand("enumerate", "terminal graphs within bounds");
    inputs(enumerate, "grammar", 1);
    enumerate->add_option("--max-steps", o.max_steps)->check(CLI::PositiveNumber);
    enumerate->add_option("--max-nodes", o.max_nodes)->check(CLI::NonNegativeNumber);
    enumerate->add_option("--max-edges", o.max_edges)->check(CLI::NonNegativeNumber);
    budgets(enumerate);
    bind(enumerate, [&] { return cmd_enumerate(o); });

    auto* cross = app.add_subcommand("crosscheck", "compare type-grammar and bounded DPO membership");
    inputs(cross, "grammar", 1);
    cross->add_option("--c", o.c)->check(CLI::PositiveNumber);
    cross->add_option("--max-nodes", o.max_nodes)->check(CLI::NonNegativeNumber);
    cross->add_option("--max-edges", o.max_edges)->check(CLI::NonNegativeNumber);
    budgets(cross);
    bind(cross, [&] { return cmd_crosscheck(o); });

    auto* dot = app.add_subcommand("dot", "Graphviz rendering");
    inputs(dot, "document", 1);
    dot->add_option("-o,--output", o.output);
    bind(dot, [&] { return cmd_dot(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }
    try {
        return run();
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded ? kUnknown : kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
}
