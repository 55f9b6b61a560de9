#include "hyperlam/io.hpp"

#include <fstream>
#include <sstream>

#include "hyperlam/template.hpp"

namespace hyperlam::io {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& what) {
    throw Error(ErrorCode::ParseError, (at.empty() ? std::string("/") : at) + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& at) {
    if (!j.is_object())
        fail(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(at, std::string("missing \"") + key + "\"");
    return *it;
}

std::string id_of(const json& j, const std::string& at) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    fail(at, "expected a string or integer id");
}

int int_of(const json& j, const std::string& at) {
    if (!j.is_number_integer())
        fail(at, "expected an integer");
    return j.get<int>();
}

std::string string_of(const json& j, const std::string& at) {
    if (!j.is_string())
        fail(at, "expected a string");
    return j.get<std::string>();
}

const json& array_of(const json& j, const std::string& at) {
    if (!j.is_array())
        fail(at, "expected an array");
    return j;
}

std::string node_name(NodeId v) { return "n" + std::to_string(v); }
std::string edge_name(EdgeId e) { return "e" + std::to_string(e); }

struct ParsedGraph {
    Hypergraph graph;
    std::map<std::string, NodeId> nodes;
    std::map<std::string, EdgeId> edges;
};

Type parse_type(const json& j, Workspace& ws, const std::string& at);

Type prim_label(const std::string& name, int rank, Workspace& ws, const std::string& at) {
    if (ws.strict && !ws.alphabet.rank_of(name))
        throw Error(ErrorCode::UnknownLabel, at + ": label \"" + name + "\" is not registered");
    ws.alphabet.add(name, rank);
    try {
        return Type::prim(name, rank);
    } catch (const Error& e) {
        fail(at, e.what());
    }
}

ParsedGraph parse_graph(const json& j, Workspace& ws, const std::string& at,
                        std::optional<std::string> dollar = std::nullopt) {
    if (!j.is_object())
        fail(at, "expected a hypergraph object");
    ParsedGraph out;
    if (j.contains("nodes")) {
        const auto& nodes = array_of(j["nodes"], at + "/nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            std::string id = id_of(nodes[i], at + "/nodes/" + std::to_string(i));
            if (!out.nodes.emplace(id, static_cast<NodeId>(out.nodes.size())).second)
                fail(at + "/nodes/" + std::to_string(i), "duplicate node id \"" + id + "\"");
        }
    }
    auto node = [&](const json& v, const std::string& where) {
        std::string id = id_of(v, where);
        auto it = out.nodes.find(id);
        if (it == out.nodes.end())
            throw Error(ErrorCode::UnknownNode, where + ": node \"" + id + "\"");
        return it->second;
    };
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        const auto& list = array_of(j["edges"], at + "/edges");
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string where = at + "/edges/" + std::to_string(i);
            const json& e = list[i];
            std::string id = e.contains("id") ? id_of(e["id"], where + "/id") : edge_name(static_cast<EdgeId>(i));
            if (!out.edges.emplace(id, static_cast<EdgeId>(i)).second)
                fail(where, "duplicate edge id \"" + id + "\"");
            Edge edge{Type::dollar(0), {}};
            const auto& att = array_of(field(e, "att", where), where + "/att");
            for (std::size_t k = 0; k < att.size(); ++k)
                edge.att.push_back(node(att[k], where + "/att/" + std::to_string(k)));
            int arity = static_cast<int>(edge.att.size());
            const json& label = field(e, "label", where);
            if (dollar && id == *dollar) {
                edge.label = Type::dollar(arity);
            } else if (label.is_string()) {
                edge.label = prim_label(label.get<std::string>(), arity, ws, where + "/label");
            } else {
                edge.label = parse_type(label, ws, where + "/label");
                if (edge.label.rank() != arity)
                    throw Error(ErrorCode::RankMismatch, where + ": label " + edge.label.str() + " has rank " +
                                                             std::to_string(edge.label.rank()) + " but " +
                                                             std::to_string(arity) + " attachment nodes");
            }
            edges.push_back(std::move(edge));
        }
    }
    if (dollar && !out.edges.count(*dollar))
        fail(at, "no edge with the dollar id \"" + *dollar + "\"");
    std::vector<NodeId> ext;
    if (j.contains("ext")) {
        const auto& list = array_of(j["ext"], at + "/ext");
        for (std::size_t k = 0; k < list.size(); ++k)
            ext.push_back(node(list[k], at + "/ext/" + std::to_string(k)));
    }
    out.graph = Hypergraph(static_cast<int>(out.nodes.size()), std::move(edges), std::move(ext));
    return out;
}

Type parse_type(const json& j, Workspace& ws, const std::string& at) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        auto rank = ws.alphabet.rank_of(name);
        if (!rank)
            throw Error(ErrorCode::UnknownLabel, at + ": type \"" + name + "\" has no registered rank");
        return prim_label(name, *rank, ws, at);
    }
    if (!j.is_object() || j.size() != 1)
        fail(at, "expected a type object with a single key");
    const auto& [key, body] = *j.items().begin();
    std::string where = at + "/" + key;
    try {
        if (key == "prim")
            return prim_label(string_of(field(body, "name", where), where + "/name"),
                              int_of(field(body, "rank", where), where + "/rank"), ws, where);
        if (key == "hole")
            return Type::hole(int_of(field(body, "rank", where), where + "/rank"),
                              body.contains("index") ? int_of(body["index"], where + "/index") : 0);
        if (key == "div") {
            Type num = parse_type(field(body, "num", where), ws, where + "/num");
            std::string dollar = id_of(field(body, "dollar", where), where + "/dollar");
            auto den = parse_graph(field(body, "den", where), ws, where + "/den", dollar);
            return Type::div(num, den.graph);
        }
        if (key == "mul")
            return Type::mul(parse_graph(body, ws, where).graph);
        if (key == "bang")
            return Type::bang(parse_type(body, ws, where));
        if (key == "star") {
            const json& t = field(body, "template", where);
            auto b = parse_graph(field(t, "body", where + "/template"), ws, where + "/template/body");
            auto u = parse_graph(field(t, "unit", where + "/template"), ws, where + "/template/unit");
            Type inner = parse_type(field(body, "inner", where), ws, where + "/inner");
            return Type::star(make_template(b.graph, u.graph), inner);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidType)
            fail(where, e.what());
        throw;
    }
    fail(at, "unknown type constructor \"" + key + "\"");
}

json label_json(const Type& t) {
    if (t.kind() == TypeKind::Prim)
        return t.name();
    return to_json(t);
}

json graph_json(const Hypergraph& g, std::optional<EdgeId> dollar = std::nullopt) {
    json nodes = json::array(), edges = json::array(), ext = json::array();
    for (NodeId v = 0; v < g.node_count(); ++v)
        nodes.push_back(node_name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        json att = json::array();
        for (NodeId v : g.edge(e).att)
            att.push_back(node_name(v));
        json label = dollar && *dollar == e ? json("$") : label_json(g.label(e));
        edges.push_back(json{{"id", edge_name(e)}, {"label", label}, {"att", att}});
    }
    for (NodeId v : g.ext())
        ext.push_back(node_name(v));
    return json{{"nodes", nodes}, {"edges", edges}, {"ext", ext}};
}

} // namespace

void Alphabet::add(const std::string& name, int rank) {
    auto [it, fresh] = ranks_.emplace(name, rank);
    if (!fresh && it->second != rank)
        throw Error(ErrorCode::RankMismatch, "label \"" + name + "\" used with rank " + std::to_string(rank) +
                                                 " and " + std::to_string(it->second));
}

std::optional<int> Alphabet::rank_of(const std::string& name) const {
    auto it = ranks_.find(name);
    if (it == ranks_.end())
        return std::nullopt;
    return it->second;
}

json to_json(const Hypergraph& g) { return graph_json(g); }

json to_json(const Type& t) {
    switch (t.kind()) {
    case TypeKind::Prim:
        return json{{"prim", {{"name", t.name()}, {"rank", t.rank()}}}};
    case TypeKind::Dollar:
        throw Error(ErrorCode::InvalidType, "a dollar label is not a type");
    case TypeKind::Hole:
        return json{{"hole", {{"rank", t.rank()}, {"index", t.hole_index()}}}};
    case TypeKind::Div:
        return json{{"div",
                     {{"num", to_json(t.numerator())},
                      {"den", graph_json(t.denominator(), t.dollar_edge())},
                      {"dollar", edge_name(t.dollar_edge())}}}};
    case TypeKind::Mul:
        return json{{"mul", graph_json(t.body())}};
    case TypeKind::Bang:
        return json{{"bang", to_json(t.inner())}};
    case TypeKind::Star:
        return json{{"star",
                     {{"template", {{"body", graph_json(t.tmpl().body)}, {"unit", graph_json(t.tmpl().unit)}}},
                      {"inner", to_json(t.inner())}}}};
    }
    return nullptr;
}

json to_json(const Sequent& s) { return json{{"antecedent", graph_json(s.antecedent)}, {"succedent", to_json(s.succedent)}}; }

json to_json(const Alphabet& a) {
    json labels = json::array();
    for (const auto& [name, rank] : a.entries())
        labels.push_back(json{{"name", name}, {"rank", rank}});
    return json{{"labels", labels}};
}

Hypergraph hypergraph_from_json(const json& j, Workspace& ws) { return parse_graph(j, ws, "").graph; }
Type type_from_json(const json& j, Workspace& ws) { return parse_type(j, ws, ""); }

Sequent sequent_from_json(const json& j, Workspace& ws) {
    Sequent s{parse_graph(field(j, "antecedent", ""), ws, "/antecedent").graph,
              parse_type(field(j, "succedent", ""), ws, "/succedent")};
    validate(s);
    return s;
}

Alphabet alphabet_from_json(const json& j, Workspace& ws) {
    Alphabet out;
    const auto& labels = array_of(field(j, "labels", ""), "/labels");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::string where = "/labels/" + std::to_string(i);
        std::string name = string_of(field(labels[i], "name", where), where + "/name");
        int rank = int_of(field(labels[i], "rank", where), where + "/rank");
        out.add(name, rank);
        ws.alphabet.add(name, rank);
    }
    return out;
}

namespace {

Type declared_label(const json& j, Workspace& ws, const std::string& at) {
    if (j.is_string())
        return parse_type(j, ws, at);
    if (j.is_object() && j.contains("name") && !j.contains("prim"))
        return prim_label(string_of(j["name"], at + "/name"), int_of(field(j, "rank", at), at + "/rank"), ws, at);
    return parse_type(j, ws, at);
}

json declared_json(const Type& t) {
    if (t.kind() == TypeKind::Prim)
        return json{{"name", t.name()}, {"rank", t.rank()}};
    return to_json(t);
}

std::vector<Type> label_list(const json& j, Workspace& ws, const std::string& at) {
    std::vector<Type> out;
    const auto& list = array_of(j, at);
    for (std::size_t i = 0; i < list.size(); ++i)
        out.push_back(declared_label(list[i], ws, at + "/" + std::to_string(i)));
    return out;
}

std::vector<NodeId> node_list(const json& j, const ParsedGraph& g, const std::string& at) {
    std::vector<NodeId> out;
    const auto& list = array_of(j, at);
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::string id = id_of(list[i], at + "/" + std::to_string(i));
        auto it = g.nodes.find(id);
        if (it == g.nodes.end())
            throw Error(ErrorCode::UnknownNode, at + "/" + std::to_string(i) + ": node \"" + id + "\"");
        out.push_back(it->second);
    }
    return out;
}

json name_list(const std::vector<NodeId>& nodes) {
    json out = json::array();
    for (NodeId v : nodes)
        out.push_back(node_name(v));
    return out;
}

DpoRule parse_rule(const json& j, Workspace& ws, const std::string& at) {
    DpoRule r;
    r.name = string_of(field(j, "name", at), at + "/name");
    auto left = parse_graph(field(j, "left", at), ws, at + "/left");
    auto right = parse_graph(field(j, "right", at), ws, at + "/right");
    r.left = left.graph;
    r.right = right.graph;
    r.k = int_of(field(j, "k", at), at + "/k");
    r.phi_left = node_list(field(j, "phiL", at), left, at + "/phiL");
    r.phi_right = node_list(field(j, "phiR", at), right, at + "/phiR");
    r.terminal = j.contains("terminal") && j["terminal"].get<bool>();
    validate(r);
    return r;
}

Calculus calculus_of(const std::string& s, const std::string& at) {
    for (Calculus c : {Calculus::HL, Calculus::HMEL0, Calculus::HLStar})
        if (s == to_string(c))
            return c;
    fail(at, "unknown calculus \"" + s + "\"");
}

DerivationPtr parse_derivation(const json& j, Workspace& ws, const std::string& at) {
    std::string rule = string_of(field(j, "rule", at), at + "/rule");
    auto r = rule_from_string(rule);
    if (!r)
        fail(at + "/rule", "unknown rule \"" + rule + "\"");
    const json& c = field(j, "conclusion", at);
    auto ante = parse_graph(field(c, "antecedent", at + "/conclusion"), ws, at + "/conclusion/antecedent");
    auto d = std::make_shared<Derivation>(Derivation{
        *r,
        Sequent{ante.graph, parse_type(field(c, "succedent", at + "/conclusion"), ws, at + "/conclusion/succedent")},
        {}, std::nullopt, std::nullopt, 0});
    std::vector<std::map<std::string, EdgeId>> premise_edges;
    if (j.contains("premises")) {
        const auto& list = array_of(j["premises"], at + "/premises");
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::string where = at + "/premises/" + std::to_string(i);
            d->premises.push_back(parse_derivation(list[i], ws, where));
            const json& pc = field(field(list[i], "conclusion", where), "antecedent", where + "/conclusion");
            std::map<std::string, EdgeId> ids;
            if (pc.contains("edges"))
                for (std::size_t k = 0; k < pc["edges"].size(); ++k)
                    ids.emplace(pc["edges"][k].contains("id") ? id_of(pc["edges"][k]["id"], where)
                                                               : edge_name(static_cast<EdgeId>(k)),
                                static_cast<EdgeId>(k));
            premise_edges.push_back(std::move(ids));
        }
    }
    auto edge_ref = [&](const std::map<std::string, EdgeId>& ids, const json& v, const std::string& where) {
        std::string id = id_of(v, where);
        auto it = ids.find(id);
        if (it == ids.end())
            throw Error(ErrorCode::UnknownEdge, where + ": edge \"" + id + "\"");
        return it->second;
    };
    if (j.contains("edge") && !j["edge"].is_null())
        d->edge = edge_ref(ante.edges, j["edge"], at + "/edge");
    if (j.contains("premise_edge") && !j["premise_edge"].is_null()) {
        std::size_t which = d->rule == Rule::Cut ? 1 : 0;
        if (which >= premise_edges.size())
            fail(at + "/premise_edge", "the referenced premise is missing");
        d->premise_edge = edge_ref(premise_edges[which], j["premise_edge"], at + "/premise_edge");
    }
    if (j.contains("n"))
        d->n = int_of(j["n"], at + "/n");
    return d;
}

} // namespace

json to_json(const DpoRule& r) {
    json out{{"name", r.name},         {"left", graph_json(r.left)},       {"k", r.k},
             {"phiL", name_list(r.phi_left)}, {"phiR", name_list(r.phi_right)}, {"right", graph_json(r.right)}};
    if (r.terminal)
        out["terminal"] = true;
    return out;
}

json to_json(const DpoGrammar& gr) {
    json nts = json::array(), ts = json::array(), rules = json::array();
    for (const auto& t : gr.nonterminals)
        nts.push_back(declared_json(t));
    for (const auto& t : gr.terminals)
        ts.push_back(declared_json(t));
    for (const auto& r : gr.rules)
        rules.push_back(to_json(r));
    json out{{"nonterminals", nts}, {"terminals", ts}, {"start", declared_json(gr.start)}, {"rules", rules}};
    if (gr.normalized) {
        out["normalized"] = true;
        json proxies = json::object();
        for (const auto& [a, t] : gr.proxies)
            proxies[a] = t.name();
        out["proxies"] = proxies;
    }
    return out;
}

json to_json(const LexGrammar& g) {
    json alphabet = json::array(), lexicon = json::array();
    for (const auto& a : g.alphabet)
        alphabet.push_back(declared_json(a));
    for (const auto& e : g.lexicon)
        lexicon.push_back(json{{"terminal", e.terminal.name()}, {"type", to_json(e.type)}});
    return json{{"alphabet", alphabet}, {"S", to_json(g.start)}, {"lexicon", lexicon}, {"calculus", to_string(g.calculus)}};
}

json to_json(const Derivation& d) {
    json out{{"rule", to_string(d.rule)}, {"conclusion", to_json(d.conclusion)}};
    if (d.edge)
        out["edge"] = edge_name(*d.edge);
    if (d.premise_edge)
        out["premise_edge"] = edge_name(*d.premise_edge);
    if (d.rule == Rule::StarLeft || d.rule == Rule::StarRightBounded)
        out["n"] = d.n;
    json premises = json::array();
    for (const auto& p : d.premises)
        premises.push_back(to_json(*p));
    out["premises"] = premises;
    return out;
}

json to_json(const DpoDerivation& d) {
    json steps = json::array();
    for (const auto& s : d.steps)
        steps.push_back(json{{"rule", s.rule},
                             {"context", graph_json(s.context.graph)},
                             {"hole", edge_name(s.context.hole)},
                             {"embedding", {{"nodes", s.context.embedding.node_map}, {"edges", s.context.embedding.edge_map}}},
                             {"result", graph_json(s.result)}});
    return json{{"source", graph_json(d.source)}, {"steps", steps}};
}

json document(const std::string& kind, json body) {
    json out{{"format", kFormat}, {"kind", kind}};
    if (body.is_object() && !body.contains("format")) {
        for (auto& [k, v] : body.items())
            out[k] = v;
    } else {
        out["value"] = std::move(body);
    }
    return out;
}

DpoRule rule_from_json(const json& j, Workspace& ws) { return parse_rule(j, ws, ""); }

DpoGrammar grammar_from_json(const json& j, Workspace& ws) {
    DpoGrammar gr;
    gr.nonterminals = label_list(field(j, "nonterminals", ""), ws, "/nonterminals");
    gr.terminals = label_list(field(j, "terminals", ""), ws, "/terminals");
    if (j.contains("start"))
        gr.start = declared_label(j["start"], ws, "/start");
    const auto& rules = array_of(field(j, "rules", ""), "/rules");
    for (std::size_t i = 0; i < rules.size(); ++i)
        gr.rules.push_back(parse_rule(rules[i], ws, "/rules/" + std::to_string(i)));
    gr.normalized = j.contains("normalized") && j["normalized"].get<bool>();
    if (j.contains("proxies")) {
        for (auto& [a, t] : j["proxies"].items()) {
            auto rank = ws.alphabet.rank_of(a);
            if (!rank)
                throw Error(ErrorCode::UnknownLabel, "/proxies: terminal \"" + a + "\"");
            gr.proxies.emplace(a, prim_label(string_of(t, "/proxies/" + a), *rank, ws, "/proxies/" + a));
        }
    }
    validate(gr);
    return gr;
}

LexGrammar lexicon_from_json(const json& j, Workspace& ws) {
    LexGrammar g;
    g.alphabet = label_list(field(j, "alphabet", ""), ws, "/alphabet");
    g.start = parse_type(field(j, "S", ""), ws, "/S");
    const auto& list = array_of(field(j, "lexicon", ""), "/lexicon");
    for (std::size_t i = 0; i < list.size(); ++i) {
        std::string where = "/lexicon/" + std::to_string(i);
        Type a = parse_type(field(list[i], "terminal", where), ws, where + "/terminal");
        Type t = parse_type(field(list[i], "type", where), ws, where + "/type");
        g.lexicon.push_back(LexEntry{a, t});
    }
    if (j.contains("calculus"))
        g.calculus = calculus_of(string_of(j["calculus"], "/calculus"), "/calculus");
    validate(g);
    return g;
}

DerivationPtr derivation_from_json(const json& j, Workspace& ws) { return parse_derivation(j, ws, ""); }

DpoDerivation dpo_derivation_from_json(const json& j, Workspace& ws) {
    DpoDerivation d;
    d.source = parse_graph(field(j, "source", ""), ws, "/source").graph;
    const auto& steps = array_of(field(j, "steps", ""), "/steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string at = "/steps/" + std::to_string(i);
        DpoStep s{string_of(field(steps[i], "rule", at), at + "/rule"), Context{}, Hypergraph()};
        auto ctx = parse_graph(field(steps[i], "context", at), ws, at + "/context");
        s.context.graph = ctx.graph;
        std::string hole = id_of(field(steps[i], "hole", at), at + "/hole");
        if (!ctx.edges.count(hole))
            throw Error(ErrorCode::UnknownEdge, at + "/hole: edge \"" + hole + "\"");
        s.context.hole = ctx.edges.at(hole);
        if (steps[i].contains("embedding")) {
            const json& m = steps[i]["embedding"];
            s.context.embedding.node_map = field(m, "nodes", at + "/embedding").get<std::vector<NodeId>>();
            s.context.embedding.edge_map = field(m, "edges", at + "/embedding").get<std::vector<EdgeId>>();
        }
        s.result = parse_graph(field(steps[i], "result", at), ws, at + "/result").graph;
        d.steps.push_back(std::move(s));
    }
    return d;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, path + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (doc.is_object() && doc.contains("format") && doc["format"] != kFormat)
        throw Error(ErrorCode::ParseError, path + ": unsupported format " + doc["format"].dump());
    return doc;
}

void write_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
    out << doc.dump(2) << "\n";
}

std::string kind_of(const json& doc) {
    if (!doc.is_object())
        return "unknown";
    if (doc.contains("kind") && doc["kind"].is_string())
        return doc["kind"].get<std::string>();
    if (doc.contains("antecedent"))
        return "sequent";
    if (doc.contains("rules"))
        return "grammar";
    if (doc.contains("lexicon"))
        return "lexicon";
    if (doc.contains("labels"))
        return "alphabet";
    if (doc.contains("steps"))
        return "dpo-derivation";
    if (doc.contains("rule") && doc.contains("conclusion"))
        return "derivation";
    if (doc.contains("left") && doc.contains("right"))
        return "rule";
    if (doc.contains("nodes") || doc.contains("edges"))
        return "hypergraph";
    return "type";
}

namespace {

json expect(const std::string& path, const std::string& kind) {
    json doc = read_file(path);
    std::string found = kind_of(doc);
    if (found != kind)
        throw Error(ErrorCode::ParseError, path + ": expected a " + kind + " document, found " + found);
    return doc;
}

} // namespace

Hypergraph load_hypergraph(const std::string& path, Workspace& ws) {
    json doc = expect(path, "hypergraph");
    return hypergraph_from_json(doc, ws);
}

Sequent load_sequent(const std::string& path, Workspace& ws) {
    json doc = expect(path, "sequent");
    return sequent_from_json(doc, ws);
}

DpoGrammar load_grammar(const std::string& path, Workspace& ws) {
    json doc = expect(path, "grammar");
    return grammar_from_json(doc, ws);
}

LexGrammar load_lexicon(const std::string& path, Workspace& ws) {
    json doc = expect(path, "lexicon");
    return lexicon_from_json(doc, ws);
}

std::string Workspace::load(const std::string& path) {
    json doc = read_file(path);
    std::string kind = kind_of(doc);
    if (kind == "hypergraph")
        graphs.insert_or_assign(path, hypergraph_from_json(doc, *this));
    else if (kind == "sequent")
        sequents.insert_or_assign(path, sequent_from_json(doc, *this));
    else if (kind == "grammar")
        grammars.insert_or_assign(path, grammar_from_json(doc, *this));
    else if (kind == "lexicon")
        lexicons.insert_or_assign(path, lexicon_from_json(doc, *this));
    else if (kind == "alphabet")
        alphabet_from_json(doc, *this);
    else
        throw Error(ErrorCode::ParseError, path + ": cannot file a " + kind + " document");
    return kind;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

void graph_body(std::ostream& os, const Hypergraph& g, const std::string& prefix, const std::string& indent) {
    std::map<NodeId, std::string> ext_marks;
    for (std::size_t i = 0; i < g.ext().size(); ++i) {
        auto& mark = ext_marks[g.ext()[i]];
        mark += (mark.empty() ? "" : ",") + std::to_string(i + 1);
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
        os << indent << prefix << "n" << v;
        if (auto it = ext_marks.find(v); it != ext_marks.end())
            os << " [xlabel=" << quoted("(" + it->second + ")") << "]";
        os << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (edge.att.size() == 2) {
            os << indent << prefix << "n" << edge.att[0] << " -> " << prefix << "n" << edge.att[1]
               << " [label=" << quoted(edge.label.str()) << "];\n";
            continue;
        }
        os << indent << prefix << "e" << e << " [shape=box, width=0, height=0, label=" << quoted(edge.label.str())
           << "];\n";
        for (std::size_t k = 0; k < edge.att.size(); ++k)
            os << indent << prefix << "e" << e << " -> " << prefix << "n" << edge.att[k] << " [arrowhead=none, label="
               << quoted(std::to_string(k + 1)) << "];\n";
    }
}

std::string sequent_text(const Sequent& s) { return to_string(s.antecedent) + " -> " + s.succedent.str(); }

void proof_nodes(std::ostream& os, const Derivation& d, int& next) {
    int id = next++;
    os << "  p" << id << " [label=" << quoted(std::string(to_string(d.rule)) + "\n" + sequent_text(d.conclusion))
       << "];\n";
    for (const auto& p : d.premises) {
        int child = next;
        proof_nodes(os, *p, next);
        os << "  p" << child << " -> p" << id << ";\n";
    }
}

} // namespace

std::string to_dot(const Hypergraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << quoted(name) << " {\n  node [shape=point];\n";
    graph_body(os, g, "", "  ");
    os << "}\n";
    return os.str();
}

std::string to_dot(const Derivation& d) {
    std::ostringstream os;
    os << "digraph \"proof\" {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n";
    int next = 0;
    proof_nodes(os, d, next);
    os << "}\n";
    return os.str();
}

std::string to_dot(const DpoDerivation& d) {
    std::ostringstream os;
    os << "digraph \"derivation\" {\n  node [shape=point];\n";
    for (std::size_t i = 0; i <= d.steps.size(); ++i) {
        const Hypergraph& g = i == 0 ? d.source : d.steps[i - 1].result;
        std::string label = i == 0 ? "source" : std::to_string(i) + ": " + d.steps[i - 1].rule;
        os << "  subgraph \"cluster_" << i << "\" {\n    label=" << quoted(label) << ";\n";
        graph_body(os, g, "g" + std::to_string(i) + "_", "    ");
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace hyperlam::io
