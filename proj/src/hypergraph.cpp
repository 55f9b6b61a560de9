#include "hyperlam/hypergraph.hpp"

#include <numeric>
#include <sstream>

namespace hyperlam {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::BothRanked: return "BothRanked";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Error";
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

// Renumbers the classes of uf over [0, n) in order of first appearance.
std::vector<NodeId> compress(UnionFind& uf, int n, int& count) {
    std::vector<NodeId> cls(n, -1), out(n);
    count = 0;
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (cls[r] < 0)
            cls[r] = count++;
        out[v] = cls[r];
    }
    return out;
}

} // namespace

Hypergraph::Hypergraph(int node_count, std::vector<Edge> edges, std::vector<NodeId> ext)
    : nodes_(node_count), edges_(std::move(edges)), ext_(std::move(ext)) {
    if (nodes_ < 0)
        throw Error(ErrorCode::InvalidArgument, "negative node count");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (static_cast<int>(e.att.size()) != e.label.rank())
            throw Error(ErrorCode::RankMismatch, "edge " + std::to_string(i) + " labeled " + e.label.str() +
                                                     " has " + std::to_string(e.att.size()) + " attachment nodes");
        for (NodeId v : e.att)
            if (v < 0 || v >= nodes_)
                throw Error(ErrorCode::UnknownNode, "attachment node " + std::to_string(v));
    }
    for (NodeId v : ext_)
        if (v < 0 || v >= nodes_)
            throw Error(ErrorCode::UnknownNode, "external node " + std::to_string(v));
}

Hypergraph Hypergraph::handle_filled(const Type& a) {
    std::vector<NodeId> nodes(a.rank());
    std::iota(nodes.begin(), nodes.end(), 0);
    return Hypergraph(a.rank(), {Edge{a, nodes}}, nodes);
}

Hypergraph Hypergraph::handle_open(const Type& a) { return handle_filled(a).with_ext({}); }

Hypergraph Hypergraph::discrete(int k) { return Hypergraph(k, {}, {}); }

const Edge& Hypergraph::edge(EdgeId e) const {
    if (e < 0 || e >= edge_count())
        throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
    return edges_[e];
}

Hypergraph Hypergraph::with_ext(std::vector<NodeId> ext) const { return Hypergraph(nodes_, edges_, std::move(ext)); }

Hypergraph Hypergraph::with_label(EdgeId e, Type label) const {
    if (label.rank() != edge(e).label.rank())
        throw Error(ErrorCode::RankMismatch, "relabel of edge " + std::to_string(e) + " with " + label.str());
    auto edges = edges_;
    edges[e].label = std::move(label);
    return Hypergraph(nodes_, std::move(edges), ext_);
}

Hypergraph Hypergraph::without_edge(EdgeId e) const {
    edge(e);
    auto edges = edges_;
    edges.erase(edges.begin() + e);
    return Hypergraph(nodes_, std::move(edges), ext_);
}

Hypergraph Hypergraph::with_edge(Edge edge) const {
    auto edges = edges_;
    edges.push_back(std::move(edge));
    return Hypergraph(nodes_, std::move(edges), ext_);
}

std::vector<bool> Hypergraph::isolated_mask() const {
    std::vector<bool> iso(nodes_, true);
    for (const auto& e : edges_)
        for (NodeId v : e.att)
            iso[v] = false;
    for (NodeId v : ext_)
        iso[v] = false;
    return iso;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
    if (a.nodes_ != b.nodes_ || a.ext_ != b.ext_ || a.edges_.size() != b.edges_.size())
        return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i)
        if (a.edges_[i].att != b.edges_[i].att || !(a.edges_[i].label == b.edges_[i].label))
            return false;
    return true;
}

Hypergraph relabel(const Hypergraph& h, const std::function<Type(EdgeId)>& f) {
    std::vector<Edge> edges = h.edges();
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        Type l = f(e);
        if (l.rank() != h.edge(e).label.rank())
            throw Error(ErrorCode::RankMismatch, "relabel of edge " + std::to_string(e) + " with " + l.str());
        edges[e].label = std::move(l);
    }
    return Hypergraph(h.node_count(), std::move(edges), h.ext());
}

Hypergraph replace(const Hypergraph& g, EdgeId e0, const Hypergraph& h) { return replace_many(g, {{e0, h}}); }

Hypergraph replace_many(const Hypergraph& g, const std::vector<std::pair<EdgeId, Hypergraph>>& subst) {
    std::vector<int> offset;
    std::vector<bool> replaced(g.edge_count(), false);
    int total = g.node_count();
    for (const auto& [e, h] : subst) {
        if (e < 0 || e >= g.edge_count())
            throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e));
        if (replaced[e])
            throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " replaced twice");
        if (g.edge(e).label.rank() != h.rank())
            throw Error(ErrorCode::RankMismatch, "rk(e" + std::to_string(e) + ") != rk(H)");
        replaced[e] = true;
        offset.push_back(total);
        total += h.node_count();
    }
    UnionFind uf(total);
    for (std::size_t i = 0; i < subst.size(); ++i) {
        const auto& [e, h] = subst[i];
        const auto& att = g.edge(e).att;
        for (std::size_t j = 0; j < att.size(); ++j)
            uf.unite(att[j], offset[i] + h.ext()[j]);
    }
    int count = 0;
    auto cls = compress(uf, total, count);

    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (replaced[e])
            continue;
        Edge out{g.edge(e).label, {}};
        for (NodeId v : g.edge(e).att)
            out.att.push_back(cls[v]);
        edges.push_back(std::move(out));
    }
    for (std::size_t i = 0; i < subst.size(); ++i) {
        for (const auto& he : subst[i].second.edges()) {
            Edge out{he.label, {}};
            for (NodeId v : he.att)
                out.att.push_back(cls[offset[i] + v]);
            edges.push_back(std::move(out));
        }
    }
    std::vector<NodeId> ext;
    for (NodeId v : g.ext())
        ext.push_back(cls[v]);
    return Hypergraph(count, std::move(edges), std::move(ext));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (!a.zero_rank() && !b.zero_rank())
        throw Error(ErrorCode::BothRanked, "disjoint union of two ranked hypergraphs");
    int off = a.node_count();
    std::vector<Edge> edges = a.edges();
    for (const auto& e : b.edges()) {
        Edge out{e.label, {}};
        for (NodeId v : e.att)
            out.att.push_back(off + v);
        edges.push_back(std::move(out));
    }
    std::vector<NodeId> ext = a.ext();
    if (ext.empty())
        for (NodeId v : b.ext())
            ext.push_back(off + v);
    return Hypergraph(a.node_count() + b.node_count(), std::move(edges), std::move(ext));
}

Hypergraph repeat_union(int k, const Hypergraph& h) {
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "negative multiplicity");
    if (k > 1 && !h.zero_rank())
        throw Error(ErrorCode::BothRanked, "k·H needs a zero-rank H");
    Hypergraph out;
    for (int i = 0; i < k; ++i)
        out = disjoint_union(out, h);
    return out;
}

Hypergraph gluing(const Hypergraph& g1, const std::vector<NodeId>& phi1,
                  const Hypergraph& g2, const std::vector<NodeId>& phi2) {
    if (phi1.size() != phi2.size())
        throw Error(ErrorCode::ArityMismatch, "interface maps of different length");
    if (!g1.zero_rank() || !g2.zero_rank())
        throw Error(ErrorCode::InvalidArgument, "gluing needs zero-rank hypergraphs");
    int off = g1.node_count();
    int total = off + g2.node_count();
    UnionFind uf(total);
    for (std::size_t i = 0; i < phi1.size(); ++i) {
        if (phi1[i] < 0 || phi1[i] >= g1.node_count() || phi2[i] < 0 || phi2[i] >= g2.node_count())
            throw Error(ErrorCode::UnknownNode, "interface image out of range");
        uf.unite(phi1[i], off + phi2[i]);
    }
    int count = 0;
    auto cls = compress(uf, total, count);
    std::vector<Edge> edges;
    for (const auto& e : g1.edges()) {
        Edge out{e.label, {}};
        for (NodeId v : e.att)
            out.att.push_back(cls[v]);
        edges.push_back(std::move(out));
    }
    for (const auto& e : g2.edges()) {
        Edge out{e.label, {}};
        for (NodeId v : e.att)
            out.att.push_back(cls[off + v]);
        edges.push_back(std::move(out));
    }
    return Hypergraph(count, std::move(edges), {});
}

int connectives(const Hypergraph& h) {
    int n = 0;
    for (const auto& e : h.edges())
        n += e.label.connectives();
    return n;
}

std::string to_string(const Hypergraph& h) {
    std::ostringstream os;
    os << "<" << h.node_count() << "|";
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (e)
            os << ",";
        os << h.label(e).str() << "(";
        for (std::size_t j = 0; j < h.edge(e).att.size(); ++j)
            os << (j ? " " : "") << h.edge(e).att[j];
        os << ")";
    }
    os << "|";
    for (std::size_t j = 0; j < h.ext().size(); ++j)
        os << (j ? " " : "") << h.ext()[j];
    os << ">";
    return os.str();
}

} // namespace hyperlam
