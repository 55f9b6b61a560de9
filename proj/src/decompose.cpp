#include "hyperlam/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace hyperlam {

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

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

constexpr int kContext = -1;

struct Component {
    std::vector<NodeId> nodes;
    std::vector<EdgeId> edges;
    std::vector<NodeId> boundary;
    bool has_ext = false;
};

class Engine {
public:
    explicit Engine(const DecomposeQuery& q) : q_(q), g_(*q.host), p_(*q.pattern) {}

    std::vector<Decomposition> run() {
        if (static_cast<int>(q_.roles.size()) != p_.edge_count())
            throw Error(ErrorCode::InvalidArgument, "one role per pattern edge expected");
        if (!q_.outer_context && p_.rank() != g_.rank())
            return {};
        nmap_.assign(p_.node_count(), -1);
        emap_.assign(p_.edge_count(), -1);
        used_.assign(g_.edge_count(), false);
        std::vector<NodeId> undo;
        if (q_.anchor) {
            auto [pe, he] = *q_.anchor;
            if (q_.roles.at(pe) != PatternRole::Literal || p_.label(pe).rank() != g_.label(he).rank())
                return {};
            if (!assign_att(pe, he, undo))
                return {};
            emap_[pe] = he;
            used_[he] = true;
        }
        if (!q_.outer_context)
            for (int j = 0; j < p_.rank(); ++j)
                if (!assign(p_.ext()[j], g_.ext()[j], undo))
                    return {};
        for (EdgeId e = 0; e < p_.edge_count(); ++e)
            if (q_.roles[e] == PatternRole::Literal && emap_[e] < 0)
                literals_.push_back(e);

        host_ext_.assign(g_.node_count(), false);
        for (NodeId v : g_.ext())
            host_ext_[v] = true;
        pattern_ext_.assign(p_.node_count(), false);
        for (NodeId v : p_.ext())
            pattern_ext_[v] = true;
        std::vector<bool> touched(p_.node_count(), false);
        for (const auto& e : p_.edges())
            for (NodeId v : e.att)
                touched[v] = true;
        for (NodeId x = 0; x < p_.node_count(); ++x)
            if (!touched[x] && !pattern_ext_[x])
                floating_pattern_.push_back(x);
        auto host_iso = g_.isolated_mask();
        for (NodeId v = 0; v < g_.node_count(); ++v)
            if (host_iso[v])
                host_isolated_.push_back(v);

        match_literals(0);
        return std::move(out_);
    }

private:
    bool assign(NodeId x, NodeId v, std::vector<NodeId>& undo) {
        if (nmap_[x] >= 0)
            return nmap_[x] == v;
        nmap_[x] = v;
        undo.push_back(x);
        return true;
    }

    bool assign_att(EdgeId pe, EdgeId he, std::vector<NodeId>& undo) {
        const auto& pa = p_.edge(pe).att;
        const auto& ha = g_.edge(he).att;
        for (std::size_t j = 0; j < pa.size(); ++j)
            if (!assign(pa[j], ha[j], undo))
                return false;
        return true;
    }

    void rollback(std::vector<NodeId>& undo) {
        for (NodeId x : undo)
            nmap_[x] = -1;
        undo.clear();
    }

    void match_literals(std::size_t i) {
        if (i == literals_.size()) {
            free_.clear();
            for (NodeId x = 0; x < p_.node_count(); ++x)
                if (nmap_[x] < 0 && std::find(floating_pattern_.begin(), floating_pattern_.end(), x) ==
                                        floating_pattern_.end())
                    free_.push_back(x);
            assign_free(0);
            return;
        }
        EdgeId pe = literals_[i];
        for (EdgeId he = 0; he < g_.edge_count(); ++he) {
            if (used_[he] || !(g_.label(he) == p_.label(pe)))
                continue;
            std::vector<NodeId> undo;
            if (assign_att(pe, he, undo)) {
                emap_[pe] = he;
                used_[he] = true;
                match_literals(i + 1);
                used_[he] = false;
                emap_[pe] = -1;
            }
            rollback(undo);
        }
    }

    void assign_free(std::size_t i) {
        if (i == free_.size()) {
            finish();
            return;
        }
        NodeId x = free_[i];
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            nmap_[x] = v;
            assign_free(i + 1);
        }
        nmap_[x] = -1;
    }

    void finish() {
        // Pattern nodes with no edges and outside ext are interchangeable, and
        // so are unused isolated host nodes: the first free ones are taken.
        std::vector<bool> image(g_.node_count(), false);
        for (NodeId x = 0; x < p_.node_count(); ++x)
            if (nmap_[x] >= 0)
                image[nmap_[x]] = true;
        std::size_t k = 0;
        for (NodeId v : host_isolated_) {
            if (k == floating_pattern_.size())
                break;
            if (!image[v]) {
                nmap_[floating_pattern_[k++]] = v;
                image[v] = true;
            }
        }
        if (k < floating_pattern_.size()) {
            for (NodeId x : floating_pattern_)
                nmap_[x] = -1;
            return;
        }
        evaluate(image);
        for (NodeId x : floating_pattern_)
            nmap_[x] = -1;
    }

    bool kernel_ok() const {
        UnionFind uf(p_.node_count());
        for (EdgeId e = 0; e < p_.edge_count(); ++e) {
            if (q_.roles[e] != PatternRole::Hole)
                continue;
            const auto& att = p_.edge(e).att;
            for (std::size_t a = 0; a < att.size(); ++a)
                for (std::size_t b = a + 1; b < att.size(); ++b)
                    if (nmap_[att[a]] == nmap_[att[b]])
                        uf.unite(att[a], att[b]);
        }
        if (q_.outer_context) {
            const auto& ext = p_.ext();
            for (std::size_t a = 0; a < ext.size(); ++a)
                for (std::size_t b = a + 1; b < ext.size(); ++b)
                    if (nmap_[ext[a]] == nmap_[ext[b]])
                        uf.unite(ext[a], ext[b]);
        }
        std::map<NodeId, int> root_of;
        for (NodeId x = 0; x < p_.node_count(); ++x) {
            auto [it, fresh] = root_of.emplace(nmap_[x], uf.find(x));
            if (!fresh && it->second != uf.find(x))
                return false;
        }
        return true;
    }

    void evaluate(const std::vector<bool>& image) {
        if (!kernel_ok())
            return;
        std::vector<bool> ext_image(g_.node_count(), false);
        for (NodeId x : p_.ext())
            ext_image[nmap_[x]] = true;
        if (q_.outer_context)
            for (NodeId v : g_.ext())
                if (image[v] && !ext_image[v])
                    return;

        UnionFind uf(g_.node_count());
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (used_[e])
                continue;
            NodeId first = -1;
            for (NodeId v : g_.edge(e).att) {
                if (image[v])
                    continue;
                if (first < 0)
                    first = v;
                else
                    uf.unite(first, v);
            }
        }
        std::vector<Component> comps;
        std::map<int, int> comp_of_root;
        auto comp_for = [&](NodeId v) {
            auto [it, fresh] = comp_of_root.emplace(uf.find(v), static_cast<int>(comps.size()));
            if (fresh)
                comps.emplace_back();
            return it->second;
        };
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            if (image[v])
                continue;
            int c = comp_for(v);
            comps[c].nodes.push_back(v);
            if (host_ext_[v])
                comps[c].has_ext = true;
        }
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (used_[e])
                continue;
            int c = -1;
            for (NodeId v : g_.edge(e).att)
                if (!image[v]) {
                    c = comp_for(v);
                    break;
                }
            if (c < 0) {
                c = static_cast<int>(comps.size());
                comps.emplace_back();
            }
            comps[c].edges.push_back(e);
            for (NodeId v : g_.edge(e).att)
                if (image[v])
                    comps[c].boundary.push_back(v);
        }

        std::vector<std::vector<bool>> hole_att(p_.edge_count(), std::vector<bool>(g_.node_count(), false));
        std::vector<EdgeId> holes;
        for (EdgeId e = 0; e < p_.edge_count(); ++e) {
            if (q_.roles[e] != PatternRole::Hole)
                continue;
            holes.push_back(e);
            for (NodeId x : p_.edge(e).att)
                hole_att[e][nmap_[x]] = true;
        }

        std::vector<int> floating_parts;
        if (q_.outer_context)
            floating_parts.push_back(kContext);
        floating_parts.insert(floating_parts.end(), holes.begin(), holes.end());

        std::vector<int> bound;
        std::vector<std::vector<int>> bound_parts;
        std::map<std::string, std::vector<int>> floating_groups;
        for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
            auto& comp = comps[c];
            std::sort(comp.boundary.begin(), comp.boundary.end());
            comp.boundary.erase(std::unique(comp.boundary.begin(), comp.boundary.end()), comp.boundary.end());
            if (comp.boundary.empty() && !comp.has_ext) {
                floating_groups[component_key(comp)].push_back(c);
                continue;
            }
            std::vector<int> parts;
            auto inside = [&](const std::vector<bool>& allowed) {
                return std::all_of(comp.boundary.begin(), comp.boundary.end(), [&](NodeId v) { return allowed[v]; });
            };
            if (q_.outer_context && inside(ext_image))
                parts.push_back(kContext);
            if (!comp.has_ext)
                for (EdgeId h : holes)
                    if (inside(hole_att[h]))
                        parts.push_back(h);
            if (parts.empty())
                return;
            bound.push_back(c);
            bound_parts.push_back(std::move(parts));
        }
        std::vector<std::vector<int>> groups;
        for (auto& [key, members] : floating_groups)
            groups.push_back(members);
        if (!groups.empty() && floating_parts.empty())
            return;

        std::vector<int> choice(comps.size(), kContext);
        emit_bound(0, bound, bound_parts, groups, floating_parts, comps, image, choice);
    }

    std::string component_key(const Component& comp) const {
        std::map<NodeId, NodeId> local;
        for (NodeId v : comp.nodes)
            local.emplace(v, static_cast<NodeId>(local.size()));
        std::vector<Edge> edges;
        for (EdgeId e : comp.edges) {
            Edge out{g_.label(e), {}};
            for (NodeId v : g_.edge(e).att)
                out.att.push_back(local.at(v));
            edges.push_back(std::move(out));
        }
        return canonical(Hypergraph(static_cast<int>(local.size()), std::move(edges), {})).bytes;
    }

    void emit_bound(std::size_t i, const std::vector<int>& bound, const std::vector<std::vector<int>>& parts,
                    const std::vector<std::vector<int>>& groups, const std::vector<int>& floating_parts,
                    const std::vector<Component>& comps, const std::vector<bool>& image, std::vector<int>& choice) {
        if (i == bound.size()) {
            emit_groups(0, groups, floating_parts, comps, image, choice);
            return;
        }
        for (int part : parts[i]) {
            choice[bound[i]] = part;
            emit_bound(i + 1, bound, parts, groups, floating_parts, comps, image, choice);
        }
    }

    void emit_groups(std::size_t g, const std::vector<std::vector<int>>& groups, const std::vector<int>& parts,
                     const std::vector<Component>& comps, const std::vector<bool>& image, std::vector<int>& choice) {
        if (g == groups.size()) {
            split(build(comps, image, choice));
            return;
        }
        distribute(g, 0, 0, groups, parts, comps, image, choice);
    }

    // Splits the members of group g over parts, in order: a composition of
    // the member count rather than an assignment of individual members.
    void distribute(std::size_t g, std::size_t part, std::size_t next, const std::vector<std::vector<int>>& groups,
                    const std::vector<int>& parts, const std::vector<Component>& comps,
                    const std::vector<bool>& image, std::vector<int>& choice) {
        const auto& members = groups[g];
        if (part + 1 == parts.size()) {
            for (std::size_t m = next; m < members.size(); ++m)
                choice[members[m]] = parts[part];
            emit_groups(g + 1, groups, parts, comps, image, choice);
            return;
        }
        for (std::size_t take = 0; next + take <= members.size(); ++take) {
            for (std::size_t m = next; m < next + take; ++m)
                choice[members[m]] = parts[part];
            distribute(g, part + 1, next + take, groups, parts, comps, image, choice);
        }
    }

    Decomposition build(const std::vector<Component>& comps, const std::vector<bool>& image,
                        const std::vector<int>& choice) const {
        Decomposition d;
        d.node_map = nmap_;
        d.literal_image = emap_;
        d.hole_edges.resize(p_.edge_count());
        d.hole_nodes.resize(p_.edge_count());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            auto& edges = choice[c] == kContext ? d.context_edges : d.hole_edges[choice[c]];
            auto& nodes = choice[c] == kContext ? d.context_nodes : d.hole_nodes[choice[c]];
            edges.insert(edges.end(), comps[c].edges.begin(), comps[c].edges.end());
            nodes.insert(nodes.end(), comps[c].nodes.begin(), comps[c].nodes.end());
        }
        (void)image;
        std::sort(d.context_edges.begin(), d.context_edges.end());
        std::sort(d.context_nodes.begin(), d.context_nodes.end());
        for (EdgeId e = 0; e < p_.edge_count(); ++e) {
            std::sort(d.hole_edges[e].begin(), d.hole_edges[e].end());
            std::sort(d.hole_nodes[e].begin(), d.hole_nodes[e].end());
        }

        // Default: every piece fuses the positions that share a host node.
        auto fused = [&](const std::vector<NodeId>& pos) {
            std::vector<int> blocks(pos.size());
            for (std::size_t j = 0; j < pos.size(); ++j) {
                blocks[j] = static_cast<int>(j);
                for (std::size_t k = 0; k < j; ++k)
                    if (nmap_[pos[k]] == nmap_[pos[j]]) {
                        blocks[j] = static_cast<int>(k);
                        break;
                    }
            }
            return blocks;
        };
        d.hole_blocks.resize(p_.edge_count());
        for (EdgeId e = 0; e < p_.edge_count(); ++e)
            if (q_.roles[e] == PatternRole::Hole)
                d.hole_blocks[e] = fused(p_.edge(e).att);
        if (q_.outer_context)
            d.context_blocks = fused(p_.ext());

        d.tentacle_blocks.assign(g_.edge_count(), {});
        auto attach = [&](EdgeId e, const std::vector<NodeId>& pos) {
            for (NodeId v : g_.edge(e).att) {
                int block = -1;
                if (image[v])
                    for (std::size_t j = 0; j < pos.size(); ++j)
                        if (nmap_[pos[j]] == v) {
                            block = static_cast<int>(j);
                            break;
                        }
                d.tentacle_blocks[e].push_back(block);
            }
        };
        for (EdgeId h = 0; h < p_.edge_count(); ++h)
            for (EdgeId e : d.hole_edges[h])
                attach(e, p_.edge(h).att);
        for (EdgeId e : d.context_edges)
            attach(e, p_.ext());
        if (q_.outer_context) {
            for (NodeId v : g_.ext()) {
                int block = -1;
                if (image[v])
                    for (std::size_t j = 0; j < p_.ext().size(); ++j)
                        if (nmap_[p_.ext()[j]] == v) {
                            block = static_cast<int>(j);
                            break;
                        }
                d.ext_blocks.push_back(block);
            }
        }
        return d;
    }

    // A piece's positions that land on one host node, with what the piece
    // attaches there.
    struct Slot {
        int piece;
        std::vector<int> positions;
        std::vector<std::pair<EdgeId, int>> tentacles;
        std::vector<int> ext_entries;
    };

    const std::vector<NodeId>& positions_of(int piece) const {
        return piece == kContext ? p_.ext() : p_.edge(piece).att;
    }

    std::vector<int>& blocks_of(Decomposition& d, int piece) const {
        return piece == kContext ? d.context_blocks : d.hole_blocks[piece];
    }

    // Emits every way of unfusing positions that is still consistent with
    // the node map.
    void split(Decomposition d) {
        std::vector<int> pieces;
        if (q_.outer_context)
            pieces.push_back(kContext);
        for (EdgeId h = 0; h < p_.edge_count(); ++h)
            if (q_.roles[h] == PatternRole::Hole)
                pieces.push_back(h);
        std::vector<Slot> slots;
        for (int piece : pieces) {
            const auto& pos = positions_of(piece);
            std::map<NodeId, std::vector<int>> at;
            for (std::size_t j = 0; j < pos.size(); ++j)
                at[nmap_[pos[j]]].push_back(static_cast<int>(j));
            for (auto& [v, list] : at) {
                if (list.size() < 2)
                    continue;
                Slot s{piece, list, {}, {}};
                const auto& edges = piece == kContext ? d.context_edges : d.hole_edges[piece];
                for (EdgeId e : edges)
                    for (std::size_t i = 0; i < g_.edge(e).att.size(); ++i)
                        if (g_.edge(e).att[i] == v)
                            s.tentacles.emplace_back(e, static_cast<int>(i));
                if (piece == kContext)
                    for (std::size_t i = 0; i < g_.ext().size(); ++i)
                        if (g_.ext()[i] == v)
                            s.ext_entries.push_back(static_cast<int>(i));
                slots.push_back(std::move(s));
            }
        }
        if (slots.empty()) {
            out_.push_back(std::move(d));
            return;
        }
        split_slot(0, slots, pieces, d);
    }

    void split_slot(std::size_t s, const std::vector<Slot>& slots, const std::vector<int>& pieces,
                    Decomposition& d) {
        if (s == slots.size()) {
            if (fusion_ok(d, pieces))
                out_.push_back(d);
            return;
        }
        const Slot& slot = slots[s];
        // Restricted growth strings over the slot's positions.
        std::vector<int> label(slot.positions.size(), 0);
        while (true) {
            std::vector<int> reps;
            auto& blocks = blocks_of(d, slot.piece);
            for (std::size_t j = 0; j < label.size(); ++j) {
                if (label[j] == static_cast<int>(reps.size()))
                    reps.push_back(slot.positions[j]);
                blocks[slot.positions[j]] = reps[label[j]];
            }
            place(0, s, reps, slots, pieces, d);

            std::size_t j = label.size();
            while (--j > 0) {
                int top = *std::max_element(label.begin(), label.begin() + j);
                if (label[j] <= top) {
                    ++label[j];
                    break;
                }
            }
            if (j == 0)
                break;
            for (std::size_t k = j + 1; k < label.size(); ++k)
                label[k] = 0;
        }
    }

    // Chooses a block for every tentacle and ext(G) entry of the slot.
    void place(std::size_t t, std::size_t s, const std::vector<int>& reps, const std::vector<Slot>& slots,
               const std::vector<int>& pieces, Decomposition& d) {
        const Slot& slot = slots[s];
        std::size_t n = slot.tentacles.size();
        if (t == n + slot.ext_entries.size()) {
            split_slot(s + 1, slots, pieces, d);
            return;
        }
        for (int rep : reps) {
            if (t < n)
                d.tentacle_blocks[slot.tentacles[t].first][slot.tentacles[t].second] = rep;
            else
                d.ext_blocks[slot.ext_entries[t - n]] = rep;
            place(t + 1, s, reps, slots, pieces, d);
        }
    }

    // Pattern nodes with one image must be joined by fused blocks.
    bool fusion_ok(Decomposition& d, const std::vector<int>& pieces) const {
        UnionFind uf(p_.node_count());
        for (int piece : pieces) {
            const auto& pos = positions_of(piece);
            const auto& blocks = blocks_of(d, piece);
            for (std::size_t j = 0; j < pos.size(); ++j)
                uf.unite(pos[j], pos[blocks[j]]);
        }
        std::map<NodeId, int> root_of;
        for (NodeId x = 0; x < p_.node_count(); ++x) {
            auto [it, fresh] = root_of.emplace(nmap_[x], uf.find(x));
            if (!fresh && it->second != uf.find(x))
                return false;
        }
        return true;
    }

    const DecomposeQuery& q_;
    const Hypergraph& g_;
    const Hypergraph& p_;
    std::vector<NodeId> nmap_;
    std::vector<EdgeId> emap_;
    std::vector<bool> used_;
    std::vector<EdgeId> literals_;
    std::vector<NodeId> free_;
    std::vector<NodeId> floating_pattern_;
    std::vector<NodeId> host_isolated_;
    std::vector<bool> host_ext_;
    std::vector<bool> pattern_ext_;
    std::vector<Decomposition> out_;
};

} // namespace

std::vector<Decomposition> decompose(const DecomposeQuery& q) {
    if (q.host == nullptr || q.pattern == nullptr)
        throw Error(ErrorCode::InvalidArgument, "decomposition query without graphs");
    return Engine(q).run();
}

Hypergraph hole_graph(const Hypergraph& host, const Hypergraph& pattern, const Decomposition& d, EdgeId h) {
    const auto& blocks = d.hole_blocks[h];
    std::vector<NodeId> block_node(blocks.size(), -1);
    std::vector<NodeId> ext;
    int count = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (block_node[blocks[j]] < 0)
            block_node[blocks[j]] = count++;
        ext.push_back(block_node[blocks[j]]);
    }
    std::map<NodeId, NodeId> local;
    for (NodeId v : d.hole_nodes[h])
        local.emplace(v, count++);
    std::vector<Edge> edges;
    for (EdgeId e : d.hole_edges[h]) {
        Edge out{host.label(e), {}};
        const auto& att = host.edge(e).att;
        for (std::size_t i = 0; i < att.size(); ++i) {
            int b = d.tentacle_blocks[e][i];
            out.att.push_back(b >= 0 ? block_node[blocks[b]] : local.at(att[i]));
        }
        edges.push_back(std::move(out));
    }
    (void)pattern;
    return Hypergraph(count, std::move(edges), std::move(ext));
}

Hypergraph context_graph(const Hypergraph& host, const Hypergraph& pattern, const Decomposition& d,
                         const Type& hole_label) {
    const auto& blocks = d.context_blocks;
    std::vector<NodeId> block_node(blocks.size(), -1);
    Edge hole{hole_label, {}};
    int count = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (block_node[blocks[j]] < 0)
            block_node[blocks[j]] = count++;
        hole.att.push_back(block_node[blocks[j]]);
    }
    std::map<NodeId, NodeId> local;
    for (NodeId v : d.context_nodes)
        local.emplace(v, count++);
    std::vector<Edge> edges;
    for (EdgeId e : d.context_edges) {
        Edge out{host.label(e), {}};
        const auto& att = host.edge(e).att;
        for (std::size_t i = 0; i < att.size(); ++i) {
            int b = d.tentacle_blocks[e][i];
            out.att.push_back(b >= 0 ? block_node[blocks[b]] : local.at(att[i]));
        }
        edges.push_back(std::move(out));
    }
    edges.push_back(std::move(hole));
    std::vector<NodeId> ext;
    for (std::size_t i = 0; i < host.ext().size(); ++i) {
        int b = d.ext_blocks[i];
        ext.push_back(b >= 0 ? block_node[blocks[b]] : local.at(host.ext()[i]));
    }
    (void)pattern;
    return Hypergraph(count, std::move(edges), std::move(ext));
}

std::vector<Context> enumerate_contexts(const Hypergraph& g, const Hypergraph& f) {
    DecomposeQuery q;
    q.host = &g;
    q.pattern = &f;
    q.roles.assign(f.edge_count(), PatternRole::Literal);
    q.outer_context = true;
    std::vector<bool> ext(f.node_count(), false);
    for (NodeId x : f.ext())
        ext[x] = true;

    std::set<std::tuple<std::vector<EdgeId>, std::vector<NodeId>, std::vector<NodeId>, std::vector<int>,
                        std::vector<std::vector<int>>, std::vector<int>>>
        seen;
    std::vector<Context> out;
    Type label = Type::hole(f.rank());
    for (auto& d : decompose(q)) {
        std::vector<EdgeId> images = d.literal_image;
        std::sort(images.begin(), images.end());
        std::vector<NodeId> att, internal;
        for (NodeId x : f.ext())
            att.push_back(d.node_map[x]);
        for (NodeId x = 0; x < f.node_count(); ++x)
            if (!ext[x])
                internal.push_back(d.node_map[x]);
        std::sort(internal.begin(), internal.end());
        std::vector<std::vector<int>> tentacles;
        for (EdgeId e : d.context_edges)
            tentacles.push_back(d.tentacle_blocks[e]);
        if (!seen.emplace(images, att, internal, d.context_blocks, tentacles, d.ext_blocks).second)
            continue;
        Hypergraph c = context_graph(g, f, d, label);
        EdgeId hole = c.edge_count() - 1;
        out.push_back(Context{std::move(c), hole, Morphism{d.node_map, d.literal_image}});
    }
    return out;
}

} // namespace hyperlam
