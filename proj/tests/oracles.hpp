// Independent brute-force oracles and random instance generators shared by
// the property and acceptance binaries.
#ifndef HYPERLAM_TESTS_ORACLES_HPP
#define HYPERLAM_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperlam/canonical.hpp"
#include "hyperlam/decompose.hpp"

namespace oracles {

using namespace hyperlam;
using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<Type> small_alphabet() {
    return {Type::prim("a", 2), Type::prim("b", 1), Type::prim("c", 0), Type::prim("d", 2)};
}

inline Hypergraph random_graph(Rng& rng, const std::vector<Type>& labels, int max_nodes, int max_edges, int rank,
                               bool ext_repeats = true) {
    int n = uniform(rng, rank > 0 ? 1 : 0, max_nodes);
    if (n == 0)
        n = rank > 0 ? 1 : 0;
    std::vector<Edge> edges;
    int m = uniform(rng, 0, max_edges);
    for (int i = 0; i < m; ++i) {
        const Type& l = labels[uniform(rng, 0, static_cast<int>(labels.size()) - 1)];
        if (l.rank() > 0 && n == 0)
            continue;
        Edge e{l, {}};
        for (int j = 0; j < l.rank(); ++j)
            e.att.push_back(uniform(rng, 0, n - 1));
        edges.push_back(std::move(e));
    }
    std::vector<NodeId> ext;
    std::vector<NodeId> pool(n);
    for (int v = 0; v < n; ++v)
        pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int j = 0; j < rank; ++j)
        ext.push_back(ext_repeats && coin(rng, 0.25) ? uniform(rng, 0, n - 1) : pool[j % n]);
    return Hypergraph(n, std::move(edges), std::move(ext));
}

// ---------------------------------------------------------------------------
// Decompositions by generate-and-test: every assignment of host material to
// the pieces, every way of splitting shared nodes, kept only when the pieces
// reassemble to the host.

struct Piece {
    std::vector<NodeId> positions; // pattern nodes
    std::vector<EdgeId> edges;     // host edges
    std::vector<NodeId> internal;  // host nodes
};

class BruteDecomposer {
public:
    BruteDecomposer(const DecomposeQuery& q) : q_(q), g_(*q.host), p_(*q.pattern) {}

    std::set<std::string> run() {
        nmap_.assign(p_.node_count(), -1);
        std::vector<EdgeId> literals;
        for (EdgeId e = 0; e < p_.edge_count(); ++e)
            if (q_.roles[e] == PatternRole::Literal)
                literals.push_back(e);
        if (!q_.outer_context && p_.rank() != g_.rank())
            return {};
        std::vector<bool> used(g_.edge_count(), false);
        match(literals, 0, used);
        return keys_;
    }

private:
    bool bind(NodeId x, NodeId v, std::vector<NodeId>& undo) {
        if (nmap_[x] >= 0)
            return nmap_[x] == v;
        nmap_[x] = v;
        undo.push_back(x);
        return true;
    }

    void match(const std::vector<EdgeId>& literals, std::size_t i, std::vector<bool>& used) {
        if (i == literals.size()) {
            std::vector<NodeId> undo;
            bool ok = true;
            if (!q_.outer_context)
                for (int j = 0; j < p_.rank() && ok; ++j)
                    ok = bind(p_.ext()[j], g_.ext()[j], undo);
            if (ok) {
                std::vector<NodeId> free;
                for (NodeId x = 0; x < p_.node_count(); ++x)
                    if (nmap_[x] < 0)
                        free.push_back(x);
                map_free(free, 0, used);
            }
            for (NodeId x : undo)
                nmap_[x] = -1;
            return;
        }
        EdgeId pe = literals[i];
        for (EdgeId he = 0; he < g_.edge_count(); ++he) {
            if (used[he])
                continue;
            bool anchored = q_.anchor && q_.anchor->first == pe;
            if (anchored && he != q_.anchor->second)
                continue;
            if (!anchored && !(g_.label(he) == p_.label(pe)))
                continue;
            if (g_.label(he).rank() != p_.label(pe).rank())
                continue;
            std::vector<NodeId> undo;
            bool ok = true;
            for (std::size_t j = 0; j < p_.edge(pe).att.size() && ok; ++j)
                ok = bind(p_.edge(pe).att[j], g_.edge(he).att[j], undo);
            if (ok) {
                used[he] = true;
                match(literals, i + 1, used);
                used[he] = false;
            }
            for (NodeId x : undo)
                nmap_[x] = -1;
        }
    }

    void map_free(const std::vector<NodeId>& free, std::size_t i, const std::vector<bool>& used) {
        if (i == free.size()) {
            pieces(used);
            return;
        }
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            nmap_[free[i]] = v;
            map_free(free, i + 1, used);
        }
        nmap_[free[i]] = -1;
    }

    // Piece ids: hole pattern edges, then -1 for the context.
    void pieces(const std::vector<bool>& used) {
        std::vector<int> ids;
        for (EdgeId e = 0; e < p_.edge_count(); ++e)
            if (q_.roles[e] == PatternRole::Hole)
                ids.push_back(e);
        if (q_.outer_context)
            ids.push_back(-1);
        std::vector<bool> image(g_.node_count(), false);
        for (NodeId v : nmap_)
            image[v] = true;
        std::vector<EdgeId> rest;
        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (!used[e])
                rest.push_back(e);
        std::vector<int> owner(g_.edge_count(), -2);
        assign_edges(ids, rest, 0, owner, image);
    }

    std::vector<NodeId> positions(int piece) const { return piece < 0 ? p_.ext() : p_.edge(piece).att; }

    bool has_position_at(int piece, NodeId v) const {
        for (NodeId x : positions(piece))
            if (nmap_[x] == v)
                return true;
        return false;
    }

    void assign_edges(const std::vector<int>& ids, const std::vector<EdgeId>& rest, std::size_t i,
                      std::vector<int>& owner, const std::vector<bool>& image) {
        if (i == rest.size()) {
            assign_nodes(ids, owner, image);
            return;
        }
        EdgeId e = rest[i];
        for (int piece : ids) {
            bool ok = true;
            for (NodeId v : g_.edge(e).att)
                if (image[v] && !has_position_at(piece, v))
                    ok = false;
            if (!ok)
                continue;
            owner[e] = piece;
            assign_edges(ids, rest, i + 1, owner, image);
        }
        owner[e] = -2;
    }

    void assign_nodes(const std::vector<int>& ids, const std::vector<int>& owner, const std::vector<bool>& image) {
        std::vector<int> node_owner(g_.node_count(), -3);
        std::vector<NodeId> loose;
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            if (image[v])
                continue;
            int who = -3;
            for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                if (owner[e] == -2)
                    continue;
                for (NodeId u : g_.edge(e).att)
                    if (u == v) {
                        if (who != -3 && who != owner[e])
                            return;
                        who = owner[e];
                    }
            }
            bool ext = std::find(g_.ext().begin(), g_.ext().end(), v) != g_.ext().end();
            if (ext) {
                if (!q_.outer_context || (who != -3 && who != -1))
                    return;
                who = -1;
            }
            node_owner[v] = who;
            if (who == -3)
                loose.push_back(v);
        }
        for (NodeId v = 0; v < g_.node_count(); ++v)
            if (image[v] && std::find(g_.ext().begin(), g_.ext().end(), v) != g_.ext().end() && q_.outer_context &&
                !has_position_at(-1, v))
                return;
        place_loose(ids, owner, node_owner, loose, 0);
    }

    void place_loose(const std::vector<int>& ids, const std::vector<int>& owner, std::vector<int>& node_owner,
                     const std::vector<NodeId>& loose, std::size_t i) {
        if (i == loose.size()) {
            build(ids, owner, node_owner);
            return;
        }
        for (int piece : ids) {
            node_owner[loose[i]] = piece;
            place_loose(ids, owner, node_owner, loose, i + 1);
        }
        node_owner[loose[i]] = -3;
    }

    // A choice point: the items of one piece at one shared host node.
    struct Split {
        int piece;
        std::vector<int> slots;                        // positions in the piece
        std::vector<std::pair<EdgeId, int>> tentacles; // host edge, index
        std::vector<int> ext_entries;                  // context only
    };

    void build(const std::vector<int>& ids, const std::vector<int>& owner, const std::vector<int>& node_owner) {
        std::vector<Split> splits;
        for (int piece : ids) {
            auto pos = positions(piece);
            std::map<NodeId, Split> at;
            for (std::size_t j = 0; j < pos.size(); ++j) {
                NodeId v = nmap_[pos[j]];
                at.emplace(v, Split{piece, {}, {}, {}}).first->second.slots.push_back(static_cast<int>(j));
            }
            for (EdgeId e = 0; e < g_.edge_count(); ++e)
                if (owner[e] == piece)
                    for (std::size_t i = 0; i < g_.edge(e).att.size(); ++i)
                        if (auto it = at.find(g_.edge(e).att[i]); it != at.end())
                            it->second.tentacles.emplace_back(e, static_cast<int>(i));
            if (piece < 0)
                for (std::size_t i = 0; i < g_.ext().size(); ++i)
                    if (auto it = at.find(g_.ext()[i]); it != at.end())
                        it->second.ext_entries.push_back(static_cast<int>(i));
            for (auto& [v, s] : at)
                splits.push_back(std::move(s));
        }
        // choice[s]: block label per slot, then per tentacle, then per ext entry.
        std::vector<std::vector<int>> choice(splits.size());
        enumerate(splits, 0, choice, ids, owner, node_owner);
    }

    void enumerate(const std::vector<Split>& splits, std::size_t s, std::vector<std::vector<int>>& choice,
                   const std::vector<int>& ids, const std::vector<int>& owner, const std::vector<int>& node_owner) {
        if (s == splits.size()) {
            assemble(splits, choice, ids, owner, node_owner);
            return;
        }
        const Split& sp = splits[s];
        std::size_t slots = sp.slots.size();
        std::size_t total = slots + sp.tentacles.size() + sp.ext_entries.size();
        std::vector<int> cur;
        // Every labeling of the slots by block numbers (not only canonical
        // ones) and every block choice for the rest.
        std::function<void()> rec = [&] {
            if (cur.size() == total) {
                choice[s] = cur;
                enumerate(splits, s + 1, choice, ids, owner, node_owner);
                return;
            }
            int limit = static_cast<int>(slots);
            for (int b = 0; b < limit; ++b) {
                if (cur.size() >= slots) {
                    bool exists = false;
                    for (std::size_t k = 0; k < slots; ++k)
                        exists = exists || cur[k] == b;
                    if (!exists)
                        continue;
                }
                cur.push_back(b);
                rec();
                cur.pop_back();
            }
        };
        rec();
    }

    void assemble(const std::vector<Split>& splits, const std::vector<std::vector<int>>& choice,
                  const std::vector<int>& ids, const std::vector<int>& owner, const std::vector<int>& node_owner) {
        std::map<int, Hypergraph> built;
        for (int piece : ids) {
            std::map<std::pair<NodeId, int>, NodeId> block_node; // (host node, block) -> local
            std::map<NodeId, NodeId> internal;
            auto pos = positions(piece);
            std::vector<NodeId> slot_node(pos.size(), -1);
            std::map<std::pair<EdgeId, int>, NodeId> tentacle_node;
            std::vector<NodeId> ext_node(g_.ext().size(), -1);
            int count = 0;
            for (std::size_t s = 0; s < splits.size(); ++s) {
                if (splits[s].piece != piece)
                    continue;
                const auto& sp = splits[s];
                NodeId v = nmap_[pos[sp.slots[0]]];
                auto node_for = [&](int b) {
                    auto [it, fresh] = block_node.emplace(std::make_pair(v, b), count);
                    if (fresh)
                        ++count;
                    return it->second;
                };
                std::size_t k = 0;
                for (int j : sp.slots)
                    slot_node[j] = node_for(choice[s][k++]);
                for (const auto& t : sp.tentacles)
                    tentacle_node[t] = node_for(choice[s][k++]);
                for (int i : sp.ext_entries)
                    ext_node[i] = node_for(choice[s][k++]);
            }
            for (NodeId v = 0; v < g_.node_count(); ++v)
                if (node_owner[v] == piece)
                    internal.emplace(v, count++);
            std::vector<Edge> edges;
            for (EdgeId e = 0; e < g_.edge_count(); ++e) {
                if (owner[e] != piece)
                    continue;
                Edge out{g_.label(e), {}};
                for (std::size_t i = 0; i < g_.edge(e).att.size(); ++i) {
                    auto it = tentacle_node.find({e, static_cast<int>(i)});
                    out.att.push_back(it != tentacle_node.end() ? it->second : internal.at(g_.edge(e).att[i]));
                }
                edges.push_back(std::move(out));
            }
            if (piece < 0) {
                Edge hole{Type::hole(p_.rank()), {}};
                for (NodeId v : slot_node)
                    hole.att.push_back(v);
                edges.push_back(std::move(hole));
                std::vector<NodeId> ext;
                for (std::size_t i = 0; i < g_.ext().size(); ++i)
                    ext.push_back(ext_node[i] >= 0 ? ext_node[i] : internal.at(g_.ext()[i]));
                built.emplace(piece, Hypergraph(count, std::move(edges), std::move(ext)));
            } else {
                built.emplace(piece, Hypergraph(count, std::move(edges), slot_node));
            }
        }
        // Reassemble by the definition and compare with the host.
        Hypergraph inner = relabel(p_, [&](EdgeId e) {
            if (q_.anchor && q_.anchor->first == e)
                return g_.label(q_.anchor->second);
            return p_.label(e);
        });
        std::vector<std::pair<EdgeId, Hypergraph>> subst;
        for (int piece : ids)
            if (piece >= 0)
                subst.emplace_back(piece, built.at(piece));
        Hypergraph whole = replace_many(inner, subst);
        if (q_.outer_context) {
            const Hypergraph& k = built.at(-1);
            whole = replace(k, k.edge_count() - 1, whole);
        }
        if (!iso(whole, g_))
            return;
        std::string key;
        if (q_.outer_context)
            key += canonical(built.at(-1)).bytes;
        for (int piece : ids)
            if (piece >= 0)
                key += "|" + canonical(built.at(piece)).bytes;
        keys_.insert(key);
    }

    const DecomposeQuery& q_;
    const Hypergraph& g_;
    const Hypergraph& p_;
    std::vector<NodeId> nmap_;
    std::set<std::string> keys_;
};

/// Keys of the engine's decompositions, in the oracle's format.
inline std::set<std::string> engine_keys(const DecomposeQuery& q, bool* reconstructs = nullptr) {
    std::set<std::string> out;
    const Hypergraph& g = *q.host;
    const Hypergraph& p = *q.pattern;
    for (const auto& d : decompose(q)) {
        std::string key;
        Hypergraph k;
        if (q.outer_context) {
            k = context_graph(g, p, d, Type::hole(p.rank()));
            key += canonical(k).bytes;
        }
        std::vector<std::pair<EdgeId, Hypergraph>> subst;
        for (EdgeId e = 0; e < p.edge_count(); ++e)
            if (q.roles[e] == PatternRole::Hole) {
                Hypergraph h = hole_graph(g, p, d, e);
                key += "|" + canonical(h).bytes;
                subst.emplace_back(e, h);
            }
        if (reconstructs) {
            Hypergraph inner = relabel(p, [&](EdgeId e) {
                if (q.anchor && q.anchor->first == e)
                    return g.label(q.anchor->second);
                return p.label(e);
            });
            Hypergraph whole = replace_many(inner, subst);
            if (q.outer_context)
                whole = replace(k, k.edge_count() - 1, whole);
            if (!iso(whole, g))
                *reconstructs = false;
        }
        out.insert(key);
    }
    return out;
}

inline std::set<std::string> brute_keys(const DecomposeQuery& q) { return BruteDecomposer(q).run(); }

} // namespace oracles

#endif
