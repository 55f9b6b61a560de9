#include "hyperlam/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperlam {

namespace {

// Incidence structure restricted to "active" nodes (attached or external).
// Isolated internal nodes carry no structure and are only counted.
struct Prepared {
    std::vector<NodeId> active;
    std::vector<int> index; // node -> active index, -1 for isolated
    int isolated = 0;
    std::vector<int> label_id;
    std::vector<std::vector<int>> att;
    std::vector<std::vector<std::pair<int, int>>> incidences;
    std::vector<std::vector<int>> ext_positions;
};

Prepared prepare(const Hypergraph& g) {
    Prepared p;
    auto mask = g.isolated_mask();
    p.index.assign(g.node_count(), -1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (mask[v]) {
            ++p.isolated;
        } else {
            p.index[v] = static_cast<int>(p.active.size());
            p.active.push_back(v);
        }
    }
    std::vector<std::string> keys;
    for (const auto& e : g.edges())
        keys.push_back(e.label.key());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    p.incidences.resize(p.active.size());
    p.ext_positions.resize(p.active.size());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        p.label_id.push_back(static_cast<int>(
            std::lower_bound(keys.begin(), keys.end(), g.label(e).key()) - keys.begin()));
        std::vector<int> att;
        for (std::size_t j = 0; j < g.edge(e).att.size(); ++j) {
            int a = p.index[g.edge(e).att[j]];
            att.push_back(a);
            p.incidences[a].emplace_back(e, static_cast<int>(j));
        }
        p.att.push_back(std::move(att));
    }
    for (std::size_t j = 0; j < g.ext().size(); ++j)
        p.ext_positions[p.index[g.ext()[j]]].push_back(static_cast<int>(j));
    return p;
}

// Replaces arbitrary signatures by their dense rank.
template <class Sig>
std::vector<int> rank_signatures(const std::vector<Sig>& sigs) {
    std::vector<int> idx(sigs.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
    std::vector<int> out(sigs.size());
    int rank = -1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i == 0 || sigs[idx[i - 1]] < sigs[idx[i]])
            ++rank;
        out[idx[i]] = rank;
    }
    return out;
}

int color_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<int> refine(const Prepared& p, std::vector<int> colors) {
    colors = rank_signatures(colors);
    while (true) {
        int before = color_count(colors);
        std::vector<std::vector<int>> sigs(colors.size());
        for (std::size_t v = 0; v < colors.size(); ++v) {
            std::vector<std::vector<int>> tuples;
            for (auto [e, pos] : p.incidences[v]) {
                std::vector<int> t{p.label_id[e], pos};
                for (int a : p.att[e])
                    t.push_back(colors[a]);
                tuples.push_back(std::move(t));
            }
            std::sort(tuples.begin(), tuples.end());
            auto& s = sigs[v];
            s.push_back(colors[v]);
            for (auto& t : tuples) {
                s.push_back(-1);
                s.insert(s.end(), t.begin(), t.end());
            }
        }
        colors = rank_signatures(sigs);
        if (color_count(colors) == before)
            return colors;
    }
}

std::string serialize(const Hypergraph& g, const Prepared& p, const std::vector<int>& order) {
    std::vector<std::pair<const std::string*, std::vector<int>>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<int> att;
        for (int a : p.att[e])
            att.push_back(order[a]);
        edges.emplace_back(&g.label(e).key(), std::move(att));
    }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        int c = x.first->compare(*y.first);
        if (c != 0)
            return c < 0;
        return x.second < y.second;
    });
    std::string out = "V" + std::to_string(p.active.size()) + "+" + std::to_string(p.isolated) + "E";
    for (const auto& [key, att] : edges) {
        out += std::to_string(key->size());
        out += ':';
        out += *key;
        out += '(';
        for (std::size_t j = 0; j < att.size(); ++j) {
            if (j)
                out += ',';
            out += std::to_string(att[j]);
        }
        out += ')';
    }
    out += "X(";
    for (std::size_t j = 0; j < g.ext().size(); ++j) {
        if (j)
            out += ',';
        out += std::to_string(order[p.index[g.ext()[j]]]);
    }
    out += ')';
    return out;
}

struct Labeling {
    std::string bytes;
    std::vector<int> order; // active index -> canonical position
};

void search(const Hypergraph& g, const Prepared& p, std::vector<int> colors, Labeling& best, bool& have) {
    colors = refine(p, std::move(colors));
    int n = color_count(colors);
    std::vector<int> size(n, 0);
    for (int c : colors)
        ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (size[c] > 1 && (target < 0 || size[c] < size[target]))
            target = c;
    if (target < 0) {
        std::string s = serialize(g, p, colors);
        if (!have || s < best.bytes) {
            best.bytes = std::move(s);
            best.order = colors;
            have = true;
        }
        return;
    }
    for (std::size_t v = 0; v < colors.size(); ++v) {
        if (colors[v] != target)
            continue;
        std::vector<int> next(colors.size());
        for (std::size_t u = 0; u < colors.size(); ++u)
            next[u] = 2 * colors[u] + (u == v ? 0 : 1);
        search(g, p, std::move(next), best, have);
    }
}

Labeling label(const Hypergraph& g, const Prepared& p) {
    std::vector<std::vector<int>> init(p.active.size());
    for (std::size_t v = 0; v < p.active.size(); ++v) {
        init[v] = p.ext_positions[v];
        init[v].insert(init[v].begin(), static_cast<int>(p.incidences[v].size()));
    }
    Labeling best;
    bool have = false;
    search(g, p, rank_signatures(init), best, have);
    return best;
}

} // namespace

CanonicalForm canonical(const Hypergraph& g) {
    Prepared p = prepare(g);
    return CanonicalForm{label(g, p).bytes};
}

std::optional<Morphism> isomorphic(const Hypergraph& g, const Hypergraph& h) {
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count() || g.rank() != h.rank())
        return std::nullopt;
    Prepared pg = prepare(g), ph = prepare(h);
    Labeling lg = label(g, pg), lh = label(h, ph);
    if (lg.bytes != lh.bytes)
        return std::nullopt;

    Morphism m;
    m.node_map.assign(g.node_count(), -1);
    std::vector<NodeId> by_position(ph.active.size());
    for (std::size_t a = 0; a < ph.active.size(); ++a)
        by_position[lh.order[a]] = ph.active[a];
    for (std::size_t a = 0; a < pg.active.size(); ++a)
        m.node_map[pg.active[a]] = by_position[lg.order[a]];
    std::vector<NodeId> iso_h;
    for (NodeId v = 0; v < h.node_count(); ++v)
        if (ph.index[v] < 0)
            iso_h.push_back(v);
    std::size_t k = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (pg.index[v] < 0)
            m.node_map[v] = iso_h[k++];

    std::map<std::pair<std::string, std::vector<NodeId>>, std::vector<EdgeId>> pool;
    for (EdgeId e = h.edge_count() - 1; e >= 0; --e)
        pool[{h.label(e).key(), h.edge(e).att}].push_back(e);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<NodeId> att;
        for (NodeId v : g.edge(e).att)
            att.push_back(m.node_map[v]);
        auto it = pool.find({g.label(e).key(), att});
        if (it == pool.end() || it->second.empty())
            return std::nullopt;
        m.edge_map.push_back(it->second.back());
        it->second.pop_back();
    }
    if (!is_isomorphism(m, g, h))
        return std::nullopt;
    return m;
}

bool is_morphism(const Morphism& m, const Hypergraph& g, const Hypergraph& h) {
    if (static_cast<int>(m.node_map.size()) != g.node_count() ||
        static_cast<int>(m.edge_map.size()) != g.edge_count())
        return false;
    for (NodeId v : m.node_map)
        if (v < 0 || v >= h.node_count())
            return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EdgeId f = m.edge_map[e];
        if (f < 0 || f >= h.edge_count() || !(g.label(e) == h.label(f)))
            return false;
        const auto& ga = g.edge(e).att;
        const auto& ha = h.edge(f).att;
        if (ga.size() != ha.size())
            return false;
        for (std::size_t j = 0; j < ga.size(); ++j)
            if (m.node_map[ga[j]] != ha[j])
                return false;
    }
    if (g.ext().size() != h.ext().size())
        return false;
    for (std::size_t j = 0; j < g.ext().size(); ++j)
        if (m.node_map[g.ext()[j]] != h.ext()[j])
            return false;
    return true;
}

bool is_isomorphism(const Morphism& m, const Hypergraph& g, const Hypergraph& h) {
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count())
        return false;
    if (!is_morphism(m, g, h))
        return false;
    std::vector<bool> seen_n(h.node_count(), false), seen_e(h.edge_count(), false);
    for (NodeId v : m.node_map) {
        if (seen_n[v])
            return false;
        seen_n[v] = true;
    }
    for (EdgeId e : m.edge_map) {
        if (seen_e[e])
            return false;
        seen_e[e] = true;
    }
    return true;
}

} // namespace hyperlam
