#ifndef ECC_VERIFY_HPP
#define ECC_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>

#include "ecc/graph.hpp"

namespace ecc {

struct path_witness {
    std::vector<int> vertices;         // simple path, as vertex indices
    std::vector<int> colors;           // colors along it, |vertices|-1 entries
    int unique_color = 0;              // conflict-free checks: the color used once
};

struct pair_report {
    int u = -1, v = -1;
    path_witness witness;
};

struct connectivity_result {
    bool ok = true;
    std::optional<std::pair<int, int>> failing_pair;
    // one witness per unordered pair (u < v), present when ok
    std::vector<pair_report> witnesses;
};

namespace detail {

// Neighbor exploration order: ascending label, so extracted witnesses are
// deterministic (lexicographically smallest at the minimal length).
inline std::vector<std::vector<std::pair<int, int>>> sorted_adj(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        out[v] = g.adj(v);
        std::sort(out[v].begin(), out[v].end(), [&](auto a, auto b) {
            return g.label(a.first) < g.label(b.first);
        });
    }
    return out;
}

// ---- proper-path machinery -------------------------------------------------
//
// States are (vertex, color of the arriving edge). Walk reachability over
// these states is a sound filter: every proper path is a proper walk. Since a
// proper walk need not shorten to a proper path, positives are confirmed by
// iterative-deepening search over simple paths, pruned with the walk metric.

struct proper_searcher {
    const Graph& g;
    const EdgeColoring& f;
    const std::vector<std::vector<std::pair<int, int>>>& adj;
    int p;

    proper_searcher(const EdgeColoring& col,
                    const std::vector<std::vector<std::pair<int, int>>>& sadj)
        : g(col.graph()), f(col), adj(sadj), p(col.num_colors()) {}

    int sid(int v, int c) const { return v * (p + 1) + c; }  // c in 1..p, 0 = start

    // dist[(v,c)] = shortest proper walk from src whose last edge has color c
    std::vector<int> walk_from(int src) const {
        std::vector<int> dist(g.n() * (p + 1), -1);
        std::queue<int> q;
        for (auto [w, e] : g.adj(src)) {
            int s = sid(w, f.color(e));
            if (dist[s] == -1) {
                dist[s] = 1;
                q.push(s);
            }
        }
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            int v = s / (p + 1), c = s % (p + 1);
            for (auto [w, e] : g.adj(v)) {
                int c2 = f.color(e);
                if (c2 == c) continue;
                int t = sid(w, c2);
                if (dist[t] == -1) {
                    dist[t] = dist[s] + 1;
                    q.push(t);
                }
            }
        }
        return dist;
    }

    bool walk_reaches(const std::vector<int>& dist, int v) const {
        for (int c = 1; c <= p; ++c)
            if (dist[sid(v, c)] != -1) return true;
        return false;
    }

    // remaining-steps heuristic: h(x, c_in) = min over c' != c_in of
    // rev[(x, c')], where rev = walk_from(target). Admissible because proper
    // walks are never longer than proper simple paths.
    int h(const std::vector<int>& rev, int x, int c_in) const {
        int best = -1;
        for (int c = 1; c <= p; ++c) {
            if (c == c_in) continue;
            int d = rev[sid(x, c)];
            if (d != -1 && (best == -1 || d < best)) best = d;
        }
        return best;
    }

    bool dfs(int v, int target, int c_in, int depth, int limit,
             const std::vector<int>& rev, std::vector<char>& used,
             std::vector<int>& path) const {
        if (v == target) return true;
        if (depth == limit) return false;
        for (auto [w, e] : adj[v]) {
            int c = f.color(e);
            if (c == c_in || used[w]) continue;
            if (w != target) {
                int rem = h(rev, w, c);
                if (rem == -1 || depth + 1 + rem > limit) continue;
            }
            used[w] = 1;
            path.push_back(w);
            if (dfs(w, target, c, depth + 1, limit, rev, used, path)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> find_path(int u, int v) const {
        if (u == v) return std::vector<int>{u};
        if (g.has_edge(u, v)) return std::vector<int>{u, v};
        auto fwd = walk_from(u);
        if (!walk_reaches(fwd, v)) return std::nullopt;
        auto rev = walk_from(v);
        int lb = g.n();
        for (int c = 1; c <= p; ++c) {
            int d = fwd[sid(v, c)];
            if (d != -1) lb = std::min(lb, d);
        }
        for (int limit = lb; limit <= g.n() - 1; ++limit) {
            std::vector<char> used(g.n(), 0);
            std::vector<int> path{u};
            used[u] = 1;
            if (dfs(u, v, 0, 0, limit, rev, used, path)) return path;
        }
        return std::nullopt;
    }
};

// ---- conflict-free machinery ------------------------------------------------
//
// For a fixed color c, states are (vertex, number of c-edges used: 0 or 1).
// Layered walk reachability of (target, 1) filters; iterative deepening over
// simple paths certifies.

struct cf_searcher {
    const Graph& g;
    const EdgeColoring& f;
    const std::vector<std::vector<std::pair<int, int>>>& adj;

    cf_searcher(const EdgeColoring& col,
                const std::vector<std::vector<std::pair<int, int>>>& sadj)
        : g(col.graph()), f(col), adj(sadj) {}

    // dist[(v, j)] = shortest walk from src using exactly j edges of color c
    std::vector<int> layered_from(int src, int c) const {
        std::vector<int> dist(g.n() * 2, -1);
        std::queue<int> q;
        dist[src * 2] = 0;
        q.push(src * 2);
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            int v = s / 2, j = s % 2;
            for (auto [w, e] : g.adj(v)) {
                int j2 = j + (f.color(e) == c ? 1 : 0);
                if (j2 > 1) continue;
                int t = w * 2 + j2;
                if (dist[t] == -1) {
                    dist[t] = dist[s] + 1;
                    q.push(t);
                }
            }
        }
        return dist;
    }

    bool dfs(int v, int target, int used_c, int c, int depth, int limit,
             const std::vector<int>& rev, std::vector<char>& used,
             std::vector<int>& path) const {
        if (v == target && used_c == 1) return true;
        if (depth == limit) return false;
        for (auto [w, e] : adj[v]) {
            int j2 = used_c + (f.color(e) == c ? 1 : 0);
            if (j2 > 1 || used[w]) continue;
            int rem = rev[w * 2 + (1 - j2)];
            if (rem == -1 || depth + 1 + rem > limit) continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(w, target, j2, c, depth + 1, limit, rev, used, path)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> find_path(int u, int v, int c) const {
        auto fwd = layered_from(u, c);
        if (fwd[v * 2 + 1] == -1) return std::nullopt;
        auto rev = layered_from(v, c);
        for (int limit = fwd[v * 2 + 1]; limit <= g.n() - 1; ++limit) {
            std::vector<char> used(g.n(), 0);
            std::vector<int> path{u};
            used[u] = 1;
            if (dfs(u, v, 0, c, 0, limit, rev, used, path)) return path;
        }
        return std::nullopt;
    }
};

inline path_witness make_witness(const EdgeColoring& f, const std::vector<int>& verts,
                                 int unique_color = 0) {
    path_witness w;
    w.vertices = verts;
    for (size_t i = 0; i + 1 < verts.size(); ++i)
        w.colors.push_back(f.color_of(verts[i], verts[i + 1]));
    w.unique_color = unique_color;
    return w;
}

inline void require_connected(const Graph& g) {
    if (!g.connected()) throw error(errc::disconnected, "graph must be connected");
}

}  // namespace detail

// Re-validates a witness against the coloring: edges exist, colors match,
// no repeated vertex. Property-specific checks are separate.
inline bool witness_is_valid(const EdgeColoring& f, const path_witness& w) {
    const Graph& g = f.graph();
    if (w.vertices.empty()) return false;
    std::vector<char> seen(g.n(), 0);
    for (size_t i = 0; i < w.vertices.size(); ++i) {
        int v = w.vertices[i];
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
        if (i + 1 < w.vertices.size()) {
            if (!g.has_edge(v, w.vertices[i + 1])) return false;
            if (f.color_of(v, w.vertices[i + 1]) != w.colors[i]) return false;
        }
    }
    return true;
}

inline connectivity_result monochromatic_connected(const EdgeColoring& f) {
    const Graph& g = f.graph();
    detail::require_connected(g);
    auto view = color_classes(f);
    int n = g.n();
    // comp_id[c][v] = component of v within color class c, or -1
    std::vector<std::vector<int>> comp_id(view.classes.size(), std::vector<int>(n, -1));
    for (size_t c = 0; c < view.classes.size(); ++c)
        for (size_t k = 0; k < view.classes[c].comps.size(); ++k)
            for (int v : view.classes[c].comps[k]) comp_id[c][v] = static_cast<int>(k);

    connectivity_result res;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int found_color = 0;
            for (size_t c = 0; c < comp_id.size() && !found_color; ++c)
                if (comp_id[c][u] != -1 && comp_id[c][u] == comp_id[c][v])
                    found_color = static_cast<int>(c) + 1;
            if (!found_color) {
                res.ok = false;
                res.failing_pair = {u, v};
                res.witnesses.clear();
                return res;
            }
            // BFS inside the single color class for the witness path
            std::vector<int> prev(n, -2);
            std::queue<int> q;
            prev[u] = -1;
            q.push(u);
            while (!q.empty() && prev[v] == -2) {
                int x = q.front();
                q.pop();
                for (auto [y, e] : g.adj(x))
                    if (f.color(e) == found_color && prev[y] == -2) {
                        prev[y] = x;
                        q.push(y);
                    }
            }
            std::vector<int> path;
            for (int x = v; x != -1; x = prev[x]) path.push_back(x);
            std::reverse(path.begin(), path.end());
            res.witnesses.push_back({u, v, detail::make_witness(f, path)});
        }
    }
    return res;
}

inline connectivity_result properly_connected(const EdgeColoring& f) {
    const Graph& g = f.graph();
    detail::require_connected(g);
    auto adj = detail::sorted_adj(g);
    detail::proper_searcher ps(f, adj);
    connectivity_result res;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            auto path = ps.find_path(u, v);
            if (!path) {
                res.ok = false;
                res.failing_pair = {u, v};
                res.witnesses.clear();
                return res;
            }
            res.witnesses.push_back({u, v, detail::make_witness(f, *path)});
        }
    return res;
}

inline connectivity_result conflict_free_connected(const EdgeColoring& f) {
    const Graph& g = f.graph();
    detail::require_connected(g);
    auto adj = detail::sorted_adj(g);
    detail::cf_searcher cs(f, adj);
    connectivity_result res;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) {
                int c = f.color_of(u, v);
                res.witnesses.push_back({u, v, detail::make_witness(f, {u, v}, c)});
                continue;
            }
            bool done = false;
            for (int c = 1; c <= f.num_colors() && !done; ++c) {
                auto path = cs.find_path(u, v, c);
                if (path) {
                    res.witnesses.push_back({u, v, detail::make_witness(f, *path, c)});
                    done = true;
                }
            }
            if (!done) {
                res.ok = false;
                res.failing_pair = {u, v};
                res.witnesses.clear();
                return res;
            }
        }
    return res;
}

namespace detail {

// Distinct colors on the unique tree path, for every target, by one DFS per
// source with incremental color counts.
inline std::vector<int> tree_path_color_counts(const EdgeColoring& f, int src) {
    const Graph& g = f.graph();
    std::vector<int> result(g.n(), 0);
    std::vector<int> cnt(f.num_colors() + 1, 0);
    std::vector<char> seen(g.n(), 0);
    int distinct = 0;
    // explicit stack of (vertex, edge-into-it, phase)
    std::vector<std::tuple<int, int, size_t>> stack;
    stack.emplace_back(src, -1, 0);
    seen[src] = 1;
    while (!stack.empty()) {
        auto& [v, ein, cursor] = stack.back();
        if (cursor == 0 && ein >= 0) {
            if (++cnt[f.color(ein)] == 1) ++distinct;
            result[v] = distinct;
        }
        if (cursor < g.adj(v).size()) {
            auto [w, e] = g.adj(v)[cursor++];
            if (!seen[w]) {
                seen[w] = 1;
                stack.emplace_back(w, e, 0);
            }
        } else {
            if (ein >= 0 && --cnt[f.color(ein)] == 0) --distinct;
            stack.pop_back();
        }
    }
    return result;
}

}  // namespace detail

// cd_f(u, v): minimum number of distinct colors over all u-v paths, by
// enumerating color subsets in increasing cardinality with reachability
// closure (any walk within a color set contains a path within it).
inline int color_distance(const EdgeColoring& f, int u, int v) {
    const Graph& g = f.graph();
    detail::require_connected(g);
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw error(errc::unknown_vertex, "color_distance: vertex out of range");
    if (u == v) return 0;
    if (g.is_tree()) return detail::tree_path_color_counts(f, u)[v];
    int p = f.num_colors();
    std::vector<char> at_u(p + 1, 0), at_v(p + 1, 0);
    for (auto [w, e] : g.adj(u)) at_u[f.color(e)] = 1;
    for (auto [w, e] : g.adj(v)) at_v[f.color(e)] = 1;
    std::vector<int> subset;
    std::vector<char> in_subset(p + 1, 0);
    // lexicographic k-combinations of {1..p}
    std::function<bool(int, int)> rec = [&](int start, int need) -> bool {
        if (need == 0) {
            bool touch_u = false, touch_v = false;
            for (int c : subset) {
                touch_u = touch_u || at_u[c];
                touch_v = touch_v || at_v[c];
            }
            if (!touch_u || !touch_v) return false;
            std::vector<char> seen(g.n(), 0);
            std::vector<int> stack{u};
            seen[u] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (x == v) return true;
                for (auto [y, e] : g.adj(x))
                    if (!seen[y] && in_subset[f.color(e)]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            return false;
        }
        for (int c = start; c <= p - need + 1; ++c) {
            subset.push_back(c);
            in_subset[c] = 1;
            if (rec(c + 1, need - 1)) return true;
            in_subset[c] = 0;
            subset.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= p; ++k)
        if (rec(1, k)) return k;
    throw error(errc::disconnected, "no path found");  // unreachable for connected g
}

namespace detail {

// Core of the Lemma-6 procedure: grow reachability sets per color subset of
// size <= kmax, marking covered pairs cumulatively. Returns the smallest k at
// which all pairs are covered, or -1 if kmax is insufficient.
inline int cover_all_pairs(const EdgeColoring& f, int kmax) {
    const Graph& g = f.graph();
    int n = g.n(), p = f.num_colors();
    if (n <= 1) return 0;
    std::vector<char> covered(n * n, 0);
    long long remaining = static_cast<long long>(n) * (n - 1) / 2;
    auto mark = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (!covered[a * n + b]) {
            covered[a * n + b] = 1;
            --remaining;
        }
    };
    std::vector<int> subset;
    std::vector<char> in_subset(p + 1, 0);
    detail::DSU* dsu = nullptr;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (remaining == 0) return;
        if (need == 0) {
            detail::DSU d(n);
            for (int e = 0; e < g.m(); ++e)
                if (in_subset[f.color(e)]) d.unite(g.edges()[e].first, g.edges()[e].second);
            std::map<int, std::vector<int>> comps;
            for (int v = 0; v < n; ++v) comps[d.find(v)].push_back(v);
            for (auto& [root, verts] : comps)
                for (size_t i = 0; i < verts.size(); ++i)
                    for (size_t j = i + 1; j < verts.size(); ++j) mark(verts[i], verts[j]);
            return;
        }
        for (int c = start; c <= p - need + 1 && remaining > 0; ++c) {
            subset.push_back(c);
            in_subset[c] = 1;
            rec(c + 1, need - 1);
            in_subset[c] = 0;
            subset.pop_back();
        }
    };
    (void)dsu;
    for (int k = 1; k <= std::min(kmax, p); ++k) {
        rec(1, k);
        if (remaining == 0) return k;
    }
    return -1;
}

}  // namespace detail

inline int color_diameter(const EdgeColoring& f) {
    const Graph& g = f.graph();
    detail::require_connected(g);
    if (g.n() <= 1) return 0;
    if (g.is_tree()) {
        int best = 0;
        for (int u = 0; u < g.n(); ++u) {
            auto counts = detail::tree_path_color_counts(f, u);
            for (int v = u + 1; v < g.n(); ++v) best = std::max(best, counts[v]);
        }
        return best;
    }
    int k = detail::cover_all_pairs(f, f.num_colors());
    if (k < 0) throw error(errc::disconnected, "color diameter undefined");
    return k;
}

inline bool is_k_color_connection(const EdgeColoring& f, int k) {
    const Graph& g = f.graph();
    detail::require_connected(g);
    if (k < 1) throw error(errc::bad_input, "k must be >= 1");
    if (g.n() <= 1) return true;
    if (g.is_tree()) {
        for (int u = 0; u < g.n(); ++u) {
            auto counts = detail::tree_path_color_counts(f, u);
            for (int v = 0; v < g.n(); ++v)
                if (counts[v] > k) return false;
        }
        return true;
    }
    return detail::cover_all_pairs(f, k) != -1;
}

}  // namespace ecc

#endif  // ECC_VERIFY_HPP
