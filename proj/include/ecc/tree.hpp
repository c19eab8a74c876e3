#ifndef ECC_TREE_HPP
#define ECC_TREE_HPP

#include "ecc/graph.hpp"
#include "ecc/verify.hpp"

namespace ecc {

// Rooted, bottom-up-ordered view of a tree: vertices renumbered v_1..v_n so
// that every child's index precedes its parent's and v_n is the root.
struct RootedTree {
    const Graph* g = nullptr;
    std::vector<int> order;   // order[i] = graph vertex at position i (0-based; root last)
    std::vector<int> parent;  // parent[i] = position of parent of position i; root: -1
};

namespace detail {

inline void require_tree(const Graph& g) {
    if (!g.is_tree()) throw error(errc::not_a_tree, "input must be a tree");
}

inline int farthest(const Graph& g, int src, const std::vector<int>& dist) {
    int best = src;
    for (int v = 0; v < g.n(); ++v)
        if (dist[v] > dist[best] || (dist[v] == dist[best] && g.label(v) < g.label(best)))
            best = v;
    return best;
}

}  // namespace detail

// A middle vertex of some diameter path, found by the double BFS sweep.
// Ties break to the smallest label.
inline int select_root(const Graph& g, int k = 1) {
    detail::require_tree(g);
    (void)k;  // the middle vertex satisfies the distance condition for every k
    if (g.n() == 1) return 0;
    auto d0 = bfs_distances(g, 0);
    int a = detail::farthest(g, 0, d0);
    auto da = bfs_distances(g, a);
    int b = detail::farthest(g, a, da);
    // walk back from b toward a to the middle of the diameter path
    std::vector<int> prev(g.n(), -1);
    {
        std::queue<int> q;
        std::vector<int> dist(g.n(), -1);
        dist[a] = 0;
        q.push(a);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : g.adj(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    prev[w] = v;
                    q.push(w);
                }
        }
    }
    std::vector<int> path;
    for (int x = b; x != -1; x = prev[x]) path.push_back(x);
    int diam = static_cast<int>(path.size()) - 1;
    // one or two middles; prefer the smaller label
    int m1 = path[diam / 2];
    int m2 = path[(diam + 1) / 2];
    if (m1 == m2) return m1;
    return g.label(m1) < g.label(m2) ? m1 : m2;
}

// BFS from the root, then reverse the visit order so children precede
// parents and the root comes last.
inline RootedTree order_vertices(const Graph& g, int root) {
    detail::require_tree(g);
    RootedTree t;
    t.g = &g;
    std::vector<int> bfs;
    std::vector<int> par_vertex(g.n(), -1);
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        bfs.push_back(v);
        for (auto [w, e] : g.adj(v))
            if (!seen[w]) {
                seen[w] = 1;
                par_vertex[w] = v;
                q.push(w);
            }
    }
    int n = g.n();
    t.order.assign(n, -1);
    std::vector<int> pos_of(n, -1);
    for (int i = 0; i < n; ++i) {
        t.order[n - 1 - i] = bfs[i];
        pos_of[bfs[i]] = n - 1 - i;
    }
    t.parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = t.order[i];
        if (par_vertex[v] != -1) t.parent[i] = pos_of[par_vertex[v]];
    }
    return t;
}

namespace detail {

struct cck_run {
    long long result = 0;
    std::vector<int> a, b;
    std::vector<char> saturated;  // per position: child edge joined the shared tree / S
    int cap = 0;
};

// Bottom-up accumulator pass shared by the odd and even algorithms. Each
// vertex updates its parent once, children strictly before parents. A child
// with b at the cap is absorbed into the root tree (odd) or S (even);
// otherwise it contributes one fresh color and bumps the parent's depth.
inline cck_run run_accumulators(const RootedTree& t, int cap) {
    int n = static_cast<int>(t.order.size());
    cck_run r;
    r.cap = cap;
    r.a.assign(n, 0);
    r.b.assign(n, 0);
    r.saturated.assign(n, 0);
    for (int i = 0; i < n - 1; ++i) {
        int j = t.parent[i];
        if (r.b[i] == cap) {
            r.a[j] += r.a[i];
            r.b[j] = r.b[i];
            r.saturated[i] = 1;
        } else {
            r.a[j] += r.a[i] + 1;
            r.b[j] = std::max(r.b[j], r.b[i] + 1);
        }
    }
    return r;
}

}  // namespace detail

// cc_k of a tree in linear time: Algorithm for odd k returns a(root)+1,
// for even k a(root)+Delta where Delta is the max degree of the subgraph on
// the saturated edge set S. Results never exceed m(T), which also settles
// the k >= diam regime (all-distinct coloring, cc = m).
inline int cck_tree(const Graph& g, int k) {
    detail::require_tree(g);
    if (g.n() < 2) throw error(errc::bad_input, "cck_tree needs n >= 2");
    if (k < 1) throw error(errc::bad_input, "k must be >= 1");
    int root = select_root(g, k);
    RootedTree t = order_vertices(g, root);
    int n = g.n();
    if (k % 2 == 1) {
        auto r = detail::run_accumulators(t, (k - 1) / 2);
        return static_cast<int>(std::min<long long>(r.a[n - 1] + 1, g.m()));
    }
    auto r = detail::run_accumulators(t, k / 2 - 1);
    // Delta = max degree of the subgraph induced by S (0 when S is empty)
    std::vector<int> deg(n, 0);
    int delta = 0;
    for (int i = 0; i < n - 1; ++i)
        if (r.saturated[i]) {
            ++deg[i];
            ++deg[t.parent[i]];
            delta = std::max({delta, deg[i], deg[t.parent[i]]});
        }
    return static_cast<int>(std::min<long long>(r.a[n - 1] + delta, g.m()));
}

struct TreeWitness {
    bool ok = false;
    std::vector<int> colors;  // per edge id, when ok
};

// Best-effort extremal coloring with exactly cck_tree(T,k) colors and color
// diameter at most k, validated before being returned. The count from
// cck_tree stays authoritative; a failed construction is reported as such.
inline TreeWitness cck_tree_witness(const Graph& g, int k) {
    detail::require_tree(g);
    if (g.n() < 2) throw error(errc::bad_input, "cck_tree_witness needs n >= 2");
    if (k < 1) throw error(errc::bad_input, "k must be >= 1");
    int target = cck_tree(g, k);
    TreeWitness w;
    std::vector<int> colors(g.m(), 0);

    if (diameter(g) <= k) {  // rainbow
        for (int e = 0; e < g.m(); ++e) colors[e] = e + 1;
        EdgeColoring f(g, colors);
        if (f.num_colors() == target && is_k_color_connection(f, k)) {
            w.ok = true;
            w.colors = colors;
        }
        return w;
    }

    int root = select_root(g, k);
    RootedTree t = order_vertices(g, root);
    int n = g.n();
    int cap = (k % 2 == 1) ? (k - 1) / 2 : k / 2 - 1;
    auto r = detail::run_accumulators(t, cap);

    auto edge_of_pos = [&](int i) {  // edge id between position i and its parent
        return g.edge_id(t.order[i], t.order[t.parent[i]]);
    };

    int next = 1;
    if (k % 2 == 1) {
        // one shared color tree on the saturated edges, fresh colors elsewhere
        int shared = next++;
        for (int i = 0; i < n - 1; ++i)
            colors[edge_of_pos(i)] = r.saturated[i] ? shared : next++;
    } else {
        // saturated edges form one subtree containing the root; split it into
        // branch classes at its max-degree vertex
        std::vector<std::vector<int>> s_adj(n);
        for (int i = 0; i < n - 1; ++i)
            if (r.saturated[i]) {
                s_adj[i].push_back(i);
                s_adj[t.parent[i]].push_back(i);
            }
        int center = 0;
        for (int i = 0; i < n; ++i)
            if (s_adj[i].size() > s_adj[center].size()) center = i;
        std::vector<int> edge_class(n, -1);
        if (!s_adj[center].empty()) {
            std::vector<char> visited(n, 0);
            visited[center] = 1;
            std::queue<std::pair<int, int>> q;  // (vertex position, class id)
            int cls = 0;
            for (int e : s_adj[center]) {
                edge_class[e] = cls;
                int other = (e == center) ? t.parent[e] : e;
                visited[other] = 1;
                q.emplace(other, cls);
                ++cls;
            }
            while (!q.empty()) {
                auto [v, c] = q.front();
                q.pop();
                for (int e : s_adj[v]) {
                    if (edge_class[e] != -1) continue;
                    edge_class[e] = c;
                    int other = (e == v) ? t.parent[e] : e;
                    if (!visited[other]) {
                        visited[other] = 1;
                        q.emplace(other, c);
                    }
                }
            }
            next += cls;
        }
        for (int i = 0; i < n - 1; ++i)
            colors[edge_of_pos(i)] = r.saturated[i] ? edge_class[i] + 1 : next++;
    }

    EdgeColoring f(g, colors);
    if (f.num_colors() == target && is_k_color_connection(f, k)) {
        w.ok = true;
        w.colors = colors;
    }
    return w;
}

}  // namespace ecc

#endif  // ECC_TREE_HPP
