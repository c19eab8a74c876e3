#ifndef ECC_GRAPH_HPP
#define ECC_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecc {

enum class errc {
    duplicate_vertex,
    loop_edge,
    parallel_edge,
    unknown_vertex,
    disconnected,
    bad_coloring,
    cyclic_color_class,
    capacity,
    not_a_tree,
    bad_input,
};

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Simple undirected graph over opaque string labels. Vertices keep their
// declaration order; edges are stored as index pairs (lo, hi) in insertion
// order. Immutable once built.
class Graph {
public:
    Graph() = default;

    Graph(const std::vector<std::string>& vertex_labels,
          const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
        labels_.reserve(vertex_labels.size());
        for (const auto& l : vertex_labels) {
            if (index_.count(l))
                throw error(errc::duplicate_vertex, "duplicate vertex: " + l);
            index_[l] = static_cast<int>(labels_.size());
            labels_.push_back(l);
        }
        adj_.assign(labels_.size(), {});
        for (const auto& [a, b] : edge_pairs) add_edge_internal(a, b);
    }

    int n() const { return static_cast<int>(labels_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    int index_of(const std::string& l) const {
        auto it = index_.find(l);
        if (it == index_.end()) throw error(errc::unknown_vertex, "unknown vertex: " + l);
        return it->second;
    }
    bool has_vertex(const std::string& l) const { return index_.count(l) != 0; }

    // edges as (lo, hi) index pairs, in insertion order
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return edge_id_.count({u, v}) != 0;
    }
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_id_.find({u, v});
        if (it == edge_id_.end()) throw error(errc::unknown_vertex, "no such edge");
        return it->second;
    }

    // neighbors as (other endpoint, edge id)
    const std::vector<std::pair<int, int>>& adj(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool connected() const {
        if (n() == 0) return true;
        return reachable_from(0).size() == static_cast<size_t>(n());
    }

    std::vector<int> reachable_from(int src) const {
        std::vector<char> seen(n(), 0);
        std::vector<int> order;
        std::vector<int> stack{src};
        seen[src] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (auto [w, e] : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return order;
    }

    bool is_tree() const { return connected() && m() == n() - 1; }

private:
    void add_edge_internal(const std::string& a, const std::string& b) {
        int u = index_of(a), v = index_of(b);
        if (u == v) throw error(errc::loop_edge, "loop edge at: " + a);
        int lo = std::min(u, v), hi = std::max(u, v);
        if (edge_id_.count({lo, hi}))
            throw error(errc::parallel_edge, "parallel edge: " + a + "-" + b);
        int id = static_cast<int>(edges_.size());
        edge_id_[{lo, hi}] = id;
        edges_.emplace_back(lo, hi);
        adj_[u].emplace_back(v, id);
        adj_[v].emplace_back(u, id);
    }

    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> edges_;
    std::map<std::pair<int, int>, int> edge_id_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

inline Graph build_graph(const std::vector<std::string>& vertex_labels,
                         const std::vector<std::pair<std::string, std::string>>& edge_pairs) {
    return Graph(vertex_labels, edge_pairs);
}

// Connected components as lists of vertex indices (each sorted; components
// ordered by smallest member).
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<char> seen(g.n(), 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [w, e] : g.adj(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Bridges via iterative low-link DFS; returned as edge ids, ascending.
inline std::vector<int> cut_edges(const Graph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> bridges;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        // frame: (vertex, parent edge id, adjacency cursor)
        std::vector<std::tuple<int, int, size_t>> stack;
        stack.emplace_back(root, -1, 0);
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, pe, cursor] = stack.back();
            if (cursor < g.adj(v).size()) {
                auto [w, e] = g.adj(v)[cursor++];
                if (e == pe) continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, e, 0);
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = std::get<0>(stack.back());
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) bridges.push_back(pe);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, e] : g.adj(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline int diameter(const Graph& g) {
    if (!g.connected()) throw error(errc::disconnected, "diameter of disconnected graph");
    if (g.n() <= 1) return 0;
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        auto d = bfs_distances(g, v);
        best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    return best;
}

// Total edge coloring. Color ids are normalized to 1..p by first appearance
// in the graph's edge order; all connectivity notions here are invariant
// under renaming, so nothing is lost.
class EdgeColoring {
public:
    EdgeColoring() = default;

    // colors[i] = color of edge i (any positive ints, renumbered here)
    EdgeColoring(const Graph& g, const std::vector<int>& colors) : g_(&g) {
        if (static_cast<int>(colors.size()) != g.m())
            throw error(errc::bad_coloring, "coloring must assign every edge exactly once");
        std::map<int, int> remap;
        color_.resize(colors.size());
        for (size_t i = 0; i < colors.size(); ++i) {
            if (colors[i] <= 0) throw error(errc::bad_coloring, "color ids must be positive");
            auto [it, fresh] = remap.emplace(colors[i], static_cast<int>(remap.size()) + 1);
            color_[i] = it->second;
        }
        count_ = static_cast<int>(remap.size());
    }

    const Graph& graph() const { return *g_; }
    int color(int edge_id) const { return color_.at(edge_id); }
    int color_of(int u, int v) const { return color_.at(g_->edge_id(u, v)); }
    int num_colors() const { return count_; }
    const std::vector<int>& colors() const { return color_; }

private:
    const Graph* g_ = nullptr;
    std::vector<int> color_;
    int count_ = 0;
};

struct ColorClass {
    int color = 0;
    std::vector<int> edge_ids;
    bool is_forest = true;
    // components over the vertices incident to this class
    std::vector<std::vector<int>> comps;
};

struct ColorClassView {
    std::vector<ColorClass> classes;  // indexed color-1
};

namespace detail {
struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { for (int i = 0; i < n; ++i) p[i] = i; }
    int find(int x) { while (p[x] != x) x = p[x] = p[p[x]]; return x; }
    // returns false if x,y already joined (i.e. the new edge closes a cycle)
    bool unite(int x, int y) {
        x = find(x); y = find(y);
        if (x == y) return false;
        p[x] = y;
        return true;
    }
};
}  // namespace detail

inline ColorClassView color_classes(const EdgeColoring& f) {
    const Graph& g = f.graph();
    ColorClassView view;
    view.classes.resize(f.num_colors());
    for (int c = 0; c < f.num_colors(); ++c) view.classes[c].color = c + 1;
    for (int e = 0; e < g.m(); ++e) view.classes[f.color(e) - 1].edge_ids.push_back(e);
    for (auto& cls : view.classes) {
        detail::DSU dsu(g.n());
        for (int e : cls.edge_ids) {
            auto [u, v] = g.edges()[e];
            if (!dsu.unite(u, v)) cls.is_forest = false;
        }
        std::map<int, std::vector<int>> by_root;
        std::vector<char> incident(g.n(), 0);
        for (int e : cls.edge_ids) {
            auto [u, v] = g.edges()[e];
            incident[u] = incident[v] = 1;
        }
        for (int v = 0; v < g.n(); ++v)
            if (incident[v]) by_root[dsu.find(v)].push_back(v);
        for (auto& [root, verts] : by_root) cls.comps.push_back(verts);
    }
    return view;
}

// Total waste of a coloring whose classes are all forests:
//   sum over colors of (class edge count - 1).
// Satisfies num_colors + waste == m.
inline int waste(const EdgeColoring& f) {
    auto view = color_classes(f);
    int total = 0;
    for (const auto& cls : view.classes) {
        if (!cls.is_forest)
            throw error(errc::cyclic_color_class, "color class contains a cycle");
        total += static_cast<int>(cls.edge_ids.size()) - 1;
    }
    return total;
}

}  // namespace ecc

#endif  // ECC_GRAPH_HPP
