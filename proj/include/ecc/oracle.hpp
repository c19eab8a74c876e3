#ifndef ECC_ORACLE_HPP
#define ECC_ORACLE_HPP

#include <functional>

#include "ecc/cnf.hpp"
#include "ecc/graph.hpp"
#include "ecc/verify.hpp"

namespace ecc {

inline constexpr int kSatVarCap = 24;
inline constexpr int kPartitionEdgeCap = 12;

namespace detail {

inline std::optional<Assignment> exhaustive_sat(const Cnf3Formula& phi, bool nae) {
    phi.validate();
    if (phi.num_vars > kSatVarCap)
        throw error(errc::capacity, "exhaustive SAT capped at 24 variables");
    int n = phi.num_vars;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Assignment a(n + 1, 0);
        for (int i = 1; i <= n; ++i) a[i] = (mask >> (i - 1)) & 1;
        if (nae ? nae_satisfies(phi, a) : evaluates_true(phi, a)) return a;
    }
    return std::nullopt;
}

// Enumerate set partitions of {0..m-1} as restricted-growth strings with
// exactly `blocks` blocks, in lexicographic RGS order. Callback returns true
// to stop early; enumerate returns whether it was stopped.
inline bool enumerate_rgs(int m, int blocks, const std::function<bool(const std::vector<int>&)>& cb) {
    std::vector<int> rgs(m, 0);
    std::function<bool(int, int)> rec = [&](int i, int mx) -> bool {
        if (i == m) return mx + 1 == blocks ? cb(rgs) : false;
        int hi = std::min(mx + 1, blocks - 1);
        for (int v = 0; v <= hi; ++v) {
            int nmx = std::max(mx, v);
            // remaining positions must still be able to reach `blocks` blocks
            if (nmx + 1 + (m - i - 1) < blocks) continue;
            rgs[i] = v;
            if (rec(i + 1, nmx)) return true;
        }
        return false;
    };
    if (m == 0) return false;
    return rec(0, -1);
}

inline EdgeColoring coloring_from_rgs(const Graph& g, const std::vector<int>& rgs) {
    std::vector<int> colors(rgs.size());
    for (size_t i = 0; i < rgs.size(); ++i) colors[i] = rgs[i] + 1;
    return EdgeColoring(g, colors);
}

inline void check_partition_cap(const Graph& g, const char* who) {
    if (g.m() > kPartitionEdgeCap)
        throw error(errc::capacity,
                    std::string(who) + ": partition enumeration capped at " +
                        std::to_string(kPartitionEdgeCap) + " edges");
}

}  // namespace detail

inline std::optional<Assignment> nae3sat_solve(const Cnf3Formula& phi) {
    return detail::exhaustive_sat(phi, true);
}

inline std::optional<Assignment> sat3_solve(const Cnf3Formula& phi) {
    return detail::exhaustive_sat(phi, false);
}

// Minimum number of color classes under which G is properly connected.
// Properness depends only on the edge partition, so partitions are
// enumerated with exactly k blocks for k = 1, 2, ...
inline int solve_pc(const Graph& g) {
    detail::require_connected(g);
    detail::check_partition_cap(g, "solve_pc");
    for (int k = 1; k <= g.m(); ++k) {
        bool found = detail::enumerate_rgs(g.m(), k, [&](const std::vector<int>& rgs) {
            return properly_connected(detail::coloring_from_rgs(g, rgs)).ok;
        });
        if (found) return k;
    }
    throw error(errc::disconnected, "solve_pc: no coloring works");  // unreachable
}

inline int solve_cfc(const Graph& g) {
    detail::require_connected(g);
    detail::check_partition_cap(g, "solve_cfc");
    if (g.m() == 0) return 0;  // K1
    for (int k = 1; k <= g.m(); ++k) {
        bool found = detail::enumerate_rgs(g.m(), k, [&](const std::vector<int>& rgs) {
            return conflict_free_connected(detail::coloring_from_rgs(g, rgs)).ok;
        });
        if (found) return k;
    }
    throw error(errc::disconnected, "solve_cfc: no coloring works");  // unreachable
}

// Maximum block count over edge partitions whose coloring keeps the color
// diameter at most k. Merging blocks never hurts, so feasible block counts
// are downward closed and the scan runs from m downward.
inline int solve_cck(const Graph& g, int k) {
    detail::require_connected(g);
    if (k < 1) throw error(errc::bad_input, "k must be >= 1");
    detail::check_partition_cap(g, "solve_cck");
    if (g.m() == 0) return 0;
    for (int blocks = g.m(); blocks >= 1; --blocks) {
        bool found = detail::enumerate_rgs(g.m(), blocks, [&](const std::vector<int>& rgs) {
            return is_k_color_connection(detail::coloring_from_rgs(g, rgs), k);
        });
        if (found) return blocks;
    }
    throw error(errc::disconnected, "solve_cck: no coloring works");  // unreachable
}

inline int solve_mc(const Graph& g) { return solve_cck(g, 1); }

struct SolveResult {
    int value = 0;
    std::vector<int> colors;  // one optimal coloring, per edge id
};

// value plus the first optimal partition in enumeration order
inline SolveResult solve_pc_witness(const Graph& g) {
    SolveResult r;
    r.value = solve_pc(g);
    detail::enumerate_rgs(g.m(), r.value, [&](const std::vector<int>& rgs) {
        auto f = detail::coloring_from_rgs(g, rgs);
        if (!properly_connected(f).ok) return false;
        r.colors = f.colors();
        return true;
    });
    return r;
}

inline SolveResult solve_cfc_witness(const Graph& g) {
    SolveResult r;
    r.value = solve_cfc(g);
    detail::enumerate_rgs(g.m(), r.value, [&](const std::vector<int>& rgs) {
        auto f = detail::coloring_from_rgs(g, rgs);
        if (!conflict_free_connected(f).ok) return false;
        r.colors = f.colors();
        return true;
    });
    return r;
}

inline SolveResult solve_cck_witness(const Graph& g, int k) {
    SolveResult r;
    r.value = solve_cck(g, k);
    detail::enumerate_rgs(g.m(), r.value, [&](const std::vector<int>& rgs) {
        auto f = detail::coloring_from_rgs(g, rgs);
        if (!is_k_color_connection(f, k)) return false;
        r.colors = f.colors();
        return true;
    });
    return r;
}

// All extremal partitions (as block-count-maximal RGS colorings).
inline std::vector<EdgeColoring> solve_cck_extremal(const Graph& g, int k) {
    detail::require_connected(g);
    detail::check_partition_cap(g, "solve_cck_extremal");
    int best = solve_cck(g, k);
    std::vector<EdgeColoring> out;
    detail::enumerate_rgs(g.m(), best, [&](const std::vector<int>& rgs) {
        auto f = detail::coloring_from_rgs(g, rgs);
        if (is_k_color_connection(f, k)) out.push_back(f);
        return false;
    });
    return out;
}

// Two edge-disjoint Hamilton paths of K_n, n >= 4, built inductively: start
// from the K4 pair and attach each new vertex to one end of each path,
// choosing ends that differ so the two new edges are distinct.
inline std::pair<std::vector<int>, std::vector<int>> double_hamilton_paths(int n) {
    if (n < 4) throw error(errc::bad_input, "double_hamilton_paths needs n >= 4");
    std::vector<int> p1{1, 2, 3, 4};
    std::vector<int> p2{2, 4, 1, 3};
    for (int v = 5; v <= n; ++v) {
        p1.push_back(v);                       // attach at p1's back
        if (p2.back() != p1[p1.size() - 2]) {  // p1's old back
            p2.push_back(v);
        } else {
            p2.insert(p2.begin(), v);
        }
    }
    return {p1, p2};
}

struct HValueResult {
    int value = 0;
    bool has_cut_edges = false;
};

// h(G) = max cfc over components of the subgraph induced by the cut edges.
inline HValueResult h_value(const Graph& g) {
    detail::require_connected(g);
    auto bridges = cut_edges(g);
    if (bridges.empty()) return {0, false};
    detail::DSU dsu(g.n());
    for (int e : bridges) dsu.unite(g.edges()[e].first, g.edges()[e].second);
    std::map<int, std::vector<int>> comp_edges;
    for (int e : bridges) comp_edges[dsu.find(g.edges()[e].first)].push_back(e);
    int best = 0;
    for (auto& [root, eids] : comp_edges) {
        std::vector<int> verts;
        for (int e : eids) {
            verts.push_back(g.edges()[e].first);
            verts.push_back(g.edges()[e].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<std::string> labels;
        for (int v : verts) labels.push_back(g.label(v));
        std::vector<std::pair<std::string, std::string>> pairs;
        for (int e : eids)
            pairs.emplace_back(g.label(g.edges()[e].first), g.label(g.edges()[e].second));
        Graph sub(labels, pairs);
        best = std::max(best, solve_cfc(sub));
    }
    return {best, true};
}

}  // namespace ecc

#endif  // ECC_ORACLE_HPP
