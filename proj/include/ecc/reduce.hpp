#ifndef ECC_REDUCE_HPP
#define ECC_REDUCE_HPP

#include <array>
#include <set>

#include "ecc/cnf.hpp"
#include "ecc/graph.hpp"
#include "ecc/oracle.hpp"

namespace ecc {

// A reduction output: the graph plus the structured-role bookkeeping tests
// and the CLI need to address gadget parts by name.
struct GadgetGraph {
    Graph graph;
    // non-identity role aliases (e.g. an identified clause vertex); vertex
    // labels themselves already carry the structured names
    std::map<std::string, std::string> roles;
    // designated boundary edges per gadget id ("H[i][k]", "I[j]")
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> entries;
    struct Meta {
        std::string kind;            // "pc", "cfc", "cc1"
        int num_vars = 0;
        int num_clauses = 0;
        std::vector<int> occ_counts; // m_i, 1-based
    } meta;
    // cc1 extras
    std::vector<std::string> v0;
    std::vector<std::pair<std::string, std::string>> ham_path;
};

namespace detail {

inline std::string lbl(const std::string& base, int a) {
    return base + "[" + std::to_string(a) + "]";
}
inline std::string lbl(const std::string& base, int a, int b) {
    return base + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
}
inline std::string lbl(const std::string& base, int a, int b, int c) {
    return base + "[" + std::to_string(a) + "][" + std::to_string(b) + "][" +
           std::to_string(c) + "]";
}

inline void require_all_vars_occur(const Cnf3Formula& phi) {
    auto cnt = phi.occurrence_counts();
    for (int i = 1; i <= phi.num_vars; ++i)
        if (cnt[i] == 0)
            throw error(errc::bad_input,
                        "variable x" + std::to_string(i) + " never occurs; gadget undefined");
}

// slot (clause j, slot r) -> (variable, occurrence position k, sign)
struct SlotRef {
    int var = 0, k = 0;
    bool positive = true;
};

inline std::map<std::pair<int, int>, SlotRef> slot_map(const Cnf3Formula& phi) {
    std::map<std::pair<int, int>, SlotRef> out;
    auto occ = occurrence_index(phi);
    for (int i = 1; i <= phi.num_vars; ++i)
        for (size_t k = 0; k < occ[i].size(); ++k) {
            const Occurrence& o = occ[i][k];
            out[{o.clause, o.slot}] = {i, static_cast<int>(k) + 1, o.positive};
        }
    return out;
}

// helper that collects vertices/edges then builds the Graph
struct GraphSketch {
    std::vector<std::string> verts;
    std::set<std::string> vert_set;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> edge_set;

    void vertex(const std::string& v) {
        if (vert_set.insert(v).second) verts.push_back(v);
    }
    void edge(const std::string& a, const std::string& b) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (edge_set.insert(key).second) edges.push_back({a, b});
    }
    bool has_edge(const std::string& a, const std::string& b) const {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        return edge_set.count(key) != 0;
    }
    Graph build() const { return Graph(verts, edges); }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Proper connection reduction (deciding pc = 2)
// ---------------------------------------------------------------------------

inline GadgetGraph build_pc_reduction(const Cnf3Formula& phi) {
    using detail::lbl;
    phi.validate();
    detail::require_all_vars_occur(phi);
    auto slots = detail::slot_map(phi);
    auto occ_counts = phi.occurrence_counts();
    int n = phi.num_vars, m = phi.num_clauses();

    detail::GraphSketch g;
    GadgetGraph out;
    out.meta = {"pc", n, m, occ_counts};

    // variable gadgets H_{i,k}
    for (int i = 1; i <= n; ++i) {
        int mi = occ_counts[i];
        for (int k = 1; k <= mi; ++k)
            for (int t = 1; t <= 15; ++t) g.vertex(lbl("u", i, k, t));
        for (int t = 0; t <= 4; ++t) g.vertex(lbl("u", i, 0, t));
        for (int k = 1; k <= mi; ++k) {
            for (int t = 1; t < 8; ++t) g.edge(lbl("u", i, k, t), lbl("u", i, k, t + 1));
            g.edge(lbl("u", i, k, 9), lbl("u", i, k, 1));
            g.edge(lbl("u", i, k, 10), lbl("u", i, k, 1));
            g.edge(lbl("u", i, k, 11), lbl("u", i, k, 5));
            g.edge(lbl("u", i, k, 12), lbl("u", i, k, 7));
            g.edge(lbl("u", i, k, 13), lbl("u", i, k, 8));
            g.edge(lbl("u", i, k, 14), lbl("u", i, k, 8));
            g.edge(lbl("u", i, k, 15), lbl("u", i, k, 4));
            g.edge(lbl("u", i, k, 15), lbl("u", i, k, 7));
            g.edge(lbl("u", i, k, 7), lbl("u", i, k, 3));
            if (k < mi) g.edge(lbl("u", i, k, 15), lbl("u", i, k + 1, 1));
        }
        g.edge(lbl("u", i, 0, 0), lbl("u", i, 1, 1));
        g.edge(lbl("u", i, 0, 2), lbl("u", i, mi, 15));
        g.edge(lbl("u", i, 0, 3), lbl("u", i, 0, 2));
        g.edge(lbl("u", i, 0, 4), lbl("u", i, 0, 2));
        g.edge(lbl("u", i, 0, 1), lbl("u", i, 0, 2));
    }

    // clause gadgets I_j; w vertices exist only for positive literals, a
    // negative literal identifies w_r with the occurrence's u8
    for (int j = 1; j <= m; ++j) {
        for (int t = 0; t <= 11; ++t) g.vertex(lbl("v", j, t));
        g.edge(lbl("v", j, 0), lbl("v", j, 1));
        g.edge(lbl("v", j, 1), lbl("v", j, 5));
        g.edge(lbl("v", j, 5), lbl("v", j, 4));
        g.edge(lbl("v", j, 0), lbl("v", j, 2));
        g.edge(lbl("v", j, 2), lbl("v", j, 6));
        g.edge(lbl("v", j, 6), lbl("v", j, 4));
        g.edge(lbl("v", j, 0), lbl("v", j, 3));
        g.edge(lbl("v", j, 3), lbl("v", j, 7));
        g.edge(lbl("v", j, 7), lbl("v", j, 4));
        g.edge(lbl("v", j, 8), lbl("v", j, 4));
        g.edge(lbl("v", j, 9), lbl("v", j, 8));
        g.edge(lbl("v", j, 10), lbl("v", j, 8));
        g.edge(lbl("v", j, 8), lbl("v", j, 11));
        for (int r = 1; r <= 3; ++r) {
            auto ref = slots.at({j, r});
            std::string u8 = lbl("u", ref.var, ref.k, 8);
            if (ref.positive) {
                std::string w = lbl("w", j, r);
                g.vertex(w);
                g.edge(w, lbl("v", j, r));
                g.edge(u8, w);
            } else {
                out.roles[lbl("w", j, r)] = u8;  // identified
                g.edge(u8, lbl("v", j, r));
            }
        }
    }

    // complete graph on S
    g.vertex("s");
    std::vector<std::string> S;
    for (int i = 1; i <= n; ++i) {
        S.push_back(lbl("u", i, 0, 0));
        S.push_back(lbl("u", i, 0, 1));
    }
    for (int j = 1; j <= m; ++j) S.push_back(lbl("v", j, 11));
    S.push_back("s");
    for (size_t a = 0; a < S.size(); ++a)
        for (size_t b = a + 1; b < S.size(); ++b) g.edge(S[a], S[b]);

    // entries per H_{i,k}: left chain edge, right chain edge, u7u8
    for (int i = 1; i <= n; ++i) {
        int mi = occ_counts[i];
        for (int k = 1; k <= mi; ++k) {
            std::string left_a = k == 1 ? lbl("u", i, 0, 0) : lbl("u", i, k - 1, 15);
            std::string left_b = lbl("u", i, k, 1);
            std::string right_a = lbl("u", i, k, 15);
            std::string right_b = k == mi ? lbl("u", i, 0, 2) : lbl("u", i, k + 1, 1);
            out.entries[lbl("H", i, k)] = {{left_a, left_b},
                                           {right_a, right_b},
                                           {lbl("u", i, k, 7), lbl("u", i, k, 8)}};
        }
    }
    // the four edges of the clause parity argument
    for (int j = 1; j <= m; ++j) {
        std::vector<std::pair<std::string, std::string>> es;
        for (int r = 1; r <= 3; ++r) {
            auto ref = slots.at({j, r});
            std::string w = ref.positive ? lbl("w", j, r) : lbl("u", ref.var, ref.k, 8);
            es.push_back({lbl("v", j, r), w});
        }
        es.push_back({lbl("v", j, 4), lbl("v", j, 8)});
        out.entries[lbl("I", j)] = es;
    }

    out.graph = g.build();
    return out;
}

// The sufficiency 2-coloring for the pc reduction. Follows the paper's
// recipe with one repair: the gadget edge u7u8 gets the same color as the
// chain entries (the recipe's own Claim forces the three entries to share a
// color, and exhaustive gadget enumeration shows that interior is the only
// valid one).
inline std::vector<int> pc_certificate_coloring(const GadgetGraph& gg, const Cnf3Formula& phi,
                                                const Assignment& A) {
    using detail::lbl;
    if (gg.meta.kind != "pc") throw error(errc::bad_input, "gadget kind mismatch");
    if (!nae_satisfies(phi, A))
        throw error(errc::bad_input, "assignment does not NAE-satisfy the formula");
    auto slots = detail::slot_map(phi);
    const Graph& g = gg.graph;
    int n = phi.num_vars, m = phi.num_clauses();
    auto occ_counts = phi.occurrence_counts();

    std::vector<int> colors(g.m(), 0);
    auto paint = [&](const std::string& a, const std::string& b, int c) {
        colors[g.edge_id(g.index_of(a), g.index_of(b))] = c;
    };
    auto painted = [&](const std::string& a, const std::string& b) {
        return colors[g.edge_id(g.index_of(a), g.index_of(b))];
    };

    for (int i = 1; i <= n; ++i) {
        int mi = occ_counts[i];
        int T = A[i] ? 2 : 1, U = 3 - T;
        paint(lbl("u", i, 0, 0), lbl("u", i, 1, 1), T);
        for (int k = 1; k <= mi; ++k) {
            std::string right_b = k == mi ? lbl("u", i, 0, 2) : lbl("u", i, k + 1, 1);
            paint(lbl("u", i, k, 9), lbl("u", i, k, 1), T);
            paint(lbl("u", i, k, 2), lbl("u", i, k, 3), T);
            paint(lbl("u", i, k, 4), lbl("u", i, k, 5), T);
            paint(lbl("u", i, k, 6), lbl("u", i, k, 7), T);
            paint(lbl("u", i, k, 8), lbl("u", i, k, 13), T);
            paint(lbl("u", i, k, 15), right_b, T);
            paint(lbl("u", i, k, 7), lbl("u", i, k, 8), T);  // repaired entry
            paint(lbl("u", i, k, 1), lbl("u", i, k, 2), U);
            paint(lbl("u", i, k, 3), lbl("u", i, k, 4), U);
            paint(lbl("u", i, k, 5), lbl("u", i, k, 6), U);
            paint(lbl("u", i, k, 10), lbl("u", i, k, 1), U);
            paint(lbl("u", i, k, 11), lbl("u", i, k, 5), U);
            paint(lbl("u", i, k, 12), lbl("u", i, k, 7), U);
            paint(lbl("u", i, k, 14), lbl("u", i, k, 8), U);
            paint(lbl("u", i, k, 15), lbl("u", i, k, 4), U);
            paint(lbl("u", i, k, 15), lbl("u", i, k, 7), U);
            paint(lbl("u", i, k, 7), lbl("u", i, k, 3), U);
        }
        paint(lbl("u", i, 0, 2), lbl("u", i, 0, 3), T);
        paint(lbl("u", i, 0, 2), lbl("u", i, 0, 4), U);
        paint(lbl("u", i, 0, 2), lbl("u", i, 0, 1), U);
    }

    for (int j = 1; j <= m; ++j) {
        int ones = 0;
        std::array<int, 4> c{};  // c[r] = literal edge color, r = 1..3
        for (int r = 1; r <= 3; ++r) {
            auto ref = slots.at({j, r});
            int Ti = A[ref.var] ? 2 : 1;
            c[r] = ref.positive ? Ti : 3 - Ti;
            if (c[r] == 1) ++ones;
            std::string w = ref.positive ? lbl("w", j, r) : lbl("u", ref.var, ref.k, 8);
            paint(lbl("v", j, r), w, c[r]);
            if (ref.positive) paint(lbl("u", ref.var, ref.k, 8), w, 3 - c[r]);
        }
        int v48 = ones == 2 ? 2 : 1;  // balance the four-edge set two against two
        paint(lbl("v", j, 4), lbl("v", j, 8), v48);
        // one slot whose literal color differs from the balance color plays
        // the alternate door into v4, with its three-path colors flipped;
        // with a single door the only proper route to v8's off-balance
        // pendant would run through vertices that access paths consume
        int flip = 0;
        for (int r = 1; r <= 3 && flip == 0; ++r)
            if (c[r] != v48) flip = r;
        for (int r = 1; r <= 3; ++r) {
            // v0-vr opposite to the literal edge (else vr is a monochromatic
            // star and w_r cannot be entered from the clause side), except on
            // the flipped slot where the roles of the two path edges swap
            if (r == flip) {
                paint(lbl("v", j, 0), lbl("v", j, r), c[r]);
                paint(lbl("v", j, r), lbl("v", j, r + 4), 3 - c[r]);
                paint(lbl("v", j, 4), lbl("v", j, r + 4), c[r]);
            } else {
                paint(lbl("v", j, 0), lbl("v", j, r), 3 - c[r]);
                paint(lbl("v", j, r), lbl("v", j, r + 4), c[r]);
                paint(lbl("v", j, 4), lbl("v", j, r + 4), 3 - c[r]);
            }
        }
        paint(lbl("v", j, 8), lbl("v", j, 9), v48);
        paint(lbl("v", j, 8), lbl("v", j, 10), 3 - v48);
        paint(lbl("v", j, 8), lbl("v", j, 11), 3 - v48);
    }

    // clique: every p in S except s has a unique outside neighbor q; ps is
    // colored opposite to pq, and p1p2 copies the shared ps color (1 when
    // they differ - that part the paper leaves arbitrary)
    std::vector<std::pair<std::string, int>> s_colors;
    for (int i = 1; i <= n; ++i) {
        int ext0 = painted(lbl("u", i, 0, 0), lbl("u", i, 1, 1));
        int ext1 = painted(lbl("u", i, 0, 1), lbl("u", i, 0, 2));
        s_colors.push_back({lbl("u", i, 0, 0), 3 - ext0});
        s_colors.push_back({lbl("u", i, 0, 1), 3 - ext1});
    }
    for (int j = 1; j <= m; ++j) {
        int ext = painted(lbl("v", j, 8), lbl("v", j, 11));
        s_colors.push_back({lbl("v", j, 11), 3 - ext});
    }
    for (auto& [p, cp] : s_colors) paint(p, "s", cp);
    for (size_t a = 0; a < s_colors.size(); ++a)
        for (size_t b = a + 1; b < s_colors.size(); ++b) {
            int cp = s_colors[a].second == s_colors[b].second ? s_colors[a].second : 1;
            paint(s_colors[a].first, s_colors[b].first, cp);
        }

    for (int e = 0; e < g.m(); ++e)
        if (colors[e] == 0) throw error(errc::bad_coloring, "uncolored edge in pc certificate");
    return colors;
}

// ---------------------------------------------------------------------------
// Conflict-free connection reduction (deciding cfc = 2 when h = 2)
// ---------------------------------------------------------------------------

inline GadgetGraph build_cfc_reduction(const Cnf3Formula& phi) {
    using detail::lbl;
    phi.validate();
    detail::require_all_vars_occur(phi);
    auto slots = detail::slot_map(phi);
    int n = phi.num_vars, m = phi.num_clauses();

    detail::GraphSketch g;
    GadgetGraph out;
    out.meta = {"cfc", n, m, phi.occurrence_counts()};

    // variable gadgets
    for (int i = 1; i <= n; ++i) {
        for (int t = 0; t <= 8; ++t) g.vertex(lbl("t", i, t));
        // K4 on t3..t6
        for (int a = 3; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b) g.edge(lbl("t", i, a), lbl("t", i, b));
        g.edge(lbl("t", i, 7), lbl("t", i, 6));
        g.edge(lbl("t", i, 8), lbl("t", i, 6));
        // 5-cycle t0 t1 t3 t4 t2 t0 (t3t4 already present)
        g.edge(lbl("t", i, 0), lbl("t", i, 1));
        g.edge(lbl("t", i, 1), lbl("t", i, 3));
        g.edge(lbl("t", i, 4), lbl("t", i, 2));
        g.edge(lbl("t", i, 2), lbl("t", i, 0));
    }

    // clause gadgets: three blocks (slot 1 -> "u", 2 -> "v", 3 -> "w"),
    // hub triangle, literal entries
    const char* block_name[4] = {"", "u", "v", "w"};
    for (int j = 1; j <= m; ++j) {
        for (int r = 1; r <= 3; ++r) {
            for (int t = 0; t <= 5; ++t) g.vertex(lbl(block_name[r], j, t));
            for (int a = 0; a <= 3; ++a)
                for (int b = a + 1; b <= 3; ++b)
                    g.edge(lbl(block_name[r], j, a), lbl(block_name[r], j, b));
            g.edge(lbl(block_name[r], j, 4), lbl(block_name[r], j, 3));
            g.edge(lbl(block_name[r], j, 5), lbl(block_name[r], j, 3));
        }
        g.edge(lbl("u", j, 0), lbl("v", j, 0));
        g.edge(lbl("v", j, 0), lbl("w", j, 0));
        g.edge(lbl("u", j, 0), lbl("w", j, 0));
        std::vector<std::pair<std::string, std::string>> ent;
        for (int r = 1; r <= 3; ++r) {
            auto ref = slots.at({j, r});
            std::string target = lbl("t", ref.var, ref.positive ? 1 : 2);
            g.edge(lbl(block_name[r], j, 0), target);
            ent.push_back({lbl(block_name[r], j, 0), target});
        }
        out.entries[lbl("I", j)] = ent;
    }

    // complete graph on the t0's plus s0, and the pendant path s0 s1 s2
    g.vertex("s0");
    g.vertex("s1");
    g.vertex("s2");
    std::vector<std::string> hub;
    for (int i = 1; i <= n; ++i) hub.push_back(lbl("t", i, 0));
    hub.push_back("s0");
    for (size_t a = 0; a < hub.size(); ++a)
        for (size_t b = a + 1; b < hub.size(); ++b) g.edge(hub[a], hub[b]);
    g.edge("s0", "s1");
    g.edge("s1", "s2");

    out.graph = g.build();
    return out;
}

namespace detail {

// color the double Hamilton paths of a complete block: first path 1, second 2
inline void paint_double_ham(const Graph& g, std::vector<int>& colors,
                             const std::vector<std::string>& block) {
    auto [p1, p2] = double_hamilton_paths(static_cast<int>(block.size()));
    auto paint_path = [&](const std::vector<int>& p, int c) {
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            int e = g.edge_id(g.index_of(block[p[i] - 1]), g.index_of(block[p[i + 1] - 1]));
            colors[e] = c;
        }
    };
    paint_path(p1, 1);
    paint_path(p2, 2);
    // leftover clique edges (order >= 5) can take any color
    for (size_t a = 0; a < block.size(); ++a)
        for (size_t b = a + 1; b < block.size(); ++b) {
            int e = g.edge_id(g.index_of(block[a]), g.index_of(block[b]));
            if (colors[e] == 0) colors[e] = 1;
        }
}

}  // namespace detail

inline std::vector<int> cfc_certificate_coloring(const GadgetGraph& gg, const Cnf3Formula& phi,
                                                 const Assignment& A) {
    using detail::lbl;
    if (gg.meta.kind != "cfc") throw error(errc::bad_input, "gadget kind mismatch");
    if (!nae_satisfies(phi, A))
        throw error(errc::bad_input, "assignment does not NAE-satisfy the formula");
    auto slots = detail::slot_map(phi);
    const Graph& g = gg.graph;
    int n = phi.num_vars, m = phi.num_clauses();

    std::vector<int> colors(g.m(), 0);
    auto paint = [&](const std::string& a, const std::string& b, int c) {
        colors[g.edge_id(g.index_of(a), g.index_of(b))] = c;
    };

    const char* block_name[4] = {"", "u", "v", "w"};
    for (int i = 1; i <= n; ++i) {
        int T = A[i] ? 2 : 1;
        paint(lbl("t", i, 0), lbl("t", i, 1), T);
        paint(lbl("t", i, 1), lbl("t", i, 3), T);
        paint(lbl("t", i, 4), lbl("t", i, 2), 3 - T);
        paint(lbl("t", i, 2), lbl("t", i, 0), 3 - T);
        paint(lbl("t", i, 7), lbl("t", i, 6), 1);
        paint(lbl("t", i, 8), lbl("t", i, 6), 2);
        detail::paint_double_ham(g, colors,
                                 {lbl("t", i, 3), lbl("t", i, 4), lbl("t", i, 5), lbl("t", i, 6)});
    }

    for (int j = 1; j <= m; ++j) {
        std::array<int, 4> c{};
        for (int r = 1; r <= 3; ++r) {
            auto ref = slots.at({j, r});
            int Ti = A[ref.var] ? 2 : 1;
            c[r] = ref.positive ? Ti : 3 - Ti;  // color of the edges at t1/t2
            std::string target = lbl("t", ref.var, ref.positive ? 1 : 2);
            paint(lbl(block_name[r], j, 0), target, c[r]);
        }
        // hub triangle: the two same-colored entries a < b with color q, odd
        // hub z: ab and az get the opposite color, bz gets q
        int a = -1, b = -1, z = -1;
        for (int r = 1; r <= 3 && a == -1; ++r)
            for (int t = r + 1; t <= 3; ++t)
                if (c[r] == c[t]) {
                    a = r;
                    b = t;
                    z = 6 - r - t;
                    break;
                }
        int q = c[a];
        paint(lbl(block_name[a], j, 0), lbl(block_name[b], j, 0), 3 - q);
        paint(lbl(block_name[a], j, 0), lbl(block_name[z], j, 0), 3 - q);
        paint(lbl(block_name[b], j, 0), lbl(block_name[z], j, 0), q);
        for (int r = 1; r <= 3; ++r) {
            paint(lbl(block_name[r], j, 4), lbl(block_name[r], j, 3), 1);
            paint(lbl(block_name[r], j, 5), lbl(block_name[r], j, 3), 2);
            detail::paint_double_ham(g, colors,
                                     {lbl(block_name[r], j, 0), lbl(block_name[r], j, 1),
                                      lbl(block_name[r], j, 2), lbl(block_name[r], j, 3)});
        }
    }

    std::vector<std::string> hub;
    for (int i = 1; i <= n; ++i) hub.push_back(lbl("t", i, 0));
    hub.push_back("s0");
    detail::paint_double_ham(g, colors, hub);
    paint("s0", "s1", 1);
    paint("s1", "s2", 2);

    for (int e = 0; e < g.m(); ++e)
        if (colors[e] == 0) throw error(errc::bad_coloring, "uncolored edge in cfc certificate");
    return colors;
}

// ---------------------------------------------------------------------------
// Monochromatic connection reduction (cc1 lower-bound gap)
// ---------------------------------------------------------------------------

inline GadgetGraph build_cc1_reduction(const Cnf3Formula& phi) {
    using detail::lbl;
    phi.validate();
    detail::require_all_vars_occur(phi);
    auto slots = detail::slot_map(phi);
    auto occ = occurrence_index(phi);
    auto occ_counts = phi.occurrence_counts();
    int n = phi.num_vars, m = phi.num_clauses();

    // assemble the complement first
    detail::GraphSketch bar;
    GadgetGraph out;
    out.meta = {"cc1", n, m, occ_counts};

    for (int i = 1; i <= n; ++i) {
        int mi = occ_counts[i];
        for (int t = 1; t <= 6 * mi; ++t) bar.vertex(lbl("u", i, t));
        for (int t = 1; t <= 2 * mi; ++t) bar.vertex(lbl("v", i, t));
        for (int t = 1; t <= 3 * mi; ++t) bar.vertex(lbl("w", i, t));
        for (int t = 1; t <= 6 * mi; ++t)
            bar.edge(lbl("u", i, t), lbl("u", i, t % (6 * mi) + 1));
        for (int k = 1; k <= mi; ++k) {
            bar.edge(lbl("u", i, 6 * k - 5), lbl("v", i, 2 * k - 1));
            bar.edge(lbl("v", i, 2 * k - 1), lbl("v", i, 2 * k));
        }
    }
    for (int j = 1; j <= m; ++j) {
        for (int t = 1; t <= 5; ++t) bar.vertex(lbl("s", j, t));
        for (int t = 1; t < 5; ++t) bar.edge(lbl("s", j, t), lbl("s", j, t + 1));
    }
    bar.vertex("s");
    for (int j = 1; j <= m; ++j) bar.edge(lbl("s", j, 3), "s");

    for (int i = 1; i <= n; ++i)
        for (size_t kk = 0; kk < occ[i].size(); ++kk) {
            int k = static_cast<int>(kk) + 1;
            const Occurrence& o = occ[i][kk];
            std::string w3k = lbl("w", i, 3 * k), w31 = lbl("w", i, 3 * k - 1),
                        w32 = lbl("w", i, 3 * k - 2);
            bar.edge(w3k, lbl("s", o.clause, 4));
            bar.edge(w3k, w31);
            bar.edge(w3k, w32);
            if (o.positive) {
                bar.edge(w3k, lbl("u", i, 6 * k - 1));
                bar.edge(w31, lbl("u", i, 6 * k - 2));
                bar.edge(w32, lbl("u", i, 6 * k - 3));
            } else {
                bar.edge(w3k, lbl("u", i, 6 * k - 5));
                bar.edge(w31, lbl("u", i, 6 * k - 4));
                bar.edge(w32, lbl("u", i, 6 * k - 3));
            }
        }

    // V0 clique minus a Hamilton path P; P follows the plain string order of
    // the labels (any Hamilton path works, this one is reproducible)
    std::vector<std::string> v0;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= occ_counts[i]; ++k) {
            v0.push_back(lbl("v", i, 2 * k));
            v0.push_back(lbl("u", i, 6 * k - 2));
        }
    for (int j = 1; j <= m; ++j) v0.push_back(lbl("s", j, 1));
    std::sort(v0.begin(), v0.end());
    out.v0 = v0;
    for (size_t a = 0; a + 1 < v0.size(); ++a) out.ham_path.push_back({v0[a], v0[a + 1]});
    std::set<std::pair<std::string, std::string>> on_p;
    for (auto& [a, b] : out.ham_path) on_p.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    for (size_t a = 0; a < v0.size(); ++a)
        for (size_t b = a + 1; b < v0.size(); ++b) {
            auto key = v0[a] < v0[b] ? std::make_pair(v0[a], v0[b]) : std::make_pair(v0[b], v0[a]);
            if (!on_p.count(key)) bar.edge(v0[a], v0[b]);
        }

    // complement
    detail::GraphSketch g;
    for (const auto& v : bar.verts) g.vertex(v);
    for (size_t a = 0; a < bar.verts.size(); ++a)
        for (size_t b = a + 1; b < bar.verts.size(); ++b)
            if (!bar.has_edge(bar.verts[a], bar.verts[b])) g.edge(bar.verts[a], bar.verts[b]);
    out.graph = g.build();
    return out;
}

// the per-tree waste ledger alongside the coloring
struct Cc1Certificate {
    std::vector<int> colors;
    std::vector<int> tree_waste;  // waste of each nontrivial color tree
    int total_waste = 0;
};

// Covering color-tree family for the cc1 certificate. The shapes are
// machine-optimal per occurrence (total waste 9, or the paper's 8 is not
// attainable - see the paper's own budget for comparison): the one shared
// tree on P, three trees per occurrence, and a Lemma-7-tight clause family
// whose star sits on the first true literal.
inline Cc1Certificate cc1_certificate_coloring(const GadgetGraph& gg, const Cnf3Formula& phi,
                                               const Assignment& A) {
    using detail::lbl;
    if (gg.meta.kind != "cc1") throw error(errc::bad_input, "gadget kind mismatch");
    if (!evaluates_true(phi, A))
        throw error(errc::bad_input, "assignment does not satisfy the formula");
    const Graph& g = gg.graph;
    auto occ = occurrence_index(phi);
    int n = phi.num_vars, m = phi.num_clauses();

    Cc1Certificate cert;
    cert.colors.assign(g.m(), 0);
    int next_color = 0;

    auto tree = [&](const std::vector<std::pair<std::string, std::string>>& es) {
        ++next_color;
        for (auto& [a, b] : es) {
            int e = g.edge_id(g.index_of(a), g.index_of(b));
            if (cert.colors[e] != 0)
                throw error(errc::bad_coloring, "certificate trees are not edge-disjoint");
            cert.colors[e] = next_color;
        }
        cert.tree_waste.push_back(static_cast<int>(es.size()) - 1);
        cert.total_waste += static_cast<int>(es.size()) - 1;
    };

    tree(gg.ham_path);  // the V0 path

    for (int i = 1; i <= n; ++i) {
        int mi = static_cast<int>(occ[i].size());
        for (int k = 1; k <= mi; ++k) {
            auto U = [&](int idx) {  // cycle vertex u_{i,idx} with wraparound
                int t = ((idx - 1) % (6 * mi) + 6 * mi) % (6 * mi) + 1;
                return lbl("u", i, t);
            };
            std::string u65 = U(6 * k - 5), u64 = U(6 * k - 4), u63 = U(6 * k - 3),
                        u62 = U(6 * k - 2), u61 = U(6 * k - 1), u6k = U(6 * k),
                        u6k1 = U(6 * k + 1);
            std::string v21 = lbl("v", i, 2 * k - 1), v2k = lbl("v", i, 2 * k);
            std::string w3k = lbl("w", i, 3 * k), w31 = lbl("w", i, 3 * k - 1),
                        w32 = lbl("w", i, 3 * k - 2);
            if (occ[i][k - 1].positive) {
                tree({{u65, v2k}, {v2k, u64}, {u64, v21}});
                tree({{u61, u63}, {u63, w31}, {w31, w32}, {w32, u62}, {u62, w3k}});
                tree({{u63, u6k}, {u6k, u64}, {u64, u61}, {u61, u6k1}});
            } else {
                tree({{u65, v2k}, {v2k, u64}, {u64, v21}, {w3k, v2k}});
                tree({{w3k, u62}, {u62, u64}, {u64, w32}, {w32, w31}, {w31, u63}});
                tree({{u61, u6k1}, {u6k1, u62}, {u62, u6k}});
            }
        }
    }

    for (int j = 1; j <= m; ++j) {
        tree({{lbl("s", j, 2), "s"}, {"s", lbl("s", j, 1)}, {lbl("s", j, 1), lbl("s", j, 3)}});
        int true_slot = -1;
        for (int r = 1; r <= 3 && true_slot == -1; ++r) {
            const Literal& lit = phi.clauses[j - 1][r - 1];
            if (static_cast<bool>(A[lit.var]) == lit.positive) true_slot = r;
        }
        auto slot_anchor = [&](int r) {  // (u_{6k-4}, w_{3k}) of slot r's occurrence
            const Literal& lit = phi.clauses[j - 1][r - 1];
            int k = 0;
            for (size_t kk = 0; kk < occ[lit.var].size(); ++kk)
                if (occ[lit.var][kk].clause == j && occ[lit.var][kk].slot == r)
                    k = static_cast<int>(kk) + 1;
            return std::make_pair(lbl("u", lit.var, 6 * k - 4), lbl("w", lit.var, 3 * k));
        };
        auto [tu, tw] = slot_anchor(true_slot);
        tree({{tu, lbl("s", j, 3)}, {tu, lbl("s", j, 4)}, {tu, lbl("s", j, 5)}, {tu, tw}});
        for (int r = 1; r <= 3; ++r) {
            if (r == true_slot) continue;
            auto [fu, fw] = slot_anchor(r);
            tree({{fw, fu}, {fu, lbl("s", j, 4)}});
        }
    }

    for (int e = 0; e < g.m(); ++e)
        if (cert.colors[e] == 0) cert.colors[e] = ++next_color;
    return cert;
}

// ---------------------------------------------------------------------------
// Exhaustive reproduction of the pc Claim on one gadget
// ---------------------------------------------------------------------------

struct ClaimCheckReport {
    std::array<int, 3> entry_colors{};  // left, right, u7u8
    bool extension_exists = false;
    long long valid_extensions = 0;
    long long colorings_checked = 0;
};

// One H_{i,k} with its three entries, the right neighbor's pendant pair, the
// clause-side edge at u8, and the rest of the graph abstracted to a two-vertex
// transit corridor joining the boundary stubs. For each 2-coloring of the
// free edges, checks whether all pendant pairs are properly connected by
// paths inside this model. The paper's Claim corresponds to: extensions exist
// exactly for monochromatic entry triples.
inline ClaimCheckReport gadget_claim_check_pc(const std::array<int, 3>& entry_colors) {
    for (int c : entry_colors)
        if (c != 1 && c != 2) throw error(errc::bad_input, "entry colors must be 1 or 2");

    // vertices: u1..u15 = 1..15, A=16, B=17, B9=18, B10=19, W=20, O1=21, O2=22
    std::vector<std::pair<int, int>> edges = {
        {16, 1}, {15, 17}, {7, 8},  // entries first
        {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
        {9, 1}, {10, 1}, {11, 5}, {12, 7}, {13, 8}, {14, 8},
        {15, 4}, {15, 7}, {7, 3},
        {17, 18}, {17, 19},
        {8, 20},
        {16, 21}, {21, 22}, {22, 17}, {20, 21}, {20, 22}};
    int ne = static_cast<int>(edges.size());
    std::vector<std::vector<std::pair<int, int>>> adj(23);
    for (int e = 0; e < ne; ++e) {
        adj[edges[e].first].push_back({edges[e].second, e});
        adj[edges[e].second].push_back({edges[e].first, e});
    }
    std::vector<int> pend{9, 10, 11, 12, 13, 14, 18, 19};
    std::vector<std::pair<int, int>> pairs;
    for (size_t a = 0; a < pend.size(); ++a)
        for (size_t b = a + 1; b < pend.size(); ++b) pairs.push_back({pend[a], pend[b]});

    std::vector<int> color(ne);
    color[0] = entry_colors[0];
    color[1] = entry_colors[1];
    color[2] = entry_colors[2];

    std::function<bool(int, int, int, unsigned)> dfs = [&](int v, int target, int last,
                                                           unsigned vis) -> bool {
        if (v == target) return true;
        for (auto [w, e] : adj[v]) {
            if (vis & (1u << w)) continue;
            if (color[e] == last) continue;
            if (dfs(w, target, color[e], vis | (1u << w))) return true;
        }
        return false;
    };

    ClaimCheckReport rep;
    rep.entry_colors = entry_colors;
    int free_edges = ne - 3;
    for (long long mask = 0; mask < (1ll << free_edges); ++mask) {
        for (int i = 0; i < free_edges; ++i) color[3 + i] = 1 + ((mask >> i) & 1);
        ++rep.colorings_checked;
        bool ok = true;
        for (auto [a, b] : pairs)
            if (!dfs(a, b, 0, 1u << a)) {
                ok = false;
                break;
            }
        if (ok) {
            ++rep.valid_extensions;
            rep.extension_exists = true;
        }
    }
    return rep;
}

}  // namespace ecc

#endif  // ECC_REDUCE_HPP
