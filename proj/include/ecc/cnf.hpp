#ifndef ECC_CNF_HPP
#define ECC_CNF_HPP

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "ecc/graph.hpp"

namespace ecc {

struct Literal {
    int var = 0;          // 1-based
    bool positive = true;
};

using Clause = std::array<Literal, 3>;

// 3-CNF where every clause has three distinct variables.
struct Cnf3Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    void validate() const {
        for (const auto& cl : clauses) {
            for (const auto& lit : cl)
                if (lit.var < 1 || lit.var > num_vars)
                    throw error(errc::bad_input, "literal variable out of range");
            if (cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var)
                throw error(errc::bad_input, "clause with repeated variable");
        }
    }

    int num_clauses() const { return static_cast<int>(clauses.size()); }

    // m_i = number of occurrences of each variable (1-based index)
    std::vector<int> occurrence_counts() const {
        std::vector<int> cnt(num_vars + 1, 0);
        for (const auto& cl : clauses)
            for (const auto& lit : cl) ++cnt[lit.var];
        return cnt;
    }
};

// assignment[i] = truth value of x_i, 1-based (index 0 unused)
using Assignment = std::vector<char>;

inline bool evaluates_true(const Cnf3Formula& phi, const Assignment& a) {
    for (const auto& cl : phi.clauses) {
        bool any = false;
        for (const auto& lit : cl)
            if (static_cast<bool>(a[lit.var]) == lit.positive) any = true;
        if (!any) return false;
    }
    return true;
}

inline bool nae_satisfies(const Cnf3Formula& phi, const Assignment& a) {
    for (const auto& cl : phi.clauses) {
        bool any_true = false, any_false = false;
        for (const auto& lit : cl) {
            if (static_cast<bool>(a[lit.var]) == lit.positive)
                any_true = true;
            else
                any_false = true;
        }
        if (!any_true || !any_false) return false;
    }
    return true;
}

// One record per occurrence of a variable: which clause, which slot, sign.
struct Occurrence {
    int clause = 0;  // 1-based
    int slot = 0;    // 1..3
    bool positive = true;
};

// occurrences[i] = ordered occurrence list of x_i; position in the list is
// the 1-based k used to address gadget copies.
inline std::vector<std::vector<Occurrence>> occurrence_index(const Cnf3Formula& phi) {
    std::vector<std::vector<Occurrence>> occ(phi.num_vars + 1);
    for (int j = 0; j < phi.num_clauses(); ++j)
        for (int r = 0; r < 3; ++r) {
            const Literal& lit = phi.clauses[j][r];
            occ[lit.var].push_back({j + 1, r + 1, lit.positive});
        }
    return occ;
}

// DIMACS CNF reader. Strict: header counts must match, clauses must have
// exactly three distinct variables.
inline Cnf3Formula parse_dimacs(std::istream& in) {
    Cnf3Formula phi;
    std::string line;
    bool have_header = false;
    std::vector<int> current;
    int clauses_declared = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            if (!(hs >> p >> fmt >> phi.num_vars >> clauses_declared) || fmt != "cnf")
                throw error(errc::bad_input, "malformed DIMACS header");
            have_header = true;
            continue;
        }
        if (!have_header) throw error(errc::bad_input, "clause before DIMACS header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw error(errc::bad_input, "clause must have exactly 3 literals");
                Clause cl;
                for (int i = 0; i < 3; ++i)
                    cl[i] = {std::abs(current[i]), current[i] > 0};
                phi.clauses.push_back(cl);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!have_header) throw error(errc::bad_input, "missing DIMACS header");
    if (!current.empty()) throw error(errc::bad_input, "unterminated clause");
    if (phi.num_clauses() != clauses_declared)
        throw error(errc::bad_input, "clause count does not match header");
    phi.validate();
    return phi;
}

inline std::string to_dimacs(const Cnf3Formula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << " " << phi.num_clauses() << "\n";
    for (const auto& cl : phi.clauses) {
        for (const auto& lit : cl) out << (lit.positive ? lit.var : -lit.var) << " ";
        out << "0\n";
    }
    return out.str();
}

}  // namespace ecc

#endif  // ECC_CNF_HPP
