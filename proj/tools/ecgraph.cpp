// ecgraph: edge-colored graph connectivity front end.
//
// Subcommands: reduce, verify, solve, tree-cck, export-dot.
// Exit codes: 0 = yes/success, 1 = property fails, 2 = usage/format/capacity.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "ecc/io.hpp"
#include "ecc/oracle.hpp"
#include "ecc/reduce.hpp"
#include "ecc/tree.hpp"
#include "ecc/verify.hpp"

using namespace ecc;
using Clock = std::chrono::steady_clock;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::bad_input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::bad_input, "cannot write " + path);
    out << data;
    if (!out) throw error(errc::bad_input, "write failed for " + path);
}

std::string hex_digest(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(data)));
    return buf;
}

ordered_json witness_json(const Graph& g, const path_witness& w) {
    ordered_json j;
    ordered_json verts = ordered_json::array();
    for (int v : w.vertices) verts.push_back(g.label(v));
    j["vertices"] = verts;
    j["colors"] = w.colors;
    if (w.unique_color) j["unique_color"] = w.unique_color;
    return j;
}

ordered_json result_header(const std::string& command,
                           const std::vector<std::pair<std::string, std::string>>& inputs) {
    ordered_json j;
    j["command"] = command;
    ordered_json in;
    for (auto& [name, data] : inputs) in[name] = hex_digest(data);
    j["inputs"] = in;
    return j;
}

void emit(ordered_json& j, Clock::time_point t0) {
    j["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << j.dump(2) << "\n";
}

int cmd_reduce(const std::string& kind, const std::string& formula_file,
               const std::string& out_file, bool certificate) {
    auto t0 = Clock::now();
    std::string text = slurp(formula_file);
    std::istringstream in(text);
    Cnf3Formula phi = parse_dimacs(in);

    GadgetGraph gg;
    std::vector<int> colors;
    bool have_colors = false;
    if (kind == "pc") {
        gg = build_pc_reduction(phi);
        if (certificate) {
            auto A = nae3sat_solve(phi);
            if (!A) {
                std::cerr << "formula is not NAE-satisfiable; no certificate\n";
                return 1;
            }
            colors = pc_certificate_coloring(gg, phi, *A);
            have_colors = true;
        }
    } else if (kind == "cfc") {
        gg = build_cfc_reduction(phi);
        if (certificate) {
            auto A = nae3sat_solve(phi);
            if (!A) {
                std::cerr << "formula is not NAE-satisfiable; no certificate\n";
                return 1;
            }
            colors = cfc_certificate_coloring(gg, phi, *A);
            have_colors = true;
        }
    } else if (kind == "mc") {
        gg = build_cc1_reduction(phi);
        if (certificate) {
            auto A = sat3_solve(phi);
            if (!A) {
                std::cerr << "formula is not satisfiable; no certificate\n";
                return 1;
            }
            colors = cc1_certificate_coloring(gg, phi, *A).colors;
            have_colors = true;
        }
    } else {
        throw error(errc::bad_input, "unknown reduce kind: " + kind);
    }

    GraphDocument doc;
    if (have_colors) {
        doc = make_document(gg.graph, &colors);
        GraphDocument plain = make_document(gg);
        doc.roles = plain.roles;
        doc.meta = plain.meta;
    } else {
        doc = make_document(gg);
    }
    spit(out_file, serialize(doc));

    ordered_json j = result_header("reduce " + kind, {{formula_file, text}});
    j["vertices"] = gg.graph.n();
    j["edges"] = gg.graph.m();
    j["certificate"] = have_colors;
    emit(j, t0);
    return 0;
}

int cmd_verify(const std::string& kind, const std::string& graph_file, int k) {
    auto t0 = Clock::now();
    std::string text = slurp(graph_file);
    GraphDocument doc = parse_document(text);
    Graph g = doc.to_graph();
    EdgeColoring f(g, doc.edge_colors(g));

    ordered_json j = result_header("verify " + kind, {{graph_file, text}});
    bool ok;
    connectivity_result res;
    if (kind == "mono") {
        res = monochromatic_connected(f);
        ok = res.ok;
    } else if (kind == "proper") {
        res = properly_connected(f);
        ok = res.ok;
    } else if (kind == "cfc") {
        res = conflict_free_connected(f);
        ok = res.ok;
    } else if (kind == "cck") {
        if (k < 1) throw error(errc::bad_input, "verify cck requires -k");
        ok = is_k_color_connection(f, k);
        j["k"] = k;
    } else {
        throw error(errc::bad_input, "unknown verify kind: " + kind);
    }
    j["verdict"] = ok;
    if (!ok && res.failing_pair) {
        j["failing_pair"] = {g.label(res.failing_pair->first),
                             g.label(res.failing_pair->second)};
    }
    if (ok && !res.witnesses.empty()) {
        ordered_json ws = ordered_json::array();
        for (const auto& pr : res.witnesses) {
            ordered_json w = witness_json(g, pr.witness);
            w["pair"] = {g.label(pr.u), g.label(pr.v)};
            ws.push_back(w);
        }
        j["witnesses"] = ws;
    }
    emit(j, t0);
    return ok ? 0 : 1;
}

int cmd_solve(const std::string& kind, const std::string& graph_file, int k) {
    auto t0 = Clock::now();
    std::string text = slurp(graph_file);
    GraphDocument doc = parse_document(text);
    if (doc.colored) throw error(errc::bad_input, "solve expects an uncolored graph");
    Graph g = doc.to_graph();

    SolveResult r;
    ordered_json j = result_header("solve " + kind, {{graph_file, text}});
    if (kind == "pc") {
        r = solve_pc_witness(g);
    } else if (kind == "cfc") {
        r = solve_cfc_witness(g);
    } else if (kind == "mc") {
        r = solve_cck_witness(g, 1);
    } else if (kind == "cck") {
        if (k < 1) throw error(errc::bad_input, "solve cck requires -k");
        r = solve_cck_witness(g, k);
        j["k"] = k;
    } else {
        throw error(errc::bad_input, "unknown solve kind: " + kind);
    }
    j["value"] = r.value;
    GraphDocument colored = make_document(g, &r.colors);
    j["optimal_coloring"] = ordered_json::parse(serialize(colored));
    emit(j, t0);
    return 0;
}

int cmd_tree_cck(const std::string& graph_file, int k) {
    auto t0 = Clock::now();
    std::string text = slurp(graph_file);
    GraphDocument doc = parse_document(text);
    Graph g = doc.to_graph();

    int value = cck_tree(g, k);
    ordered_json j = result_header("tree-cck", {{graph_file, text}});
    j["k"] = k;
    j["value"] = value;
    auto w = cck_tree_witness(g, k);
    j["witness_ok"] = w.ok;
    if (w.ok) {
        GraphDocument colored = make_document(g, &w.colors);
        j["witness_coloring"] = ordered_json::parse(serialize(colored));
    }
    emit(j, t0);
    return 0;
}

int cmd_export_dot(const std::string& graph_file, const std::string& out_file) {
    auto t0 = Clock::now();
    std::string text = slurp(graph_file);
    GraphDocument doc = parse_document(text);
    spit(out_file, to_dot(doc));
    ordered_json j = result_header("export-dot", {{graph_file, text}});
    j["vertices"] = doc.vertices.size();
    j["edges"] = doc.edges.size();
    emit(j, t0);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-colored graph connectivity toolkit"};
    app.require_subcommand(1);

    std::string kind, in_file, out_file;
    int k = 0;
    bool certificate = false;

    auto* reduce = app.add_subcommand("reduce", "compile a CNF formula into a gadget graph");
    reduce->add_option("kind", kind, "pc | cfc | mc")->required();
    reduce->add_option("formula", in_file, "DIMACS CNF input")->required();
    reduce->add_option("output", out_file, "graph document output")->required();
    reduce->add_flag("--certificate", certificate,
                     "also solve the formula and emit the certificate coloring");

    auto* verify = app.add_subcommand("verify", "check a colored graph document");
    verify->add_option("kind", kind, "mono | proper | cfc | cck")->required();
    verify->add_option("graph", in_file, "colored graph document")->required();
    verify->add_option("-k", k, "color diameter bound (cck)");

    auto* solve = app.add_subcommand("solve", "exact small-instance solver");
    solve->add_option("kind", kind, "pc | cfc | mc | cck")->required();
    solve->add_option("graph", in_file, "uncolored graph document")->required();
    solve->add_option("-k", k, "color diameter bound (cck)");

    auto* tree = app.add_subcommand("tree-cck", "k-color connection number of a tree");
    tree->add_option("graph", in_file, "tree graph document")->required();
    tree->add_option("-k", k, "color diameter bound")->required();

    auto* dot = app.add_subcommand("export-dot", "write DOT text");
    dot->add_option("graph", in_file, "graph document")->required();
    dot->add_option("output", out_file, "DOT output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(kind, in_file, out_file, certificate);
        if (verify->parsed()) return cmd_verify(kind, in_file, k);
        if (solve->parsed()) return cmd_solve(kind, in_file, k);
        if (tree->parsed()) return cmd_tree_cck(in_file, k);
        if (dot->parsed()) return cmd_export_dot(in_file, out_file);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
