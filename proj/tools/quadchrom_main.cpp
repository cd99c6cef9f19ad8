// quadchrom: generators, analyzers and coloring certificates for
// quadrangulations of projective spaces and tori.
//
// Reports are JSON on stdout (or --out); human-readable progress goes to
// stderr. Exit code 0 means every requested check passed.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quadchrom/builders.hpp"
#include "quadchrom/io.hpp"
#include "quadchrom/witness.hpp"

namespace qc = quadchrom;
namespace fs = std::filesystem;
using qc::io::json;

namespace {

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty())
        std::cout << report.dump(2) << "\n";
    else
        qc::io::write_json_file(out_path, report);
}

std::vector<int> parse_dims(const std::string& spec) {
    std::vector<int> dims;
    std::string cur;
    for (char c : spec + ",") {
        if (c == ',') {
            if (!cur.empty()) dims.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return dims;
}

int cmd_generate(const std::string& family, int m, int n, int k, const std::string& dims,
                 int d, const std::string& out) {
    if (family == "rp3-scaffold") {
        qc::ScaffoldOutput sc = qc::rp3_scaffold(k);
        fs::path dir(out.empty() ? std::string("scaffold") : out);
        fs::create_directories(dir);
        qc::io::write_json_file((dir / "boundary_sphere.json").string(),
                                qc::io::complex_to_json(sc.boundary_sphere));
        for (std::size_t i = 0; i < sc.annuli.size(); ++i)
            qc::io::write_json_file((dir / ("annulus_" + std::to_string(i + 1) + ".json")).string(),
                                    qc::io::complex_to_json(sc.annuli[i]));
        qc::io::write_json_file((dir / "rho.json").string(),
                                qc::io::involution_to_json(sc.boundary_sphere, sc.rho));
        qc::io::write_json_file((dir / "quotient_two_complex.json").string(),
                                qc::io::complex_to_json(sc.quotient_two_complex));
        qc::io::write_json_file((dir / "quotient_graph.json").string(),
                                qc::io::graph_to_json(sc.quotient_graph));
        qc::io::write_json_file((dir / "labels.json").string(), json(sc.labels));
        std::cerr << "scaffold bundle written to " << dir << "\n";
        return 0;
    }

    qc::CubicalComplex cx(0);
    if (family == "projective-grid")
        cx = qc::projective_grid_rp2(m, n);
    else if (family == "torus-grid")
        cx = qc::torus_grid(parse_dims(dims));
    else if (family == "sphere-cube")
        cx = qc::sphere_cube_boundary(d);
    else if (family == "rp-cube-quotient")
        cx = qc::rp_cube_quotient(d);
    else
        throw std::runtime_error("unknown family: " + family);

    json j = qc::io::complex_to_json(cx);
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        qc::io::write_json_file(out, j);
    std::cerr << "generated " << family << ": ";
    for (int kk = 0; kk <= cx.dimension(); ++kk)
        std::cerr << cx.cell_count(kk) << (kk < cx.dimension() ? "/" : "");
    std::cerr << " cells\n";
    return 0;
}

struct LoadedInput {
    std::optional<qc::CubicalComplex> complex;
    std::optional<qc::Graph> graph;

    qc::Graph skeleton() const {
        if (graph) return *graph;
        return qc::one_skeleton_graph(*complex).graph;
    }
};

LoadedInput load_input(const std::string& path) {
    json j = qc::io::load_json_file(path);
    LoadedInput in;
    if (j.contains("dimension"))
        in.complex = qc::io::complex_from_json(j);
    else if (j.contains("edges"))
        in.graph = qc::io::graph_from_json(j);
    else
        throw std::runtime_error("input is neither a complex nor a graph: " + path);
    return in;
}

int cmd_analyze(const std::string& in_path, bool betti, bool bipartite, bool chromatic,
                int clique, bool ring, bool bounds, long budget_s, const std::string& out) {
    LoadedInput in = load_input(in_path);
    json report;
    report["input"] = in_path;
    bool all_pass = true;

    if (in.complex) {
        json counts = json::object();
        for (int k = 0; k <= in.complex->dimension(); ++k)
            counts[std::to_string(k)] = in.complex->cell_count(k);
        report["cell_counts"] = counts;
        qc::ValidationReport v = qc::validate(*in.complex);
        report["validation"] = {{"ok", v.ok()},
                                {"generalized_cells", v.generalized_cells},
                                {"directed_coherent", v.directed_coherent}};
        report["euler_characteristic"] = qc::euler_characteristic(*in.complex);
    }

    if (betti) {
        if (!in.complex) throw std::runtime_error("--betti needs a complex input");
        report["betti"] = qc::betti_numbers(*in.complex);
    }
    if (bipartite) {
        qc::Graph g = in.skeleton();
        auto res = qc::is_bipartite(g);
        json b;
        b["bipartite"] = res.bipartite;
        if (!res.bipartite) {
            json cyc = json::array();
            for (qc::VertexIndex v : res.odd_cycle->vertices) cyc.push_back(g.vertex_id(v));
            b["odd_cycle"] = cyc;
        }
        report["bipartite"] = b;
    }
    if (chromatic) {
        qc::Graph g = in.skeleton();
        auto res = qc::chromatic_number(g, std::chrono::milliseconds(budget_s * 1000));
        json c;
        c["exact"] = res.exact;
        c["value"] = res.value;
        c["lower_bound"] = res.lower_bound;
        c["lower_bound_kind"] = res.lower_bound_kind;
        if (!res.exact) {
            c["status"] = "unknown within budget";
            all_pass = false;
        }
        report["chromatic"] = c;
    }
    if (clique > 0) {
        qc::Graph g = in.skeleton();
        auto found = qc::contains_clique(g, static_cast<std::size_t>(clique));
        json c;
        c["size"] = clique;
        c["found"] = found.has_value();
        if (found) {
            json w = json::array();
            for (qc::VertexIndex v : *found) w.push_back(g.vertex_id(v));
            c["witness"] = w;
        } else {
            all_pass = false;
        }
        report["clique"] = c;
    }
    if (ring) {
        if (!in.complex) throw std::runtime_error("--ring-conditions needs a complex input");
        qc::RingConditions rc = qc::ring_conditions(*in.complex);
        report["ring_conditions"] = {{"cond1", rc.cond1}, {"cond2", rc.cond2}};
    }
    if (bounds) {
        if (!in.complex) throw std::runtime_error("--bounds needs a complex input");
        int genus = qc::euler_genus_surface(*in.complex);
        json b;
        b["euler_genus"] = genus;
        if (genus >= 1) {
            b["heawood"] = qc::heawood_bound(genus);
            b["hutchinson"] = qc::hutchinson_bound(genus);
        }
        report["bounds"] = b;
    }

    emit(report, out);
    std::cerr << (all_pass ? "analyze: all requested checks passed\n"
                           : "analyze: some checks did not pass\n");
    return all_pass ? 0 : 1;
}

int cmd_witness(const std::string& in_path, const std::string& coloring_path, int enumerate_k,
                long limit, long seed, const std::string& out) {
    LoadedInput in = load_input(in_path);
    if (!in.complex) throw std::runtime_error("witness needs a complex input");
    const qc::CubicalComplex& cx = *in.complex;
    qc::Graph g = qc::one_skeleton_graph(cx).graph;

    json report;
    report["input"] = in_path;
    if (seed >= 0) report["seed"] = seed;
    json certs = json::array();
    std::size_t rainbow = 0, total = 0;

    auto run_one = [&](const qc::Coloring& c) {
        qc::CertificateReport rep = qc::youngs_certificate(cx, c);
        certs.push_back(qc::io::certificate_to_json(rep));
        ++total;
        if (rep.rainbow_face || rep.rainbow_cube) ++rainbow;
        return true;
    };

    if (!coloring_path.empty()) {
        qc::Coloring c = qc::io::coloring_from_json(g, qc::io::load_json_file(coloring_path));
        if (!qc::check_proper(g, c)) {
            for (auto [a, b] : g.edges())
                if (c.color[a] == c.color[b])
                    throw std::runtime_error("coloring is improper on edge " + g.vertex_id(a) +
                                             " -- " + g.vertex_id(b));
        }
        run_one(c);
    } else {
        std::size_t found = qc::enumerate_proper_colorings(
            g, enumerate_k, static_cast<std::size_t>(limit), run_one);
        report["colorings_enumerated"] = found;
        if (found == 0) {
            auto res = qc::chromatic_number(g);
            report["no_proper_coloring"] = true;
            report["chromatic"] = {{"exact", res.exact}, {"value", res.value}};
            std::cerr << "witness: no proper " << enumerate_k
                      << "-coloring exists (chromatic number "
                      << (res.exact ? std::to_string(res.value) : std::string("unknown")) << ")\n";
        }
    }

    report["certificates"] = certs;
    report["rainbow_found"] = rainbow;
    report["colorings_total"] = total;
    emit(report, out);
    std::cerr << "rainbow found in " << rainbow << "/" << total << " colorings\n";

    bool consistent = true;
    for (const auto& c : certs)
        if (!c.at("consistent").get<bool>()) consistent = false;
    return consistent ? 0 : 1;
}

int cmd_export(const std::string& in_path, bool dot, bool json_graph, const std::string& out) {
    LoadedInput in = load_input(in_path);
    qc::Graph g = in.skeleton();
    if (dot) {
        std::string text = qc::io::graph_to_dot(g);
        if (out.empty())
            std::cout << text;
        else
            qc::io::write_text_file(out, text);
    } else if (json_graph) {
        emit(qc::io::graph_to_json(g), out);
    } else {
        throw std::runtime_error("export: choose --dot or --json-graph");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadrangulation generators, homology analyzers and coloring certificates"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "build a named complex family");
    std::string family, dims, out;
    int m = 1, n = 3, k = 1, d = 2;
    gen->add_option("--family", family,
                    "projective-grid | rp3-scaffold | torus-grid | sphere-cube | rp-cube-quotient")
        ->required();
    gen->add_option("--m", m, "rings (projective-grid)");
    gen->add_option("--n", n, "half-period (projective-grid)");
    gen->add_option("--k", k, "twist count (rp3-scaffold)");
    gen->add_option("--dims", dims, "comma-separated wrap sizes (torus-grid)");
    gen->add_option("--d", d, "dimension (sphere-cube, rp-cube-quotient)");
    gen->add_option("--out", out, "output file (or directory for rp3-scaffold)");

    auto* an = app.add_subcommand("analyze", "run checks on a complex or graph file");
    std::string a_in, a_out;
    bool a_betti = false, a_bip = false, a_chrom = false, a_ring = false, a_bounds = false;
    int a_clique = 0;
    long a_budget = 60;
    an->add_option("input", a_in, "complex or graph JSON file")->required();
    an->add_flag("--betti", a_betti, "Betti numbers over Z/2");
    an->add_flag("--bipartite", a_bip, "bipartiteness with witness");
    an->add_flag("--chromatic", a_chrom, "exact chromatic number of the 1-skeleton");
    an->add_option("--clique", a_clique, "search for a clique of this size");
    an->add_flag("--ring-conditions", a_ring, "cohomology ring conditions");
    an->add_flag("--bounds", a_bounds, "Euler genus and coloring bounds");
    an->add_option("--budget", a_budget, "chromatic search budget in seconds (default 60)")
        ->check(CLI::PositiveNumber);
    an->add_option("--out", a_out, "write the JSON report here instead of stdout");

    auto* wi = app.add_subcommand("witness", "coloring certificates");
    std::string w_in, w_coloring, w_out;
    int w_enum = 4;
    long w_limit = 1000, w_seed = -1;
    wi->add_option("input", w_in, "complex JSON file")->required();
    wi->add_option("--coloring", w_coloring, "coloring JSON file");
    wi->add_option("--enumerate", w_enum, "enumerate canonical proper colorings with K colors");
    wi->add_option("--limit", w_limit, "enumeration cap (default 1000)")->check(CLI::PositiveNumber);
    wi->add_option("--seed", w_seed, "seed recorded in the report");
    wi->add_option("--out", w_out, "write the JSON report here instead of stdout");

    auto* ex = app.add_subcommand("export", "1-skeleton exports");
    std::string e_in, e_out;
    bool e_dot = false, e_json = false;
    ex->add_option("input", e_in, "complex or graph JSON file")->required();
    ex->add_flag("--dot", e_dot, "DOT format");
    ex->add_flag("--json-graph", e_json, "graph JSON format");
    ex->add_option("--out", e_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(family, m, n, k, dims, d, out);
        if (an->parsed())
            return cmd_analyze(a_in, a_betti, a_bip, a_chrom, a_clique, a_ring, a_bounds,
                               a_budget, a_out);
        if (wi->parsed()) return cmd_witness(w_in, w_coloring, w_enum, w_limit, w_seed, w_out);
        if (ex->parsed()) return cmd_export(e_in, e_dot, e_json, e_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
