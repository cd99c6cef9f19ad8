#include "quadchrom/io.hpp"

#include <fstream>
#include <sstream>

namespace quadchrom::io {

json complex_to_json(const CubicalComplex& cx) {
    json j;
    j["dimension"] = cx.dimension();
    json verts = json::array();
    for (CellIndex v = 0; v < cx.cell_count(0); ++v) verts.push_back(cx.cell(0, v).id);
    j["vertices"] = std::move(verts);
    json cells = json::object();
    for (int k = 1; k <= cx.dimension(); ++k) {
        json layer = json::array();
        for (CellIndex i = 0; i < cx.cell_count(k); ++i) {
            const Cube& c = cx.cell(k, i);
            json cell;
            cell["id"] = c.id;
            json facets = json::array();
            for (CellIndex f : c.facets) facets.push_back(cx.cell(k - 1, f).id);
            cell["facets"] = std::move(facets);
            json vertices = json::array();
            for (CellIndex v : c.vertices) vertices.push_back(cx.cell(0, v).id);
            cell["vertices"] = std::move(vertices);
            layer.push_back(std::move(cell));
        }
        cells[std::to_string(k)] = std::move(layer);
    }
    j["cells"] = std::move(cells);
    return j;
}

CubicalComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices"))
        throw std::runtime_error("complex file: missing dimension or vertices");
    int d = j.at("dimension").get<int>();
    if (d < 0) throw std::runtime_error("complex file: negative dimension");
    CubicalComplex cx(d);
    try {
        for (const auto& v : j.at("vertices")) cx.add_vertex(v.get<std::string>());
        const json cells = j.value("cells", json::object());
        for (int k = 1; k <= d; ++k) {
            auto it = cells.find(std::to_string(k));
            if (it == cells.end()) continue;
            for (const auto& cell : *it) {
                std::vector<CellIndex> facets, vertices;
                for (const auto& f : cell.at("facets")) {
                    auto idx = cx.find(k - 1, f.get<std::string>());
                    if (!idx)
                        throw std::runtime_error("complex file: unknown facet '" +
                                                 f.get<std::string>() + "'");
                    facets.push_back(*idx);
                }
                for (const auto& v : cell.at("vertices")) {
                    auto idx = cx.find(0, v.get<std::string>());
                    if (!idx)
                        throw std::runtime_error("complex file: unknown vertex '" +
                                                 v.get<std::string>() + "'");
                    vertices.push_back(*idx);
                }
                cx.add_cell(k, cell.at("id").get<std::string>(), std::move(facets),
                            std::move(vertices));
            }
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("complex file: malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("complex file: ") + e.what());
    }
    ValidationReport rep = validate(cx);
    if (!rep.ok()) {
        std::string msg = "complex file violates invariants:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
    return cx;
}

json graph_to_json(const Graph& g) {
    json j;
    json verts = json::array();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) verts.push_back(g.vertex_id(v));
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({g.vertex_id(a), g.vertex_id(b)});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& j) {
    std::vector<std::string> ids;
    for (const auto& v : j.at("vertices")) ids.push_back(v.get<std::string>());
    Graph g(ids);
    for (const auto& e : j.at("edges")) {
        auto a = g.find_vertex(e.at(0).get<std::string>());
        auto b = g.find_vertex(e.at(1).get<std::string>());
        if (!a || !b) throw std::runtime_error("graph file: edge references unknown vertex");
        g.add_edge(*a, *b);
    }
    return g;
}

json cochain_to_json(const CubicalComplex& cx, const CochainZ2& a) {
    json j;
    j["degree"] = a.degree;
    json support = json::array();
    for (std::size_t i : a.support.set_bits()) support.push_back(cx.cell(a.degree, i).id);
    j["support"] = std::move(support);
    return j;
}

CochainZ2 cochain_from_json(const CubicalComplex& cx, const json& j) {
    int degree = j.at("degree").get<int>();
    CochainZ2 a = make_cochain(cx, degree);
    for (const auto& id : j.at("support")) {
        auto idx = cx.find(degree, id.get<std::string>());
        if (!idx) throw std::runtime_error("cochain file: unknown cell '" + id.get<std::string>() + "'");
        a.support.set(*idx, true);
    }
    return a;
}

json chain_to_json(const CubicalComplex& cx, const ChainZ2& z) {
    CochainZ2 a{z.complex, z.degree, z.support};
    return cochain_to_json(cx, a);
}

json coloring_to_json(const Graph& g, const Coloring& c) {
    json j;
    j["K"] = c.num_colors;
    json colors = json::object();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) colors[g.vertex_id(v)] = c.color[v];
    j["colors"] = std::move(colors);
    return j;
}

Coloring coloring_from_json(const Graph& g, const json& j) {
    Coloring c;
    c.num_colors = j.at("K").get<int>();
    c.color.assign(g.vertex_count(), 0);
    const json& colors = j.at("colors");
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        auto it = colors.find(g.vertex_id(v));
        if (it == colors.end())
            throw std::runtime_error("coloring file: vertex '" + g.vertex_id(v) + "' missing");
        c.color[v] = it->get<int>();
    }
    return c;
}

json involution_to_json(const CubicalComplex& cx, const CellInvolution& inv) {
    json maps = json::object();
    for (int dim = 0; dim < static_cast<int>(inv.maps.size()); ++dim) {
        json pairs = json::array();
        for (auto& [a, b] : inv.maps[dim])
            if (a < b) pairs.push_back({cx.cell(dim, a).id, cx.cell(dim, b).id});
        // Deterministic output: sort by first id.
        std::sort(pairs.begin(), pairs.end(),
                  [](const json& x, const json& y) { return x.at(0) < y.at(0); });
        maps[std::to_string(dim)] = std::move(pairs);
    }
    return json{{"maps", std::move(maps)}};
}

CellInvolution involution_from_json(const CubicalComplex& cx, const json& j) {
    CellInvolution inv;
    inv.maps.resize(cx.dimension() + 1);
    for (auto& [key, pairs] : j.at("maps").items()) {
        int dim = std::stoi(key);
        if (dim < 0 || dim > cx.dimension())
            throw std::runtime_error("involution file: bad dimension " + key);
        for (const auto& p : pairs) {
            auto a = cx.find(dim, p.at(0).get<std::string>());
            auto b = cx.find(dim, p.at(1).get<std::string>());
            if (!a || !b) throw std::runtime_error("involution file: unknown cell");
            inv.maps[dim][*a] = *b;
            inv.maps[dim][*b] = *a;
        }
    }
    return inv;
}

json certificate_to_json(const CertificateReport& rep) {
    json j;
    j["proper"] = rep.proper;
    j["colors_used"] = rep.colors_used;
    j["skeleton_bipartite"] = rep.skeleton_bipartite;
    if (rep.odd_cycle) {
        json cyc = json::array();
        for (VertexIndex v : rep.odd_cycle->vertices) cyc.push_back(v);
        j["odd_cycle_length"] = rep.odd_cycle->vertices.size();
        json par = json::object();
        for (auto& [t, p] : rep.odd_cycle_parity) par[std::to_string(t)] = p;
        j["odd_cycle_parity"] = std::move(par);
    }
    json classes = json::array();
    for (const auto& c : rep.classes)
        classes.push_back({{"t", c.t}, {"cocycle", c.cocycle}, {"nontrivial", c.nontrivial}});
    j["classes"] = std::move(classes);
    json cups = json::array();
    for (const auto& c : rep.cups)
        cups.push_back({{"t1", c.t1}, {"t2", c.t2}, {"nontrivial", c.nontrivial}});
    j["cups"] = std::move(cups);
    if (rep.triple_cup) j["triple_cup_nontrivial"] = rep.triple_cup->nontrivial;
    if (rep.rainbow_face) j["rainbow_face"] = *rep.rainbow_face;
    if (rep.rainbow_cube) j["rainbow_cube"] = *rep.rainbow_cube;
    if (rep.ring) j["ring_conditions"] = {{"cond1", rep.ring->cond1}, {"cond2", rep.ring->cond2}};
    j["consistent"] = rep.consistent;
    j["notes"] = rep.notes;
    return j;
}

json curves_to_json(const CubicalComplex& cx, const CurveSet& cs) {
    json j;
    json curves = json::array();
    for (const auto& curve : cs.curves) {
        json walk = json::array();
        for (const auto& step : curve)
            walk.push_back({{"edge", cx.cell(1, step.edge).id}, {"face", cx.cell(2, step.face).id}});
        curves.push_back(std::move(walk));
    }
    j["curves"] = std::move(curves);
    json res = json::array();
    for (const auto& fc : cs.resolutions) {
        json chords = json::array();
        for (auto [a, b] : fc.chords) chords.push_back({a, b});
        res.push_back({{"face", cx.cell(2, fc.face).id}, {"chords", std::move(chords)}});
    }
    j["resolutions"] = std::move(res);
    return j;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph quadchrom {\n";
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) out << "  \"" << g.vertex_id(v) << "\";\n";
    for (auto [a, b] : g.edges())
        out << "  \"" << g.vertex_id(a) << "\" -- \"" << g.vertex_id(b) << "\";\n";
    out << "}\n";
    return out.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace quadchrom::io
