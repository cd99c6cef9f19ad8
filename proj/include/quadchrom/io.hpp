#pragma once

#include <string>

#include "json.hpp"
#include "quadchrom/builders.hpp"
#include "quadchrom/complex.hpp"
#include "quadchrom/graph.hpp"
#include "quadchrom/homology.hpp"
#include "quadchrom/witness.hpp"

namespace quadchrom::io {

using nlohmann::json;

/// Complex file format: {"dimension": d, "vertices": [ids],
/// "cells": {"1": [{"id", "facets", "vertices"}], ...}} with facet slots
/// and vertex tuples ordered as in the in-memory model.
json complex_to_json(const CubicalComplex& cx);

/// Parses and validates; throws std::runtime_error listing the violated
/// invariants when the file describes something that is not a complex.
CubicalComplex complex_from_json(const json& j);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"degree": k, "support": [cell ids]}
json cochain_to_json(const CubicalComplex& cx, const CochainZ2& a);
CochainZ2 cochain_from_json(const CubicalComplex& cx, const json& j);
json chain_to_json(const CubicalComplex& cx, const ChainZ2& z);

/// {"K": n, "colors": {vertex id: color}} against a graph's vertex ids.
json coloring_to_json(const Graph& g, const Coloring& c);
Coloring coloring_from_json(const Graph& g, const json& j);

json involution_to_json(const CubicalComplex& cx, const CellInvolution& inv);
CellInvolution involution_from_json(const CubicalComplex& cx, const json& j);

json certificate_to_json(const CertificateReport& rep);

json curves_to_json(const CubicalComplex& cx, const CurveSet& cs);

std::string graph_to_dot(const Graph& g);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace quadchrom::io
