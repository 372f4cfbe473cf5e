#pragma once

#include <string>

#include "vtspec/multigraph.hpp"

namespace vtspec {

// Graph files are a single JSON document {"n": <int>, "edges": [[u, v, m], ...]}
// with 0-based vertices, u <= v on output and loops written as u = v.
// Multiplicities are exact integers; no floating point appears in the format.

std::string graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const std::string& text);

Multigraph load_graph(const std::string& path);
void save_graph(const Multigraph& g, const std::string& path);

}  // namespace vtspec
