#pragma once

#include <string>
#include <utility>

#include "vtspec/multigraph.hpp"
#include "vtspec/rational.hpp"
#include "vtspec/spectrum.hpp"

namespace vtspec {

/// Exact isoperimetric data. Both optima range over nonempty S with
/// |S| <= floor(n/2), the bound inclusive.
struct ExpansionProfile {
    Rational h_edge;          // min of e(S, S^c)/|S|, edge multiplicities counted
    Rational h_vertex;        // min of |N(S)\S|/|S|   (exterior vertex boundary)
    VertexSet witness_edge;
    VertexSet witness_vertex;
};

/// Exhaustive subset scan in Gray-code order with incremental cut and
/// boundary updates; objectives compared in exact integer arithmetic.
/// Ties break toward the lexicographically smallest sorted witness.
/// Throws TooLarge when n > subset_cap, Disconnected for disconnected input.
ExpansionProfile expansion_profile(const Multigraph& g, int subset_cap = 24);

std::pair<Rational, VertexSet> edge_cheeger_exact(const Multigraph& g, int subset_cap = 24);
std::pair<Rational, VertexSet> vertex_expansion_exact(const Multigraph& g, int subset_cap = 24);

// Classical two-sided check (1 - lambda2)/2 <= h_edge/d <= sqrt(2(1 - lambda2)),
// each side with 1e-9 slack. Returns false and fills *diagnostic on violation.
bool cheeger_sandwich_check(const ExpansionProfile& profile, const SpectralSummary& summary,
                            long long d, std::string* diagnostic = nullptr);

}  // namespace vtspec
