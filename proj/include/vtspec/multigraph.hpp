#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "vtspec/errors.hpp"

namespace vtspec {

// Sorted, duplicate-free set of vertex indices.
struct VertexSet {
    std::vector<int> members;

    // Sorts, removes duplicates, rejects negative indices.
    static VertexSet of(std::vector<int> vs);

    bool contains(int v) const;
    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool operator==(const VertexSet&) const = default;
};

/// Finite undirected multigraph with exact integer edge multiplicities.
///
/// adj(v, v) counts loops at v. A loop of multiplicity m contributes m
/// (not 2m) to the row sum, so a graph is d-regular exactly when every
/// row of the adjacency matrix sums to d.
class Multigraph {
public:
    using Edge = std::tuple<int, int, long long>;  // (u, v, multiplicity)

    static Multigraph from_edge_list(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    long long adj(int u, int v) const { return adj_[u][v]; }
    long long row_sum(int v) const;

    // Edges normalized to u <= v, aggregated, sorted by (u, v).
    std::vector<Edge> to_edge_list() const;

    // Returns the common row sum d; throws NotRegular naming two vertices
    // with distinct row sums otherwise.
    long long validate_regular() const;

    // Connectivity of the support graph; loops are ignored.
    bool is_connected() const;

    // Proper 2-colorability of the support; any loop forces false.
    bool is_bipartite() const;

    // N(s) = { u : adj(u, v) >= 1 for some v in s }. May intersect s;
    // a loop at v puts v into N({v}).
    VertexSet neighborhood(const VertexSet& s) const;

    // Copy with vertex v renamed to images[v]; images must be a bijection.
    Multigraph relabeled(std::span<const int> images) const;

    bool operator==(const Multigraph&) const = default;

private:
    explicit Multigraph(int n);

    int n_ = 0;
    std::vector<std::vector<long long>> adj_;
};

}  // namespace vtspec
