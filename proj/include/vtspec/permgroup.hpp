#pragma once

#include <utility>
#include <vector>

#include "vtspec/multigraph.hpp"
#include "vtspec/permutation.hpp"

namespace vtspec {

/// Finite permutation group acting on [0, n), stored by explicit element
/// enumeration. Elements are kept sorted lexicographically by image array;
/// generators is a small sublist whose closure is the whole element list.
struct PermGroup {
    int n = 0;
    std::vector<Permutation> elements;
    std::vector<Permutation> generators;

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const Permutation& p) const;
};

// Sorts, deduplicates, checks the identity is present and picks a small
// generating sublist. Does not verify closure; see validate_group.
PermGroup group_from_elements(int n, std::vector<Permutation> elements);

// Closure of the generators under composition.
PermGroup group_closure(int n, const std::vector<Permutation>& generators);

// Full check: identity present, closed under inverse and composition.
bool validate_group(const PermGroup& G);

bool is_automorphism(const Multigraph& g, const Permutation& p);

/// Full automorphism group by backtracking over images with partial-row
/// consistency pruning: a partial map sigma is extended only while
/// adj(sigma(a), sigma(b)) = adj(a, b) on all assigned pairs.
/// Throws TooLarge when g.n() > n_cap.
PermGroup automorphism_group(const Multigraph& g, int n_cap = 16);

// Orbit partition of [0, n); first component true iff a single orbit.
std::pair<bool, std::vector<VertexSet>> is_vertex_transitive(const PermGroup& G);

/// t = |G|/n for a transitive G, verified exhaustively: every equation
/// g(u) = v must have exactly t solutions. Throws NotTransitive, and
/// InconsistentOrder if the exhaustive count ever deviates.
long long transitivity_order(const PermGroup& G);

/// All subgroups of index two, via the subgroup K generated by all squares:
/// G/K is elementary abelian of exponent two and every index-two subgroup is
/// the preimage of a hyperplane. Deterministic hyperplane order.
/// Throws TooLarge when |G| > order_cap.
std::vector<PermGroup> index_two_subgroups(const PermGroup& G, long long order_cap = 5040);

// True iff no index-two subgroup of G acts transitively. Requires G transitive.
bool condition1_holds(const PermGroup& G, long long order_cap = 5040);

// Repeatedly replaces G by its first transitive index-two subgroup until
// none exists. The result is transitive and satisfies condition1_holds.
PermGroup descend_to_condition1(const PermGroup& G, long long order_cap = 5040);

// Sanity oracle: N(N({tau(v)})) is contained in tau(N(N({v}))) for every
// tau in G and vertex v. Holds automatically when G consists of
// automorphisms; singletons suffice since N distributes over unions.
bool condition4_check(const PermGroup& G, const Multigraph& g);

}  // namespace vtspec
