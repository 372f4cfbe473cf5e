#pragma once

#include <utility>
#include <vector>

#include "vtspec/multigraph.hpp"

namespace vtspec {

struct SpectralSummary {
    std::vector<double> eigenvalues;  // sorted descending
    double lambda2 = 0.0;             // second-largest; NaN when n == 1
    double lambda_min = 0.0;
    double max_residual = 0.0;        // max over eigenpairs of ||(A/d)x - lambda x||_2
};

/// Eigenvalues of adj/d via cyclic Jacobi rotations, swept until the
/// off-diagonal Frobenius norm drops below 1e-12. Deterministic: no
/// randomized initialization, fixed sweep order, so identical inputs give
/// bit-identical summaries on the same platform.
///
/// Throws NotRegular if g is not d-regular, OutOfRange if d < 1, and
/// ConvergenceFailure if the criterion is not met within max_sweeps.
SpectralSummary normalized_spectrum(const Multigraph& g, long long d, int max_sweeps = 100);

// Drops exactly one copy of the trivial eigenvalue 1 and returns the rest,
// still sorted descending. Throws Disconnected when eigenvalue 1 has
// multiplicity > 1 (second entry within 1e-9 of 1).
std::vector<double> nontrivial_spectrum(const SpectralSummary& s);

// Clusters the sorted eigenvalue list into (value, count) pairs using the
// given tolerance. Raw values are never rounded; the representative of a
// cluster is its first (largest) member.
std::vector<std::pair<double, int>> eigenvalue_multiplicities(const SpectralSummary& s,
                                                              double tol = 1e-7);

}  // namespace vtspec
