#pragma once

#include <compare>
#include <vector>

#include "vtspec/errors.hpp"

namespace vtspec {

struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);
    // Validates that images is a bijection on [0, n).
    static Permutation of(std::vector<int> images);

    int n() const { return static_cast<int>(images.size()); }
    int operator()(int v) const { return images[v]; }
    Permutation inverse() const;
    bool is_identity() const;

    auto operator<=>(const Permutation&) const = default;
};

// (a * b)(v) = a(b(v)) — b applies first.
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace vtspec
