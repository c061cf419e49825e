#pragma once

#include "quivq/quiver.hpp"

namespace quivq::fixtures {

/// Two vertices and one arrow 0 -> 1.
inline Quiver kronecker() { return Quiver(2, {{0, 1}}); }

/// Two vertices and two parallel arrows 0 -> 1 (affine A1).
inline Quiver affine_a1() { return Quiver(2, {{0, 1}, {0, 1}}); }

/// Linear A_n: i -> i+1.
inline Quiver type_a(int n) {
    std::vector<Arrow> a;
    for (int i = 0; i + 1 < n; ++i) a.push_back({i, i + 1});
    return Quiver(n, a);
}

/// Affine A_{m-1} cycle on m >= 3 vertices: i -> i+1 mod m.
inline Quiver affine_a(int m) {
    if (m == 2) return affine_a1();
    std::vector<Arrow> a;
    for (int i = 0; i < m; ++i) a.push_back({i, (i + 1) % m});
    return Quiver(m, a);
}

/// D_4 star with center 0 and leaves 1..3.
inline Quiver type_d4() { return Quiver(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace quivq::fixtures
