#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quivq/errors.hpp"
#include "quivq/fixtures.hpp"
#include "quivq/params.hpp"
#include "quivq/random.hpp"
#include "quivq/roots.hpp"

using namespace quivq;

namespace {

std::vector<Rational> random_vec(SeedStream& rng, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng.small());
    return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational delta_dot(const std::vector<Rational>& chi, const DimVec& delta) {
    Rational s(0);
    for (std::size_t i = 0; i < delta.size(); ++i) s += chi[i + 1] * Rational(delta[i]);
    return s;
}

// root action on alpha: s_i alpha = alpha - (C alpha)_i e_i
std::vector<Rational> root_reflect(const Quiver& q, int i, std::vector<Rational> a) {
    auto c = cartan_from_quiver(q).matrix;
    Rational s(0);
    for (std::size_t j = 0; j < a.size(); ++j) s += Rational(c[static_cast<std::size_t>(i)][j]) * a[j];
    a[static_cast<std::size_t>(i)] -= s;
    return a;
}

struct Dynkin {
    McKayQuiver mq;
    std::vector<std::vector<long>> adj;
};

Dynkin dynkin(GroupSpec spec) {
    auto mq = mckay_quiver(build_group(spec));
    return {mq, mq.quiver.adjacency()};
}

}  // namespace

TEST_CASE("upsilon for Cyclic(2)") {
    auto g = build_group({Family::Cyclic, 2});
    auto e0 = eps0_image(g, true);  // h, c1, k
    CHECK(e0 == std::vector<CycScalar>{CycScalar(0), CycScalar(1), CycScalar(2)});
    auto u = build_upsilon(g, 2);
    CHECK(u.verified);
    CHECK(u.source.labels == std::vector<std::string>{"h", "c1", "k"});
    CHECK(u.target.labels == std::vector<std::string>{"h", "eps0", "eps1"});
    // h -> h, c1 -> h - eps1, k -> (eps0 + eps1 - h)/2
    MatC expected(3, 3, {CycScalar(1), CycScalar(1), CycScalar(Rational(-1, 2)),  //
                         CycScalar(0), CycScalar(0), CycScalar(Rational(1, 2)),   //
                         CycScalar(0), CycScalar(-1), CycScalar(Rational(1, 2))});
    CHECK(u.matrix == expected);
    CHECK_THROWS_AS(build_upsilon(g, 1), DomainError);
    CHECK_THROWS_AS(build_upsilon(build_group({Family::Cyclic, 1}), 2), DomainError);
}

TEST_CASE("upsilon0 for Cyclic(2)") {
    auto g = build_group({Family::Cyclic, 2});
    auto u = build_upsilon0(g);
    CHECK(u.verified);
    CHECK(u.matrix.rows() == 3);
    CHECK(u.matrix.cols() == 2);
    // eps_0 -> c1 - h and eps_1 -> h - c1
    CHECK(u.inverse(0, 1) == CycScalar(-1));
    CHECK(u.inverse(1, 1) == CycScalar(1));
    CHECK(u.inverse(0, 2) == CycScalar(1));
    CHECK(u.inverse(1, 2) == CycScalar(-1));
    // h -> h; c1 -> h + eps0/2 - eps1/2 in canonical coordinates
    CHECK(u.apply({CycScalar(1), CycScalar(0)}) == std::vector<CycScalar>{CycScalar(1), CycScalar(0), CycScalar(0)});
    CHECK(u.apply({CycScalar(0), CycScalar(1)}) ==
          std::vector<CycScalar>{CycScalar(1), CycScalar(Rational(1, 2)), CycScalar(Rational(-1, 2))});
}

TEST_CASE("upsilon maps across families") {
    for (auto spec : {GroupSpec{Family::Cyclic, 3}, GroupSpec{Family::Cyclic, 4}, GroupSpec{Family::BinaryDihedral, 2},
                      GroupSpec{Family::BinaryDihedral, 3}, GroupSpec{Family::BinaryTetrahedral, 1},
                      GroupSpec{Family::BinaryIcosahedral, 1}}) {
        auto g = build_group(spec);
        CAPTURE(g.name());
        auto u = build_upsilon(g, 2);
        auto u0 = build_upsilon0(g);
        CHECK(u.verified);
        CHECK(u0.verified);
        // h -> h
        for (std::size_t a = 0; a < u.matrix.rows(); ++a) CHECK(u.matrix(a, 0) == CycScalar(a == 0 ? 1 : 0));
        for (std::size_t a = 0; a < u0.matrix.rows(); ++a) CHECK(u0.matrix(a, 0) == CycScalar(a == 0 ? 1 : 0));
        // eps_0 images differ by |G| k + |G| h / 2
        auto w = eps0_image(g, true);
        auto k = eps0_image(g, false);
        CycScalar order(static_cast<long>(g.order()));
        CHECK(w[0] - k[0] == order * CycScalar(Rational(1, 2)));
        for (std::size_t a = 1; a < k.size(); ++a) CHECK(w[a] == k[a]);
        CHECK(w.back() == order);
        // canonical coordinates of every upsilon_0 image are orthogonal to delta
        for (std::size_t c = 0; c < u0.matrix.cols(); ++c) {
            CycScalar s(0);
            for (std::size_t i = 0; i < g.dims.size(); ++i) s += CycScalar(g.dims[i]) * u0.matrix(i + 1, c);
            CHECK(s.is_zero());
        }
        // the delta-weighted sum of images is |G| h for the plain traces
        auto tr = class_traces(g);
        std::vector<CycScalar> sum(tr[0].size());
        for (std::size_t i = 0; i < tr.size(); ++i)
            for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += CycScalar(g.dims[i]) * tr[i][a];
        CHECK(sum[0] == order);
        for (std::size_t a = 1; a < sum.size(); ++a) CHECK(sum[a].is_zero());
    }
    // class sums are rational for groups with rational characters
    auto bd = build_group({Family::BinaryDihedral, 2});
    auto ubd = build_upsilon(bd, 3);
    for (const auto& e : ubd.matrix.entries()) CHECK(e.is_rational());
}

TEST_CASE("hstar_to_z0 and a_to_zstar") {
    DimVec a1{1, 1};
    CHECK(hstar_to_z0({Rational(0)}, a1) == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(hstar_to_z0({Rational(1)}, a1) == std::vector<Rational>{Rational(-1), Rational(1)});
    SeedStream rng(5);
    DimVec e6{1, 1, 1, 2, 2, 2, 3};
    for (int t = 0; t < 20; ++t) {
        auto chi = hstar_to_z0(random_vec(rng, 6), e6);
        std::vector<Rational> full{Rational(0)};
        full.insert(full.end(), chi.begin(), chi.end());
        CHECK(delta_dot(full, e6).is_zero());
    }
    CHECK(a_to_zstar({Rational(0), Rational(0)}, {1, 1}) == std::vector<Rational>{Rational(0)});
    CHECK(a_to_zstar({Rational(1), Rational(-1)}, {1, 1}) == std::vector<Rational>{Rational(1)});
    CHECK(a_to_zstar({Rational(1), Rational(-1), Rational(-1)}, {2, 1, 1}) ==
          std::vector<Rational>{Rational(2), Rational(1)});
    CHECK_THROWS_AS(a_to_zstar({Rational(1), Rational(1)}, {1, 1}), DomainError);
}

TEST_CASE("Weyl group action on parameters") {
    SeedStream rng(8);
    for (auto spec : {GroupSpec{Family::Cyclic, 2}, GroupSpec{Family::Cyclic, 3}, GroupSpec{Family::Cyclic, 4},
                      GroupSpec{Family::BinaryDihedral, 2}}) {
        auto d = dynkin(spec);
        const auto& q = d.mq.quiver;
        const auto& delta = d.mq.delta;
        int n = q.vertices;
        CAPTURE(n);
        for (int trial = 0; trial < 5; ++trial) {
            auto chi = random_vec(rng, static_cast<std::size_t>(n + 1));
            CHECK(weyl_act(q, delta, {}, chi) == chi);
            for (int i = 1; i < n; ++i) {
                CHECK(weyl_act(q, delta, {i, i}, chi) == chi);
                CHECK(weyl_act(q, delta, {i, i}, chi, true) == chi);
                auto s = weyl_act(q, delta, {i}, chi);
                CHECK(s[0] == chi[0]);
                CHECK(delta_dot(s, delta) == delta_dot(chi, delta));
                CHECK(sigma_flip(s, delta) == weyl_act(q, delta, {i}, sigma_flip(chi, delta)));
                for (int j = 1; j < n; ++j) {
                    if (j == i) continue;
                    int m = d.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0 ? 2 : 3;
                    std::vector<int> word;
                    for (int k = 0; k < m; ++k) {
                        word.push_back(i);
                        word.push_back(j);
                    }
                    CHECK(weyl_act(q, delta, word, chi) == chi);
                    CHECK(weyl_act(q, delta, word, chi, true) == chi);
                }
            }
            // on the delta-orthogonal part the action is dual to the root action
            std::vector<Rational> eps(chi.begin() + 1, chi.end());
            auto z0 = canonical_zhat0(chi, delta);
            std::vector<Rational> z0eps(z0.begin() + 1, z0.end());
            auto alpha = random_vec(rng, static_cast<std::size_t>(n));
            for (int i = 1; i < n; ++i) {
                auto s = weyl_act(q, delta, {i}, z0);
                std::vector<Rational> seps(s.begin() + 1, s.end());
                CHECK(dot(seps, alpha) == dot(z0eps, root_reflect(q, i, alpha)));
            }
        }
        CHECK_THROWS_AS(weyl_act(q, delta, {0}, std::vector<Rational>(static_cast<std::size_t>(n + 1))),
                        std::out_of_range);
        CHECK_THROWS_AS(weyl_act(q, delta, {n}, std::vector<Rational>(static_cast<std::size_t>(n + 1))),
                        std::out_of_range);
    }
    // rank one: (s_1 chi) . alpha_1 = -chi . alpha_1 on z_0
    auto d = dynkin({Family::Cyclic, 2});
    std::vector<Rational> chi{Rational(0), Rational(-3), Rational(3)};
    auto s = weyl_act(d.mq.quiver, d.mq.delta, {1}, chi);
    CHECK(s[2] == -chi[2]);
}

TEST_CASE("sigma flip") {
    DimVec delta{1, 1, 1, 1, 2};
    SeedStream rng(4);
    std::vector<Rational> ds{Rational(0)};
    for (long x : delta) ds.push_back(Rational(x));
    std::vector<Rational> neg{Rational(0)};
    for (long x : delta) neg.push_back(Rational(-x));
    CHECK(sigma_flip(ds, delta) == neg);
    for (int t = 0; t < 10; ++t) {
        auto chi = random_vec(rng, 6);
        CHECK(sigma_flip(sigma_flip(chi, delta), delta) == chi);
        auto z0 = canonical_zhat0(chi, delta);
        CHECK(sigma_flip(z0, delta) == z0);
    }
    // braid relations of the finite A3 inside affine A3
    auto d = dynkin({Family::Cyclic, 4});
    auto chi = random_vec(rng, 5);
    CHECK(weyl_act(d.mq.quiver, d.mq.delta, {1, 2, 1}, chi) == weyl_act(d.mq.quiver, d.mq.delta, {2, 1, 2}, chi));
    CHECK(weyl_act(d.mq.quiver, d.mq.delta, {1, 3}, chi) == weyl_act(d.mq.quiver, d.mq.delta, {3, 1}, chi));
}
