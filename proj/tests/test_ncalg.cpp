#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "quivq/errors.hpp"
#include "quivq/fixtures.hpp"
#include "quivq/ncalg.hpp"
#include "quivq/random.hpp"

using namespace quivq;

namespace {

const ParamPoly h = ParamPoly::var(0);

NCElement gen(int a) { return NCElement::generator(a); }

NCElement random_element(const AlgebraCtx& ctx, SeedStream& rng, int max_deg) {
    NCElement x;
    for (int t = 0; t < 3; ++t) {
        auto deg = static_cast<int>(rng.next(0, max_deg));
        std::vector<int> w;
        for (int i = 0; i < deg; ++i) w.push_back(static_cast<int>(rng.next(0, ctx.dim - 1)));
        auto g = static_cast<std::size_t>(rng.next(0, static_cast<long>(ctx.group_order()) - 1));
        ParamPoly c(rng.small_nonzero());
        if (rng.next(0, 2) == 0) c *= ParamPoly::var(static_cast<std::size_t>(rng.next(0, static_cast<long>(ctx.param_count()) - 1)));
        x += nc_mul(ctx, NCElement::term(c, {}, 0), nc_mul(ctx, normalize_word(ctx, w), NCElement::group(g)));
    }
    return x;
}

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Commutative smash product SV # G, computed without the rewriting engine.
using Smash = std::map<std::pair<std::vector<int>, std::size_t>, CycScalar>;

Smash to_smash(const NCElement& x) {
    Smash s;
    for (const auto& [k, c] : x.terms()) {
        CycScalar v = c.constant_term();
        if (!v.is_zero()) s[{k.mono, k.grp}] += v;
    }
    return s;
}

Smash smash_mul(const AlgebraCtx& ctx, const Smash& x, const Smash& y) {
    Smash out;
    for (const auto& [kx, cx] : x) {
        for (const auto& [ky, cy] : y) {
            // g(ky.mono) as a commutative polynomial
            std::map<std::vector<int>, CycScalar> poly{{kx.first, cx * cy}};
            for (int a : ky.first) {
                std::map<std::vector<int>, CycScalar> next;
                for (const auto& [m, c] : poly) {
                    for (std::size_t b = 0; b < static_cast<std::size_t>(ctx.dim); ++b) {
                        const CycScalar& e = ctx.group_matrices[kx.second](b, static_cast<std::size_t>(a));
                        if (e.is_zero()) continue;
                        auto m2 = m;
                        m2.push_back(static_cast<int>(b));
                        std::sort(m2.begin(), m2.end());
                        next[m2] += c * e;
                    }
                }
                poly = std::move(next);
            }
            for (const auto& [m, c] : poly) out[{m, ctx.group_mul[kx.second][ky.second]}] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::vector<CycScalar> zeros(const AlgebraCtx& ctx) { return std::vector<CycScalar>(ctx.param_count(), CycScalar(0)); }

}  // namespace

TEST_CASE("param polynomials") {
    ParamPoly c1 = ParamPoly::var(1);
    ParamPoly p = (h + c1) * (h - c1);
    CHECK(p == h * h - c1 * c1);
    CHECK(p.degree() == 4);
    CHECK(h.negate_h() == -h);
    CHECK((h * c1).negate_h() == -(h * c1));
    CHECK(p.evaluate({CycScalar(3), CycScalar(1)}) == CycScalar(8));
    CHECK(ParamPoly(0).is_zero());
    CHECK((h - h).is_zero());
}

TEST_CASE("Weyl rewrite y1 x1 = x1 y1 - h") {
    auto ctx = make_weyl_ctx(1);
    CHECK(nc_mul(ctx, gen(1), gen(0)) == NCElement::term(1, {0, 1}, 0) - NCElement::scalar(h));
    CHECK(nc_mul(ctx, NCElement::scalar(1), gen(1)) == gen(1));
    CHECK(commutator(ctx, gen(0), gen(1)) == NCElement::scalar(h));
}

TEST_CASE("SRA rewrite for Cyclic(2), n = 1") {
    auto g = build_group({Family::Cyclic, 2});
    auto ctx = make_sra_ctx(WreathGroup{1, &g});
    REQUIRE(ctx.group_order() == 2);
    REQUIRE(ctx.reflections.size() == 1);
    const std::size_t s = ctx.reflections[0].element;
    NCElement expect = NCElement::term(1, {0, 1}, 0) - NCElement::scalar(h) - NCElement::term(ParamPoly::var(1), {}, s);
    CHECK(nc_mul(ctx, gen(1), gen(0)) == expect);
    // s x = -x s
    CHECK(nc_mul(ctx, NCElement::group(s), gen(0)) == NCElement::term(-1, {0}, s));
}

TEST_CASE("confluence") {
    for (int N = 1; N <= 3; ++N) {
        auto ctx = make_weyl_ctx(N);
        CHECK(confluence_check(ctx).pass);
    }
    auto c2 = build_group({Family::Cyclic, 2});
    auto c3 = build_group({Family::Cyclic, 3});
    auto q8 = build_group({Family::BinaryDihedral, 2});
    for (auto w : {WreathGroup{1, &c2}, WreathGroup{1, &c3}, WreathGroup{2, &c2}, WreathGroup{1, &q8}}) {
        auto ctx = make_sra_ctx(w);
        auto rep = confluence_check(ctx);
        CHECK(rep.pass);
        CHECK(ctx.certified);
    }
}

TEST_CASE("corrupted omega_s is caught") {
    auto c2 = build_group({Family::Cyclic, 2});
    auto ctx = make_sra_ctx(WreathGroup{2, &c2});
    REQUIRE(confluence_check(ctx).pass);
    auto bad = ctx;
    bad.reflections[0].omega_s = bad.reflections[0].omega_s * CycScalar(2);
    bad.rebuild_relations();
    auto rep = confluence_check(bad);
    CHECK_FALSE(rep.pass);
    CHECK((rep.witness_triple.has_value() || rep.witness_group.has_value()));
    CHECK_FALSE(bad.certified);
    CHECK_THROWS_AS(graded_dimension(bad, 1), DomainError);
}

TEST_CASE("graded dimensions") {
    auto c2 = build_group({Family::Cyclic, 2});
    auto ctx = make_sra_ctx(WreathGroup{1, &c2});
    CHECK_THROWS_AS(graded_dimension(ctx, 0), DomainError);
    REQUIRE(confluence_check(ctx).pass);
    CHECK(graded_dimension(ctx, 0) == 2);
    CHECK(graded_dimension(ctx, 1) == 4);
    CHECK(graded_dimension(ctx, 2) == 6);
    auto ctx2 = make_sra_ctx(WreathGroup{2, &c2});
    REQUIRE(confluence_check(ctx2).pass);
    for (int d = 0; d <= 4; ++d) CHECK(graded_dimension(ctx2, d) == binomial(4 + d - 1, d) * 8);
}

TEST_CASE("molien") {
    auto c2 = build_group({Family::Cyclic, 2});
    CHECK(molien_dim(c2.elements, 0) == 1);
    CHECK(molien_dim(c2.elements, 1) == 0);
    CHECK(molien_dim(c2.elements, 2) == 3);
    // x^3, y^3, xy for Cyclic(3)
    auto c3 = build_group({Family::Cyclic, 3});
    CHECK(molien_dim(c3.elements, 2) == 1);
    CHECK(molien_dim(c3.elements, 3) == 2);
}

TEST_CASE("spherical dimensions match Molien") {
    auto c2 = build_group({Family::Cyclic, 2});
    auto c3 = build_group({Family::Cyclic, 3});
    for (auto w : {WreathGroup{1, &c2}, WreathGroup{1, &c3}, WreathGroup{2, &c2}}) {
        auto ctx = make_sra_ctx(w);
        for (int d = 0; d <= 4; ++d) CHECK(spherical_graded_dimension(ctx, d) == molien_dim(ctx.group_matrices, d));
    }
}

TEST_CASE("spherical products") {
    auto c2 = build_group({Family::Cyclic, 2});
    auto ctx = make_sra_ctx(WreathGroup{1, &c2});
    NCElement e = averaging_idempotent(ctx);
    NCElement one = NCElement::scalar(1);
    CHECK(spherical_product(ctx, one, one) == e);
    for (std::size_t g = 0; g < ctx.group_order(); ++g)
        CHECK(nc_mul(ctx, nc_mul(ctx, e, NCElement::group(g)), e) == e);
    NCElement xy = normalize_word(ctx, {0, 1});
    NCElement p = spherical_product(ctx, xy, xy);
    for (std::size_t g = 0; g < ctx.group_order(); ++g) {
        CHECK(nc_mul(ctx, NCElement::group(g), p) == p);
        CHECK(nc_mul(ctx, p, NCElement::group(g)) == p);
    }
    // mod parameters: e (xy)^2
    CHECK(p.specialise(zeros(ctx)) == nc_mul(ctx, e, NCElement::term(1, {0, 0, 1, 1}, 0)));
}

TEST_CASE("associativity, smash product limit and filtration") {
    auto c2 = build_group({Family::Cyclic, 2});
    auto c3 = build_group({Family::Cyclic, 3});
    std::vector<AlgebraCtx> ctxs{make_weyl_ctx(2), make_sra_ctx(WreathGroup{1, &c3}), make_sra_ctx(WreathGroup{2, &c2})};
    SeedStream rng(77);
    for (auto& ctx : ctxs) {
        REQUIRE(confluence_check(ctx).pass);
        for (int t = 0; t < 6; ++t) {
            auto x = random_element(ctx, rng, 3);
            auto y = random_element(ctx, rng, 3);
            auto z = random_element(ctx, rng, 2);
            CHECK(nc_mul(ctx, nc_mul(ctx, x, y), z) == nc_mul(ctx, x, nc_mul(ctx, y, z)));
            CHECK(to_smash(nc_mul(ctx, x, y)) == smash_mul(ctx, to_smash(x), to_smash(y)));
            // filtration: [F_i, F_j] in F_{i+j-2}, and commutative once the parameters vanish
            auto word = [&](int len) {
                std::vector<int> w;
                for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng.next(0, ctx.dim - 1)));
                return normalize_word(ctx, w);
            };
            NCElement wx = word(static_cast<int>(rng.next(1, 3)));
            NCElement wy = word(static_cast<int>(rng.next(1, 2)));
            NCElement c = commutator(ctx, wx, wy);
            CHECK(c.degree() <= wx.degree() + wy.degree() - 2);
            CHECK(c.specialise(zeros(ctx)).is_zero());
        }
    }
}

TEST_CASE("parity antiautomorphism") {
    auto ctx = make_weyl_ctx(2);
    CHECK(parity_antiauto(ctx, gen(3)) == gen(3));
    CHECK(parity_antiauto(ctx, NCElement::scalar(h)) == NCElement::scalar(-h));
    CHECK(parity_antiauto(ctx, normalize_word(ctx, {0, 2})) == normalize_word(ctx, {0, 2}) - NCElement::scalar(h));
    SeedStream rng(5);
    for (int t = 0; t < 8; ++t) {
        auto x = random_element(ctx, rng, 3);
        auto y = random_element(ctx, rng, 2);
        CHECK(parity_antiauto(ctx, parity_antiauto(ctx, x)) == x);
        CHECK(parity_antiauto(ctx, nc_mul(ctx, x, y)) == nc_mul(ctx, parity_antiauto(ctx, y), parity_antiauto(ctx, x)));
    }
    auto c2 = build_group({Family::Cyclic, 2});
    CHECK_THROWS_AS(parity_antiauto(make_sra_ctx(WreathGroup{1, &c2}), gen(0)), DomainError);
}

namespace {

// xi . f for the coordinate function f, as the linear form -f(xi . x), computed from the
// first-order group action of the quiver module.
NCElement xi_action(const QuiverWeyl& qw, const std::vector<MatQ>& xi, int var) {
    RepQ shape = RepQ::zero(qw.fq.base, qw.v, qw.fq.framing);
    const std::size_t nc = shape.coordinate_count();
    std::vector<int> var_of(nc, -1);
    for (std::size_t k = 0; k < qw.rep_coordinate.size(); ++k) var_of[qw.rep_coordinate[k]] = static_cast<int>(k);
    std::vector<MatJ> g;
    for (const auto& m : xi) g.push_back(make_jet(MatQ::identity(m.rows()), m));
    NCElement out;
    for (std::size_t j = 0; j < nc; ++j) {
        RepQ e = shape;
        std::vector<Rational> x(nc, Rational(0));
        x[j] = 1;
        e.set_coordinates(x);
        auto moved = jet_derivative(act(g, to_jet(e))).coordinates();
        Rational c = -moved[qw.rep_coordinate[static_cast<std::size_t>(var)]];
        if (!c.is_zero()) out += NCElement::term(ParamPoly(CycScalar(c)), {var_of[j]}, 0);
    }
    return out;
}

std::vector<std::vector<MatQ>> unit_blocks(const DimVec& v) {
    std::vector<std::vector<MatQ>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto d = static_cast<std::size_t>(v[i]);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<MatQ> xi;
                for (long vk : v) xi.emplace_back(static_cast<std::size_t>(vk), static_cast<std::size_t>(vk));
                xi[i](r, c) = 1;
                out.push_back(xi);
            }
        }
    }
    return out;
}

std::vector<MatQ> bracket(const std::vector<MatQ>& a, const std::vector<MatQ>& b) {
    std::vector<MatQ> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i] - b[i] * a[i]);
    return out;
}

}  // namespace

TEST_CASE("quantum comoment on the Kronecker quiver") {
    auto qw = make_quiver_weyl(FramedQuiver(fixtures::kronecker(), {0, 0}), {1, 1});
    REQUIRE(qw.ctx.dim == 2);
    std::vector<MatQ> zero{MatQ(1, 1), MatQ(1, 1)};
    CHECK(quantum_comoment(qw, zero).is_zero());
    std::vector<MatQ> id1{MatQ(1, 1), MatQ(1, 1, {1})};
    NCElement phi = quantum_comoment(qw, id1);
    // (ab + ba)/2 = ab - h/2
    CHECK(phi == normalize_word(qw.ctx, {0, 1}) - NCElement::scalar(h * ParamPoly(CycScalar(Rational(1, 2)))));
    // Lie homomorphism convention: the head coordinate a has weight -1
    CHECK(commutator(qw.ctx, phi, gen(0)) == NCElement::term(-h, {0}, 0));
    CHECK(commutator(qw.ctx, phi, gen(1)) == NCElement::term(h, {1}, 0));
}

TEST_CASE("quantum comoment identities") {
    std::vector<std::pair<FramedQuiver, DimVec>> fixtures_{
        {FramedQuiver(fixtures::kronecker(), {1, 0}), {1, 1}},
        {FramedQuiver(fixtures::kronecker(), {1, 1}), {2, 1}},
        {FramedQuiver(fixtures::affine_a1(), {1, 0}), {1, 1}},
        {FramedQuiver(fixtures::affine_a1(), {1, 0}), {2, 1}},
    };
    SeedStream rng(9);
    for (const auto& [fq, v] : fixtures_) {
        auto qw = make_quiver_weyl(fq, v);
        auto basis = unit_blocks(v);
        std::vector<NCElement> phis;
        for (const auto& xi : basis) {
            NCElement phi = quantum_comoment(qw, xi);
            phis.push_back(phi);
            CHECK(parity_antiauto(qw.ctx, phi) == phi);
            for (int f = 0; f < qw.ctx.dim; ++f)
                CHECK(commutator(qw.ctx, phi, gen(f)) == xi_action(qw, xi, f) * h);
        }
        for (int t = 0; t < 6; ++t) {
            auto i = static_cast<std::size_t>(rng.next(0, static_cast<long>(basis.size()) - 1));
            auto j = static_cast<std::size_t>(rng.next(0, static_cast<long>(basis.size()) - 1));
            CHECK(commutator(qw.ctx, phis[i], phis[j]) == quantum_comoment(qw, bracket(basis[i], basis[j])) * h);
        }
    }
    auto qw = make_quiver_weyl(FramedQuiver(fixtures::kronecker(), {0, 0}), {1, 1});
    CHECK_THROWS_AS(quantum_comoment(qw, {MatQ(1, 1)}), std::invalid_argument);
}
