#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quivq/cyclotomic.hpp"
#include "quivq/jet.hpp"
#include "quivq/linalg.hpp"

using namespace quivq;

namespace {

Rational small_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 4) + 1;
    return Rational(num, den);
}

CycScalar random_cyc(std::mt19937_64& rng, int m) {
    std::vector<Rational> c(static_cast<std::size_t>(m));
    for (auto& x : c) x = small_rational(rng);
    return CycScalar(m, c);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(Rational::parse("-6/4") == r);
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("+7").str() == "7");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-7, 14).denominator() == 2);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int m = 1; m <= 120; ++m) {
        CHECK(cyclotomic_polynomial(m).size() == static_cast<std::size_t>(euler_phi(m)) + 1);
    }
    CHECK(euler_phi(60) == 16);
    CHECK(euler_phi(120) == 32);
}

TEST_CASE("cyclotomic conjugation") {
    CHECK(CycScalar(Rational(3, 2)).conjugate() == CycScalar(Rational(3, 2)));
    CycScalar z4 = CycScalar::zeta(4);
    CHECK(z4.conjugate() == -z4);
    CHECK(z4.conjugate() == CycScalar::zeta(4, 3));
    CHECK(z4 * z4 == CycScalar(-1));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        int m = 3 + static_cast<int>(rng() % 10);
        CycScalar a = random_cyc(rng, m);
        CHECK(a.conjugate().conjugate() == a);
    }
}

TEST_CASE("cyclotomic roots of unity and mixed conductors") {
    for (int m = 1; m <= 24; ++m) {
        CycScalar z = CycScalar::zeta(m);
        CycScalar p(1);
        for (int k = 0; k < m; ++k) p *= z;
        CHECK(p == CycScalar(1));
        CycScalar s(0);
        for (int k = 0; k < m; ++k) s += CycScalar::zeta(m, k);
        CHECK(s == CycScalar(m == 1 ? 1 : 0));
    }
    // zeta_4 * zeta_3 = zeta_12^{3+4}
    CHECK(CycScalar::zeta(4) * CycScalar::zeta(3) == CycScalar::zeta(12, 7));
    // sqrt(5) = 1 + 2(zeta_5 + zeta_5^4)
    CycScalar r5 = CycScalar(1) + CycScalar(2) * (CycScalar::zeta(5) + CycScalar::zeta(5, 4));
    CHECK(r5 * r5 == CycScalar(5));
    CHECK(r5.lift(60) == r5);
    CHECK(r5.lift(60).conductor() == 60);
    CHECK((CycScalar::zeta(8) + CycScalar::zeta(8, 7)) * (CycScalar::zeta(8) + CycScalar::zeta(8, 7)) ==
          CycScalar(2));
}

TEST_CASE("cyclotomic field axioms on random triples") {
    std::mt19937_64 rng(7);
    const int conductors[] = {3, 4, 5, 8, 12, 15};
    for (int t = 0; t < 40; ++t) {
        int m = conductors[rng() % 6];
        int m2 = conductors[rng() % 6];
        CycScalar a = random_cyc(rng, m);
        CycScalar b = random_cyc(rng, m2);
        CycScalar c = random_cyc(rng, m);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar(1));
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
}

TEST_CASE("galois action is a field automorphism") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        CycScalar a = random_cyc(rng, 12);
        CycScalar b = random_cyc(rng, 12);
        CHECK((a * b).galois(5) == a.galois(5) * b.galois(5));
        CHECK((a + b).galois(7) == a.galois(7) + b.galois(7));
    }
    CHECK_THROWS_AS((void)CycScalar::zeta(12).galois(2), std::domain_error);
}

TEST_CASE("jet product rule on random polynomials") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        std::vector<Rational> p(4);
        for (auto& c : p) c = small_rational(rng);
        Rational x = small_rational(rng);
        Rational d = small_rational(rng);
        JetQ X(x, d);
        JetQ val(0);
        JetQ pw(1);
        for (const auto& c : p) {
            val += JetQ(c) * pw;
            pw *= X;
        }
        Rational expect_v = p[0] + p[1] * x + p[2] * x * x + p[3] * x * x * x;
        Rational expect_d = (p[1] + Rational(2) * p[2] * x + Rational(3) * p[3] * x * x) * d;
        CHECK(val.value() == expect_v);
        CHECK(val.derivative() == expect_d);
    }
    JetC a(CycScalar::zeta(3), CycScalar(1));
    JetC b(CycScalar(2), CycScalar::zeta(3));
    CHECK((a * b).derivative() == a.value() * b.derivative() + a.derivative() * b.value());
}

TEST_CASE("kernel") {
    MatQ zero(1, 1);
    auto k0 = kernel(zero);
    REQUIRE(k0.size() == 1);
    CHECK(k0[0][0] == Rational(1));
    CHECK(kernel(MatQ::identity(2)).empty());
    MatQ m(2, 2, {1, 2, 2, 4});
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    // hand row reduction gives x1 = -2 x2
    CHECK(k[0][0] == Rational(-2) * k[0][1]);
    CHECK(!k[0][1].is_zero());
}

TEST_CASE("kernel residual is exactly zero on random matrices") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng() % 5;
        std::size_t c = 1 + rng() % 6;
        MatQ m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? Rational(0) : small_rational(rng);
        auto ker = kernel(m);
        CHECK(ker.size() == c - rank(m));
        for (const auto& v : ker) CHECK((m * MatQ::column(v)).is_zero());
        CHECK(rank(from_columns(c, ker)) == ker.size());
    }
    MatC mc(1, 2, {CycScalar::zeta(3), CycScalar(1)});
    auto kc = kernel(mc);
    REQUIRE(kc.size() == 1);
    CHECK((mc * MatC::column(kc[0])).is_zero());
}

TEST_CASE("solve") {
    MatQ b(2, 2, {1, 2, 3, 4});
    CHECK(solve(MatQ::identity(2), b) == b);
    MatQ a(1, 2, {1, 1});
    MatQ rhs(1, 1, {3});
    auto x = solve(a, rhs);
    CHECK(a * x == rhs);
    CHECK_FALSE(try_solve(MatQ(1, 1), MatQ(1, 1, {1})).has_value());
    CHECK_THROWS_AS(solve(MatQ(1, 1), MatQ(1, 1, {1})), DomainError);
}

TEST_CASE("inverse and determinant") {
    MatQ m(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
    CHECK(m * inverse(m) == MatQ::identity(3));
    CHECK(determinant(m) == Rational(18));
    CHECK(determinant(MatQ(2, 2, {1, 2, 2, 4})) == Rational(0));
    CHECK_THROWS_AS(inverse(MatQ(2, 2, {1, 2, 2, 4})), DomainError);
}
