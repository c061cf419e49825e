#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "quivq/rational.hpp"

namespace quivq {

/// Euler's totient.
int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int m);

/// Element of the cyclotomic field Q(zeta_m), stored as rational coordinates in the
/// power basis 1, zeta, ..., zeta^{phi(m)-1}. Operands with different conductors are
/// lifted to the lcm before combining.
class CycScalar {
public:
    CycScalar() : CycScalar(Rational(0)) {}
    CycScalar(const Rational& r);  // NOLINT(google-explicit-constructor)
    CycScalar(long v) : CycScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycScalar(int v) : CycScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    CycScalar(int conductor, std::vector<Rational> coeffs);

    /// zeta_m^k.
    static CycScalar zeta(int m, long k = 1);

    [[nodiscard]] int conductor() const { return m_; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_rational() const;
    /// Throws std::domain_error unless is_rational().
    [[nodiscard]] Rational to_rational() const;

    /// Same element expressed over Q(zeta_L); L must be a multiple of conductor().
    [[nodiscard]] CycScalar lift(int L) const;
    /// Complex conjugation zeta -> zeta^{-1}.
    [[nodiscard]] CycScalar conjugate() const;
    /// Field automorphism zeta -> zeta^a, gcd(a, m) = 1.
    [[nodiscard]] CycScalar galois(long a) const;
    [[nodiscard]] CycScalar inverse() const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator/=(const CycScalar& o) { return *this *= o.inverse(); }

    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
    friend CycScalar operator-(const CycScalar& a);

    friend bool operator==(const CycScalar& a, const CycScalar& b);

    /// Stable text key, used for hashing group elements.
    [[nodiscard]] std::string key() const;
    friend std::ostream& operator<<(std::ostream& os, const CycScalar& z);

private:
    int m_ = 1;
    std::vector<Rational> c_;

    static CycScalar reduce(int m, std::vector<Rational> poly);
};

inline bool is_zero(const CycScalar& z) { return z.is_zero(); }
inline CycScalar conj(const CycScalar& z) { return z.conjugate(); }
inline Rational conj(const Rational& r) { return r; }

}  // namespace quivq
