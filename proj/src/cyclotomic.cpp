#include "quivq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quivq {

int euler_phi(int m) {
    if (m < 1) throw std::domain_error("euler_phi: m must be positive");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic; num is divisible by den.
    std::size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        long c = num[k];
        q[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
    }
    return q;
}

std::mutex g_phi_mutex;
std::map<int, std::vector<long>> g_phi_cache;

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
    if (m < 1) throw std::domain_error("cyclotomic_polynomial: m must be positive");
    {
        std::lock_guard<std::mutex> lock(g_phi_mutex);
        auto it = g_phi_cache.find(m);
        if (it != g_phi_cache.end()) return it->second;
    }
    std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return g_phi_cache.emplace(m, std::move(p)).first->second;
}

CycScalar::CycScalar(const Rational& r) : m_(1), c_{r} {}

CycScalar::CycScalar(int conductor, std::vector<Rational> coeffs) {
    if (conductor < 1) throw std::domain_error("CycScalar: conductor must be positive");
    *this = reduce(conductor, std::move(coeffs));
}

// Reduces a polynomial in zeta_m (any length) modulo x^m - 1 and then Phi_m.
CycScalar CycScalar::reduce(int m, std::vector<Rational> poly) {
    auto um = static_cast<std::size_t>(m);
    if (poly.size() > um) {
        for (std::size_t k = um; k < poly.size(); ++k) poly[k % um] += poly[k];
        poly.resize(um);
    }
    const auto& phi = cyclotomic_polynomial(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
        if (poly[k].is_zero()) continue;
        Rational c = poly[k];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi[j] != 0) poly[k - deg + j] -= c * Rational(phi[j]);
        }
    }
    poly.resize(deg);
    CycScalar out;
    bool rational = true;
    for (std::size_t k = 1; k < poly.size(); ++k) {
        if (!poly[k].is_zero()) { rational = false; break; }
    }
    if (rational) {
        out.m_ = 1;
        out.c_ = {poly.empty() ? Rational(0) : poly[0]};
    } else {
        out.m_ = m;
        out.c_ = std::move(poly);
    }
    return out;
}

CycScalar CycScalar::zeta(int m, long k) {
    if (m < 1) throw std::domain_error("CycScalar::zeta: m must be positive");
    long e = ((k % m) + m) % m;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly[static_cast<std::size_t>(e)] = Rational(1);
    return reduce(m, std::move(poly));
}

bool CycScalar::is_zero() const { return m_ == 1 && c_[0].is_zero(); }

bool CycScalar::is_rational() const { return m_ == 1; }

Rational CycScalar::to_rational() const {
    if (!is_rational()) throw std::domain_error("CycScalar::to_rational: value is irrational");
    return c_[0];
}

CycScalar CycScalar::lift(int L) const {
    if (L < 1 || L % m_ != 0) throw std::domain_error("CycScalar::lift: target is not a multiple");
    if (m_ == 1) return *this;
    auto step = static_cast<std::size_t>(L / m_);
    std::vector<Rational> poly((c_.size() - 1) * step + 1, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
    return reduce(L, std::move(poly));
}

CycScalar CycScalar::galois(long a) const {
    if (m_ == 1) return *this;
    long e = ((a % m_) + m_) % m_;
    if (std::gcd(e, static_cast<long>(m_)) != 1)
        throw std::domain_error("CycScalar::galois: exponent not coprime to conductor");
    std::vector<Rational> poly(static_cast<std::size_t>(m_), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
        poly[(k * static_cast<std::size_t>(e)) % static_cast<std::size_t>(m_)] += c_[k];
    }
    return reduce(m_, std::move(poly));
}

CycScalar CycScalar::conjugate() const { return galois(m_ - 1); }

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("CycScalar: division by zero");
    if (m_ == 1) return CycScalar(Rational(1) / c_[0]);
    // Product of the nontrivial Galois conjugates divided by the norm.
    CycScalar others(1);
    for (long a = 2; a < m_; ++a) {
        if (std::gcd(a, static_cast<long>(m_)) == 1) others *= galois(a);
    }
    CycScalar norm = *this * others;
    return others * CycScalar(Rational(1) / norm.to_rational());
}

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    int L = lcm_int(m_, o.m_);
    CycScalar a = lift(L);
    CycScalar b = o.lift(L);
    std::vector<Rational> poly(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) poly[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) poly[k] += b.c_[k];
    *this = reduce(L, std::move(poly));
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    if (o.m_ == 1) {
        if (o.c_[0].is_zero()) return *this = CycScalar(0);
        for (auto& c : c_) c *= o.c_[0];
        return *this;
    }
    if (m_ == 1) {
        Rational s = c_[0];
        *this = o;
        if (s.is_zero()) return *this = CycScalar(0);
        for (auto& c : c_) c *= s;
        return *this;
    }
    int L = lcm_int(m_, o.m_);
    CycScalar a = lift(L);
    CycScalar b = o.lift(L);
    std::vector<Rational> poly(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (!b.c_[j].is_zero()) poly[i + j] += a.c_[i] * b.c_[j];
        }
    }
    *this = reduce(L, std::move(poly));
    return *this;
}

CycScalar operator-(const CycScalar& a) {
    CycScalar r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    return (a - b).is_zero();
}

std::string CycScalar::key() const {
    std::string s = std::to_string(m_) + ":";
    for (const auto& c : c_) s += c.str() + ",";
    return s;
}

std::ostream& operator<<(std::ostream& os, const CycScalar& z) {
    if (z.m_ == 1) return os << z.c_[0];
    os << "(";
    bool first = true;
    for (std::size_t k = 0; k < z.c_.size(); ++k) {
        if (z.c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << z.c_[k];
        if (k > 0) os << "*z" << z.m_ << "^" << k;
    }
    return os << ")";
}

}  // namespace quivq
