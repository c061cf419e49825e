#pragma once

#include <ostream>

#include "quivq/cyclotomic.hpp"
#include "quivq/rational.hpp"

namespace quivq {

/// First-order jet value + eps*derivative with eps^2 = 0.
template <class T>
class Jet {
public:
    Jet() = default;
    Jet(const T& value) : v_(value), d_(0) {}  // NOLINT(google-explicit-constructor)
    Jet(long value) : v_(value), d_(0) {}  // NOLINT(google-explicit-constructor)
    Jet(int value) : v_(static_cast<long>(value)), d_(0) {}  // NOLINT(google-explicit-constructor)
    Jet(const T& value, const T& derivative) : v_(value), d_(derivative) {}

    [[nodiscard]] const T& value() const { return v_; }
    [[nodiscard]] const T& derivative() const { return d_; }
    [[nodiscard]] bool is_zero() const { return quivq::is_zero(v_) && quivq::is_zero(d_); }

    Jet& operator+=(const Jet& o) { v_ += o.v_; d_ += o.d_; return *this; }
    Jet& operator-=(const Jet& o) { v_ -= o.v_; d_ -= o.d_; return *this; }
    Jet& operator*=(const Jet& o) {
        d_ = v_ * o.d_ + d_ * o.v_;
        v_ *= o.v_;
        return *this;
    }
    Jet& operator/=(const Jet& o) {
        T inv = T(1) / o.v_;
        d_ = (d_ - v_ * o.d_ * inv) * inv;
        v_ *= inv;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
    friend Jet operator-(const Jet& a) { return Jet(-a.v_, -a.d_); }
    friend bool operator==(const Jet& a, const Jet& b) { return a.v_ == b.v_ && a.d_ == b.d_; }

    friend std::ostream& operator<<(std::ostream& os, const Jet& j) {
        return os << "[" << j.v_ << " + eps*" << j.d_ << "]";
    }

private:
    T v_{0};
    T d_{0};
};

template <class T>
bool is_zero(const Jet<T>& j) { return j.is_zero(); }

using JetQ = Jet<Rational>;
using JetC = Jet<CycScalar>;

}  // namespace quivq
