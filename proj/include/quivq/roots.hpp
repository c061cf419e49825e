#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quivq/quiver.hpp"

namespace quivq {

enum class CartanType { Finite, Affine, Indefinite };

std::string to_string(CartanType t);

/// Symmetric generalized Cartan matrix a_ij = 2 delta_ij - n_ij of a loop-free quiver.
struct CartanData {
    std::vector<std::vector<long>> matrix;
    CartanType type = CartanType::Finite;

    [[nodiscard]] std::size_t rank() const { return matrix.size(); }
    /// (x, y) = x^T C y.
    [[nodiscard]] long form(const DimVec& x, const DimVec& y) const;
};

/// Throws DomainError("UnsupportedQuiver") if q has loops.
CartanData cartan_from_quiver(const Quiver& q);

/// Cartan data from an explicit symmetric matrix; the type tag is computed.
CartanData cartan_from_matrix(std::vector<std::vector<long>> m);

/// Primitive positive vector spanning ker C for a connected affine matrix.
DimVec affine_delta(const CartanData& c);

struct Root {
    DimVec coords;
    bool real = true;
    friend bool operator==(const Root&, const Root&) = default;
};

/// p(alpha) = 1 - sum alpha_i^2 + sum_a alpha_t(a) alpha_h(a).
Rational p_value(const DimVec& alpha, const Quiver& q);

/// Every positive root alpha <= bound (componentwise), sorted lexicographically. Real
/// roots come from increasing reflection chains starting at simple roots, imaginary
/// roots from the fundamental set closed under increasing reflections; both chains
/// stay below their endpoint, so the enumeration is complete for any loop-free quiver.
std::vector<Root> positive_roots_below(const Quiver& q, const DimVec& bound);

struct CbReport {
    DimVec vw;                                  // v^w on Q^w
    Rational p_total;                           // p(v^w)
    bool strict = false;                        // which inequality was tested
    bool holds = true;
    std::size_t decompositions = 0;             // number of decompositions into >= 2 roots
    std::vector<std::vector<DimVec>> violations;  // capped list of violating decompositions
};

/// Crawley-Boevey inequality p(v^w) >= sum p(v^i) (or > when strict) over every
/// decomposition of v^w into at least two positive roots of Q^w.
CbReport cb_flatness_check(const FramedQuiver& fq, const DimVec& v, bool strict, std::size_t max_violations = 16);

/// Same check on an unframed quiver and dimension vector.
CbReport cb_flatness_check_unframed(const Quiver& q, const DimVec& alpha, bool strict, std::size_t max_violations = 16);

/// theta . alpha != 0 for every positive root alpha <= bound.
bool is_generic(const std::vector<Rational>& theta, const Quiver& q, const DimVec& bound);

/// Dimension of the weight space of d - sum v_i alpha_i in L(d), by Freudenthal's formula.
/// Throws DomainError("NonDominantHighestWeight") or DomainError("IndefiniteType").
long weight_multiplicity(const CartanData& c, const DimVec& d, const DimVec& v);

/// d_i >= 2 v_i - v_{i-1} - v_{i+1} for all i (v_0 = v_n = 0); d and v have length n-1.
bool dominance_check(const DimVec& d, const DimVec& v);

struct DominanceViolation {
    DimVec v_prime;
    Rational lhs;  // p(v^w) - p(v'^w)
    Rational rhs;  // (u, u) / 2 with u = v - v'
};

/// Scans every 0 <= v' <= v on the type-A framed quiver and reports each v' with
/// p(v^w) - p(v'^w) < (u, u)/2. Returns the number of v' scanned in `scanned`.
std::vector<DominanceViolation> typea_dominance_scan(const DimVec& d, const DimVec& v, std::size_t* scanned = nullptr);

}  // namespace quivq
