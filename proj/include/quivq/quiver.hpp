#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quivq/errors.hpp"
#include "quivq/linalg.hpp"
#include "quivq/matrix.hpp"

namespace quivq {

using DimVec = std::vector<long>;

struct Arrow {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver; loops and multiple arrows are allowed.
struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;

    Quiver() = default;
    Quiver(int n, std::vector<Arrow> a);

    [[nodiscard]] bool has_loops() const;
    [[nodiscard]] bool has_loop_at(int i) const;
    /// Symmetric matrix of edge counts n_ij = #(i->j) + #(j->i), diagonal counts loops twice.
    [[nodiscard]] std::vector<std::vector<long>> adjacency() const;
    friend bool operator==(const Quiver&, const Quiver&) = default;
};

struct FramedQuiver {
    Quiver base;
    DimVec framing;  // d_i

    FramedQuiver() = default;
    FramedQuiver(Quiver q, DimVec d);

    /// The quiver Q^w: one extra vertex s = base.vertices and d_i arrows i -> s.
    [[nodiscard]] Quiver expanded() const;
    /// v^w = (v, 1).
    [[nodiscard]] DimVec expanded_dims(const DimVec& v) const;
};

/// Pairing theta . v.
Rational pair(const std::vector<Rational>& theta, const DimVec& v);

/// Point of R(DQ, v, w): A_a : V_t -> V_h, B_a : V_h -> V_t, Gamma_i : D_i -> V_i,
/// Delta_i : V_i -> D_i.
template <class T>
struct QuiverRep {
    Quiver quiver;
    DimVec v;
    DimVec w;
    std::vector<Matrix<T>> A;
    std::vector<Matrix<T>> B;
    std::vector<Matrix<T>> Gamma;
    std::vector<Matrix<T>> Delta;

    /// All-zero representation of the given shape.
    static QuiverRep zero(const Quiver& q, const DimVec& v, const DimVec& w);

    void validate() const;
    [[nodiscard]] std::size_t coordinate_count() const;
    /// Flattened coordinates in the order A, B, Gamma, Delta (row-major blocks).
    [[nodiscard]] std::vector<T> coordinates() const;
    void set_coordinates(const std::vector<T>& x);

    friend bool operator==(const QuiverRep&, const QuiverRep&) = default;
};

using RepQ = QuiverRep<Rational>;
using RepJ = QuiverRep<JetQ>;

/// Vertex components of the moment map.
template <class T>
std::vector<Matrix<T>> moment_map(const QuiverRep<T>& rep);

/// Trace of the product along a path of the doubled framed quiver. Arrow ids:
/// 2k = a_k, 2k+1 = a_k*, 2m+2i = Gamma_i, 2m+2i+1 = Delta_i (m = #arrows). The product
/// is M_{p0} M_{p1} ... with the rightmost applied first.
template <class T>
T trace_invariant(const QuiverRep<T>& rep, const std::vector<int>& path);

/// (tail, head) of a doubled framed arrow id, with framing node of vertex i numbered n+i.
std::pair<int, int> doubled_arrow_ends(const Quiver& q, int id);

/// True iff the maximal (A,B)-invariant family of subspaces inside (ker Delta_i) is zero.
bool is_semistable_det(const RepQ& rep);

/// Simultaneous base change g . x for invertible g_i in GL(v_i).
template <class T>
QuiverRep<T> act(const std::vector<Matrix<T>>& g, const QuiverRep<T>& rep);

/// Exact point with moment_map = target (one scalar matrix per vertex, target_i * id),
/// obtained by fixing seeded (A, Gamma) and solving linearly for (B, Delta). Throws
/// DomainError("SampleFailed") if the system is inconsistent, or if it forces B = Delta = 0
/// while require_nonzero_dual is set.
RepQ sample_lambda(const FramedQuiver& fq, const DimVec& v, const std::vector<Rational>& target,
                   std::uint64_t seed, bool require_nonzero_dual = false);

/// sample_lambda with target 0.
RepQ sample_lambda0(const FramedQuiver& fq, const DimVec& v, std::uint64_t seed,
                    bool require_nonzero_dual = false);

/// The same point viewed as an unframed representation of Q^w with dimension v^w.
RepQ expand_framing(const RepQ& rep);
/// Inverse of expand_framing; `framing` must equal the d used for expansion.
RepQ collapse_framing(const RepQ& rep, const DimVec& framing);

/// Basis of the tangent space ker(d mu_x) at x, as coordinate vectors.
std::vector<std::vector<Rational>> moment_kernel_basis(const RepQ& rep);

/// Arrows at vertex i, all turned to point out of i: A : V_i -> T and B : T -> V_i with
/// T the sum of the neighbouring spaces (an arrow b -> i contributes (B_b, -A_b)).
struct ReflectionBlocks {
    struct Slot {
        std::size_t arrow;
        bool reversed;
        std::size_t offset;
        std::size_t size;
    };
    std::vector<Slot> slots;
    MatQ A;
    MatQ B;
};

ReflectionBlocks reflection_blocks(const RepQ& rep, int i);

/// Reflection functor at a loop-free vertex i of an unframed representation with
/// moment_map(rep) = -chi (scalar per vertex). Returns rep' with moment_map(rep') = -(s_i chi).
/// Throws DomainError("NotReflectable").
RepQ reflect(const RepQ& rep, int i, const std::vector<Rational>& chi);

/// Contragredient simple reflection on a character: (s_i chi)_j = chi_j - a_ji chi_i.
std::vector<Rational> reflect_character(const Quiver& q, int i, const std::vector<Rational>& chi);

/// Dimension vector after reflection at i: v_i' = sum_j n_ij v_j - v_i.
DimVec reflect_dimension(const Quiver& q, int i, const DimVec& v);

// ---------------------------------------------------------------------------

template <class T>
QuiverRep<T> QuiverRep<T>::zero(const Quiver& q, const DimVec& v, const DimVec& w) {
    if (v.size() != static_cast<std::size_t>(q.vertices) || w.size() != v.size())
        throw std::invalid_argument("QuiverRep::zero: dimension vector length mismatch");
    QuiverRep r;
    r.quiver = q;
    r.v = v;
    r.w = w;
    for (const auto& a : q.arrows) {
        auto vt = static_cast<std::size_t>(v[a.tail]);
        auto vh = static_cast<std::size_t>(v[a.head]);
        r.A.emplace_back(vh, vt);
        r.B.emplace_back(vt, vh);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        r.Gamma.emplace_back(v[i], w[i]);
        r.Delta.emplace_back(w[i], v[i]);
    }
    return r;
}

template <class T>
void QuiverRep<T>::validate() const {
    auto n = static_cast<std::size_t>(quiver.vertices);
    if (v.size() != n || w.size() != n || Gamma.size() != n || Delta.size() != n ||
        A.size() != quiver.arrows.size() || B.size() != quiver.arrows.size())
        throw std::invalid_argument("QuiverRep: block count mismatch");
    for (std::size_t k = 0; k < quiver.arrows.size(); ++k) {
        auto vt = static_cast<std::size_t>(v[quiver.arrows[k].tail]);
        auto vh = static_cast<std::size_t>(v[quiver.arrows[k].head]);
        if (A[k].rows() != vh || A[k].cols() != vt || B[k].rows() != vt || B[k].cols() != vh)
            throw std::invalid_argument("QuiverRep: arrow block shape mismatch at arrow " + std::to_string(k));
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto vi = static_cast<std::size_t>(v[i]);
        auto di = static_cast<std::size_t>(w[i]);
        if (Gamma[i].rows() != vi || Gamma[i].cols() != di || Delta[i].rows() != di || Delta[i].cols() != vi)
            throw std::invalid_argument("QuiverRep: framing block shape mismatch at vertex " + std::to_string(i));
    }
}

template <class T>
std::size_t QuiverRep<T>::coordinate_count() const {
    std::size_t c = 0;
    for (const auto* blocks : {&A, &B, &Gamma, &Delta})
        for (const auto& m : *blocks) c += m.rows() * m.cols();
    return c;
}

template <class T>
std::vector<T> QuiverRep<T>::coordinates() const {
    std::vector<T> x;
    x.reserve(coordinate_count());
    for (const auto* blocks : {&A, &B, &Gamma, &Delta})
        for (const auto& m : *blocks) x.insert(x.end(), m.entries().begin(), m.entries().end());
    return x;
}

template <class T>
void QuiverRep<T>::set_coordinates(const std::vector<T>& x) {
    if (x.size() != coordinate_count()) throw std::invalid_argument("QuiverRep: coordinate count mismatch");
    std::size_t pos = 0;
    for (auto* blocks : {&A, &B, &Gamma, &Delta})
        for (auto& m : *blocks)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = x[pos++];
}

template <class T>
std::vector<Matrix<T>> moment_map(const QuiverRep<T>& rep) {
    rep.validate();
    std::vector<Matrix<T>> mu;
    for (std::size_t i = 0; i < rep.v.size(); ++i) mu.push_back(rep.Gamma[i] * rep.Delta[i]);
    for (std::size_t k = 0; k < rep.quiver.arrows.size(); ++k) {
        const auto& a = rep.quiver.arrows[k];
        mu[a.head] += rep.A[k] * rep.B[k];
        mu[a.tail] -= rep.B[k] * rep.A[k];
    }
    return mu;
}

template <class T>
T trace_invariant(const QuiverRep<T>& rep, const std::vector<int>& path) {
    if (path.empty()) throw DomainError("NonComposablePath", "empty path");
    auto m = static_cast<int>(rep.quiver.arrows.size());
    auto block = [&](int id) -> const Matrix<T>& {
        if (id < 0 || id >= 2 * m + 2 * rep.quiver.vertices)
            throw DomainError("NonComposablePath", "arrow id out of range");
        if (id < 2 * m) return (id % 2 == 0) ? rep.A[id / 2] : rep.B[id / 2];
        int i = (id - 2 * m) / 2;
        return (id % 2 == 0) ? rep.Gamma[i] : rep.Delta[i];
    };
    for (std::size_t k = 0; k < path.size(); ++k) {
        auto outer = doubled_arrow_ends(rep.quiver, path[k]);
        auto inner = doubled_arrow_ends(rep.quiver, path[(k + 1) % path.size()]);
        if (inner.second != outer.first)
            throw DomainError("NonComposablePath", "arrows " + std::to_string(path[(k + 1) % path.size()]) +
                                                       " and " + std::to_string(path[k]) + " do not compose");
    }
    Matrix<T> prod = block(path[0]);
    for (std::size_t k = 1; k < path.size(); ++k) prod = prod * block(path[k]);
    return prod.trace();
}

template <class T>
QuiverRep<T> act(const std::vector<Matrix<T>>& g, const QuiverRep<T>& rep) {
    std::vector<Matrix<T>> ginv;
    for (const auto& gi : g) ginv.push_back(inverse(gi));
    QuiverRep<T> out = rep;
    for (std::size_t k = 0; k < rep.quiver.arrows.size(); ++k) {
        const auto& a = rep.quiver.arrows[k];
        out.A[k] = g[a.head] * rep.A[k] * ginv[a.tail];
        out.B[k] = g[a.tail] * rep.B[k] * ginv[a.head];
    }
    for (std::size_t i = 0; i < rep.v.size(); ++i) {
        out.Gamma[i] = g[i] * rep.Gamma[i];
        out.Delta[i] = rep.Delta[i] * ginv[i];
    }
    return out;
}

/// Converts a rational representation to a constant Jet representation.
RepJ to_jet(const RepQ& rep);
/// Jet representation rep + eps * tangent (tangent given as coordinates).
RepJ jet_along(const RepQ& rep, const std::vector<Rational>& tangent);
RepQ jet_value(const RepJ& rep);
RepQ jet_derivative(const RepJ& rep);

}  // namespace quivq
