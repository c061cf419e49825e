#include "quivq/quiver.hpp"

#include "quivq/random.hpp"

namespace quivq {

Quiver::Quiver(int n, std::vector<Arrow> a) : vertices(n), arrows(std::move(a)) {
    if (n < 0) throw std::invalid_argument("Quiver: negative vertex count");
    for (const auto& ar : arrows) {
        if (ar.tail < 0 || ar.tail >= n || ar.head < 0 || ar.head >= n)
            throw std::invalid_argument("Quiver: arrow endpoint out of range");
    }
}

bool Quiver::has_loops() const {
    for (const auto& a : arrows) {
        if (a.tail == a.head) return true;
    }
    return false;
}

bool Quiver::has_loop_at(int i) const {
    for (const auto& a : arrows) {
        if (a.tail == i && a.head == i) return true;
    }
    return false;
}

std::vector<std::vector<long>> Quiver::adjacency() const {
    std::vector<std::vector<long>> n(vertices, std::vector<long>(vertices, 0));
    for (const auto& a : arrows) {
        n[a.tail][a.head] += 1;
        n[a.head][a.tail] += 1;
    }
    return n;
}

FramedQuiver::FramedQuiver(Quiver q, DimVec d) : base(std::move(q)), framing(std::move(d)) {
    if (framing.size() != static_cast<std::size_t>(base.vertices))
        throw std::invalid_argument("FramedQuiver: framing length mismatch");
    for (long x : framing) {
        if (x < 0) throw std::invalid_argument("FramedQuiver: negative framing");
    }
}

Quiver FramedQuiver::expanded() const {
    Quiver q = base;
    int s = base.vertices;
    q.vertices = s + 1;
    for (int i = 0; i < base.vertices; ++i)
        for (long j = 0; j < framing[i]; ++j) q.arrows.push_back({i, s});
    return q;
}

DimVec FramedQuiver::expanded_dims(const DimVec& v) const {
    DimVec out = v;
    out.push_back(1);
    return out;
}

Rational pair(const std::vector<Rational>& theta, const DimVec& v) {
    if (theta.size() != v.size()) throw std::invalid_argument("pair: length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += theta[i] * Rational(v[i]);
    return s;
}

std::pair<int, int> doubled_arrow_ends(const Quiver& q, int id) {
    auto m = static_cast<int>(q.arrows.size());
    if (id < 0 || id >= 2 * m + 2 * q.vertices) throw DomainError("NonComposablePath", "arrow id out of range");
    if (id < 2 * m) {
        const auto& a = q.arrows[id / 2];
        return id % 2 == 0 ? std::pair{a.tail, a.head} : std::pair{a.head, a.tail};
    }
    int i = (id - 2 * m) / 2;
    int framing_node = q.vertices + i;
    return id % 2 == 0 ? std::pair{framing_node, i} : std::pair{i, framing_node};
}

namespace {

// Rows spanning the annihilator of the column span of basis (an n x k matrix).
MatQ annihilator(const MatQ& basis, std::size_t n) {
    if (basis.cols() == 0) return MatQ::identity(n);
    return kernel_matrix(basis.transpose()).transpose();
}

}  // namespace

bool is_semistable_det(const RepQ& rep) {
    rep.validate();
    std::size_t n = rep.v.size();
    std::vector<MatQ> S(n);
    for (std::size_t i = 0; i < n; ++i) S[i] = kernel_matrix(rep.Delta[i]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (S[i].cols() == 0) continue;
            // Constraints N_j M P y = 0 for every map M out of vertex i.
            MatQ constraints(0, S[i].cols());
            for (std::size_t k = 0; k < rep.quiver.arrows.size(); ++k) {
                const auto& a = rep.quiver.arrows[k];
                if (static_cast<std::size_t>(a.tail) == i) {
                    auto N = annihilator(S[a.head], static_cast<std::size_t>(rep.v[a.head]));
                    constraints = vstack(constraints, N * rep.A[k] * S[i]);
                }
                if (static_cast<std::size_t>(a.head) == i) {
                    auto N = annihilator(S[a.tail], static_cast<std::size_t>(rep.v[a.tail]));
                    constraints = vstack(constraints, N * rep.B[k] * S[i]);
                }
            }
            MatQ y = kernel_matrix(constraints);
            if (y.cols() < S[i].cols()) {
                S[i] = S[i] * y;
                changed = true;
            }
        }
    }
    for (const auto& s : S) {
        if (s.cols() != 0) return false;
    }
    return true;
}

namespace {

std::vector<Rational> flatten(const std::vector<MatQ>& blocks) {
    std::vector<Rational> out;
    for (const auto& m : blocks) out.insert(out.end(), m.entries().begin(), m.entries().end());
    return out;
}

}  // namespace

RepQ sample_lambda(const FramedQuiver& fq, const DimVec& v, const std::vector<Rational>& target,
                   std::uint64_t seed, bool require_nonzero_dual) {
    if (target.size() != v.size()) throw std::invalid_argument("sample_lambda: target length mismatch");
    RepQ rep = RepQ::zero(fq.base, v, fq.framing);
    SeedStream rng(seed);
    for (auto& m : rep.A)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng.small_nonzero();
    for (auto& m : rep.Gamma)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng.small_nonzero();

    // Unknown coordinates are B and Delta; mu is linear in them for fixed (A, Gamma).
    std::size_t nA = 0;
    std::size_t nGamma = 0;
    for (const auto& m : rep.A) nA += m.rows() * m.cols();
    for (const auto& m : rep.Gamma) nGamma += m.rows() * m.cols();
    std::size_t nB = nA;
    std::size_t nDelta = nGamma;
    std::vector<Rational> base = rep.coordinates();
    std::vector<std::size_t> unknown;
    for (std::size_t k = 0; k < nB; ++k) unknown.push_back(nA + k);
    for (std::size_t k = 0; k < nDelta; ++k) unknown.push_back(nA + nB + nGamma + k);

    std::size_t eqs = 0;
    for (long x : v) eqs += static_cast<std::size_t>(x * x);
    MatQ L(eqs, unknown.size());
    RepQ probe = rep;
    for (std::size_t u = 0; u < unknown.size(); ++u) {
        std::vector<Rational> x = base;
        x[unknown[u]] = Rational(1);
        probe.set_coordinates(x);
        auto col = flatten(moment_map(probe));
        for (std::size_t r = 0; r < eqs; ++r) L(r, u) = col[r];
    }
    std::vector<MatQ> tgt;
    for (std::size_t i = 0; i < v.size(); ++i) tgt.push_back(MatQ::scalar(static_cast<std::size_t>(v[i]), target[i]));
    MatQ rhs = MatQ::column(flatten(tgt));
    auto part = try_solve(L, rhs);
    if (!part) throw DomainError("SampleFailed", "moment map equation has no solution for the sampled (A, Gamma)");
    std::vector<Rational> u = part->col(0);
    for (const auto& kv : kernel(L)) {
        Rational c = rng.small_nonzero();
        for (std::size_t k = 0; k < u.size(); ++k) u[k] += c * kv[k];
    }
    bool all_zero = true;
    for (const auto& x : u) all_zero = all_zero && x.is_zero();
    if (require_nonzero_dual && all_zero && !u.empty())
        throw DomainError("SampleFailed", "linear system forces B = Delta = 0");
    std::vector<Rational> x = base;
    for (std::size_t k = 0; k < unknown.size(); ++k) x[unknown[k]] = u[k];
    rep.set_coordinates(x);
    return rep;
}

RepQ sample_lambda0(const FramedQuiver& fq, const DimVec& v, std::uint64_t seed, bool require_nonzero_dual) {
    return sample_lambda(fq, v, std::vector<Rational>(v.size(), Rational(0)), seed, require_nonzero_dual);
}

RepQ expand_framing(const RepQ& rep) {
    rep.validate();
    FramedQuiver fq(rep.quiver, rep.w);
    Quiver q = fq.expanded();
    DimVec vw = fq.expanded_dims(rep.v);
    RepQ out = RepQ::zero(q, vw, DimVec(vw.size(), 0));
    for (std::size_t k = 0; k < rep.A.size(); ++k) {
        out.A[k] = rep.A[k];
        out.B[k] = rep.B[k];
    }
    std::size_t k = rep.A.size();
    for (std::size_t i = 0; i < rep.v.size(); ++i)
        for (long j = 0; j < rep.w[i]; ++j, ++k) {
            auto jj = static_cast<std::size_t>(j);
            out.A[k] = rep.Delta[i].block(jj, 0, 1, rep.Delta[i].cols());
            out.B[k] = -rep.Gamma[i].block(0, jj, rep.Gamma[i].rows(), 1);
        }
    return out;
}

RepQ collapse_framing(const RepQ& rep, const DimVec& framing) {
    rep.validate();
    std::size_t n = framing.size();
    if (rep.v.size() != n + 1) throw std::invalid_argument("collapse_framing: not an expanded representation");
    long extra = 0;
    for (long d : framing) extra += d;
    std::size_t base_arrows = rep.quiver.arrows.size() - static_cast<std::size_t>(extra);
    Quiver q(static_cast<int>(n), std::vector<Arrow>(rep.quiver.arrows.begin(),
                                                     rep.quiver.arrows.begin() + static_cast<long>(base_arrows)));
    DimVec v(rep.v.begin(), rep.v.end() - 1);
    RepQ out = RepQ::zero(q, v, framing);
    for (std::size_t k = 0; k < base_arrows; ++k) {
        out.A[k] = rep.A[k];
        out.B[k] = rep.B[k];
    }
    std::size_t k = base_arrows;
    for (std::size_t i = 0; i < n; ++i)
        for (long j = 0; j < framing[i]; ++j, ++k) {
            auto jj = static_cast<std::size_t>(j);
            out.Delta[i].set_block(jj, 0, rep.A[k]);
            out.Gamma[i].set_block(0, jj, -rep.B[k]);
        }
    return out;
}

RepJ to_jet(const RepQ& rep) {
    return jet_along(rep, std::vector<Rational>(rep.coordinate_count(), Rational(0)));
}

RepJ jet_along(const RepQ& rep, const std::vector<Rational>& tangent) {
    RepJ out = RepJ::zero(rep.quiver, rep.v, rep.w);
    auto x = rep.coordinates();
    if (tangent.size() != x.size()) throw std::invalid_argument("jet_along: tangent length mismatch");
    std::vector<JetQ> y;
    y.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y.emplace_back(x[k], tangent[k]);
    out.set_coordinates(y);
    return out;
}

RepQ jet_value(const RepJ& rep) {
    RepQ out = RepQ::zero(rep.quiver, rep.v, rep.w);
    std::vector<Rational> x;
    for (const auto& j : rep.coordinates()) x.push_back(j.value());
    out.set_coordinates(x);
    return out;
}

RepQ jet_derivative(const RepJ& rep) {
    RepQ out = RepQ::zero(rep.quiver, rep.v, rep.w);
    std::vector<Rational> x;
    for (const auto& j : rep.coordinates()) x.push_back(j.derivative());
    out.set_coordinates(x);
    return out;
}

std::vector<std::vector<Rational>> moment_kernel_basis(const RepQ& rep) {
    std::size_t c = rep.coordinate_count();
    std::size_t eqs = 0;
    for (long x : rep.v) eqs += static_cast<std::size_t>(x * x);
    MatQ D(eqs, c);
    for (std::size_t k = 0; k < c; ++k) {
        std::vector<Rational> t(c, Rational(0));
        t[k] = Rational(1);
        auto mu = moment_map(jet_along(rep, t));
        std::size_t r = 0;
        for (const auto& m : mu)
            for (const auto& e : m.entries()) D(r++, k) = e.derivative();
    }
    return kernel(D);
}

std::vector<Rational> reflect_character(const Quiver& q, int i, const std::vector<Rational>& chi) {
    if (i < 0 || i >= q.vertices || chi.size() != static_cast<std::size_t>(q.vertices))
        throw std::invalid_argument("reflect_character: index or length out of range");
    auto n = q.adjacency();
    std::vector<Rational> out = chi;
    for (int j = 0; j < q.vertices; ++j) {
        long a_ji = (j == i ? 2 : 0) - n[j][i];
        out[j] -= Rational(a_ji) * chi[i];
    }
    return out;
}

DimVec reflect_dimension(const Quiver& q, int i, const DimVec& v) {
    auto n = q.adjacency();
    long s = 0;
    for (int j = 0; j < q.vertices; ++j) {
        if (j != i) s += n[i][j] * v[j];
    }
    DimVec out = v;
    out[i] = s - v[i];
    return out;
}

ReflectionBlocks reflection_blocks(const RepQ& rep, int i) {
    rep.validate();
    const Quiver& q = rep.quiver;
    if (i < 0 || i >= q.vertices) throw std::invalid_argument("reflection_blocks: vertex out of range");
    auto vi = static_cast<std::size_t>(rep.v[i]);
    // Make i a source: an arrow b -> i contributes (A', B') = (B_b, -A_b).
    ReflectionBlocks out;
    std::size_t dimT = 0;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto& a = q.arrows[k];
        if (a.tail != i && a.head != i) continue;
        bool rev = a.head == i;
        auto s = static_cast<std::size_t>(rep.v[rev ? a.tail : a.head]);
        out.slots.push_back({k, rev, dimT, s});
        dimT += s;
    }
    out.A = MatQ(dimT, vi);
    out.B = MatQ(vi, dimT);
    for (const auto& s : out.slots) {
        out.A.set_block(s.offset, 0, s.reversed ? rep.B[s.arrow] : rep.A[s.arrow]);
        out.B.set_block(0, s.offset, s.reversed ? MatQ(-rep.A[s.arrow]) : rep.B[s.arrow]);
    }
    return out;
}

RepQ reflect(const RepQ& rep, int i, const std::vector<Rational>& chi) {
    rep.validate();
    const Quiver& q = rep.quiver;
    if (i < 0 || i >= q.vertices) throw std::invalid_argument("reflect: vertex out of range");
    if (chi.size() != rep.v.size()) throw std::invalid_argument("reflect: chi length mismatch");
    for (long d : rep.w) {
        if (d != 0) throw DomainError("NotReflectable", "framed representation; expand the framing first");
    }
    if (q.has_loop_at(i)) throw DomainError("NotReflectable", "vertex has a loop");
    auto mu = moment_map(rep);
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (mu[j] != MatQ::scalar(static_cast<std::size_t>(rep.v[j]), -chi[j]))
            throw DomainError("PreconditionMomentMap", "moment map differs from -chi at vertex " + std::to_string(j));
    }
    auto vi = static_cast<std::size_t>(rep.v[i]);
    auto blocks = reflection_blocks(rep, i);
    const MatQ& Abig = blocks.A;
    const MatQ& Bbig = blocks.B;
    std::size_t dimT = Abig.rows();
    if (rank(Bbig) != vi) throw DomainError("NotReflectable", "B is not surjective at vertex " + std::to_string(i));
    MatQ Anew = kernel_matrix(Bbig);
    MatQ rhs = Abig * Bbig - MatQ::scalar(dimT, chi[i]);
    auto Bnew = try_solve(Anew, rhs);
    if (!Bnew) throw DomainError("NotReflectable", "A'B' = AB - chi_i id has no solution");

    DimVec v2 = rep.v;
    v2[i] = static_cast<long>(Anew.cols());
    RepQ out = RepQ::zero(q, v2, rep.w);
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        out.A[k] = rep.A[k];
        out.B[k] = rep.B[k];
    }
    std::size_t vi2 = Anew.cols();
    for (const auto& s : blocks.slots) {
        MatQ Ak = Anew.block(s.offset, 0, s.size, vi2);
        MatQ Bk = Bnew->block(0, s.offset, vi2, s.size);
        if (s.reversed) {
            out.A[s.arrow] = -Bk;
            out.B[s.arrow] = Ak;
        } else {
            out.A[s.arrow] = Ak;
            out.B[s.arrow] = Bk;
        }
    }
    return out;
}

}  // namespace quivq
