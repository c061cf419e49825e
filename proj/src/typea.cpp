#include "quivq/typea.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "quivq/errors.hpp"
#include "quivq/fixtures.hpp"
#include "quivq/linalg.hpp"
#include "quivq/random.hpp"

namespace quivq {

Quiver TypeAData::quiver() const { return fixtures::type_a(n - 1); }

FramedQuiver TypeAData::framed_quiver() const { return FramedQuiver(quiver(), d); }

bool TypeAData::is_e0() const {
    for (std::size_t k = 1; k < d.size(); ++k)
        if (d[k] != 0) return false;
    return !d.empty() && d[0] == N;
}

TypeAData build_typea(int n, long N, const std::vector<long>& r, const std::vector<long>& d) {
    if (n < 2 || N < 1) throw std::invalid_argument("build_typea: need n >= 2 and N >= 1");
    if (r.size() != static_cast<std::size_t>(n) || d.size() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("build_typea: r needs n entries and d needs n-1");
    long sr = 0;
    long sd = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] < 0) throw std::invalid_argument("build_typea: negative r");
        sr += r[k];
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] < 0) throw std::invalid_argument("build_typea: negative d");
        sd += static_cast<long>(k + 1) * d[k];
    }
    if (sr != N) throw std::invalid_argument("build_typea: sum r_i != N");
    if (sd != N) throw std::invalid_argument("build_typea: sum i*d_i != N");

    TypeAData t;
    t.n = n;
    t.N = N;
    t.r = r;
    t.d = d;
    for (int i = 1; i < n; ++i) {
        long vi = 0;
        long extra = 0;
        for (int j = i + 1; j <= n; ++j) vi += r[j - 1];
        for (int j = i + 1; j <= n - 1; ++j) {
            vi -= (j - i) * d[j - 1];
            extra += (j - i) * d[j - 1];
        }
        if (vi <= 0)
            throw DomainError("NonPositiveDimension", "v_" + std::to_string(i) + " = " + std::to_string(vi));
        t.v.push_back(vi);
        t.tilde_v.push_back(vi + extra);
        t.tilde_d.push_back(i == 1 ? N : 0);
    }
    return t;
}

long grad_degree(int i, int j, int h, int jp, int hp, BlockKind kind) {
    (void)i;
    if (kind == BlockKind::T) return std::min(h - hp + 1, h - hp + 1 + jp - j);
    return std::min(h - hp, h - hp + jp - j);
}

long TypeALayout::weight(int i, const Summand& s) const {
    if (s.is_v) return 0;
    return s.j - i + 1 - 2 * s.h;
}

std::size_t TypeALayout::d_prime_offset(int i) const {
    const auto& sp = spaces[static_cast<std::size_t>(i)];
    if (!sp.empty() && sp.front().is_v) return sp.front().dim;
    return 0;
}

TypeALayout make_layout(const TypeAData& data) {
    TypeALayout L;
    auto add = [](std::vector<Summand>& sp, Summand s) {
        s.offset = sp.empty() ? 0 : sp.back().offset + sp.back().dim;
        sp.push_back(s);
    };
    L.spaces.resize(static_cast<std::size_t>(data.n));
    for (int j = 1; j < data.n; ++j)
        for (int h = 1; h <= j; ++h) add(L.spaces[0], {false, j, h, static_cast<std::size_t>(data.d[j - 1]), 0});
    for (int i = 1; i < data.n; ++i) {
        auto& sp = L.spaces[static_cast<std::size_t>(i)];
        add(sp, {true, 0, 0, static_cast<std::size_t>(data.v[i - 1]), 0});
        for (int j = i + 1; j < data.n; ++j)
            for (int h = 1; h <= j - i; ++h) add(sp, {false, j, h, static_cast<std::size_t>(data.d[j - 1]), 0});
    }
    for (const auto& sp : L.spaces) L.dims.push_back(sp.empty() ? 0 : sp.back().offset + sp.back().dim);
    return L;
}

bool sl2_relations_hold(const Sl2Triple& t) {
    auto br = [](const MatQ& a, const MatQ& b) { return a * b - b * a; };
    return br(t.h, t.e) == Rational(2) * t.e && br(t.h, t.f) == Rational(-2) * t.f && br(t.e, t.f) == t.h;
}

Sl2Triple sl2_for_blocks(const TypeAData& data, int i) {
    if (i < 0 || i >= data.n) throw std::invalid_argument("sl2_for_blocks: index out of range");
    auto L = make_layout(data);
    const auto& sp = L.spaces[static_cast<std::size_t>(i)];
    std::size_t base = L.d_prime_offset(i);
    std::size_t dim = L.dims[static_cast<std::size_t>(i)] - base;
    Sl2Triple t{MatQ(dim, dim), MatQ(dim, dim), MatQ(dim, dim)};
    auto find = [&](int j, int h) -> const Summand* {
        for (const auto& s : sp)
            if (!s.is_v && s.j == j && s.h == h) return &s;
        return nullptr;
    };
    for (const auto& s : sp) {
        if (s.is_v) continue;
        std::size_t o = s.offset - base;
        for (std::size_t k = 0; k < s.dim; ++k) t.h(o + k, o + k) = Rational(L.weight(i, s));
        if (const auto* lo = find(s.j, s.h - 1)) {
            for (std::size_t k = 0; k < s.dim; ++k) t.e(lo->offset - base + k, o + k) = Rational(1);
        }
        if (const auto* hi = find(s.j, s.h + 1)) {
            Rational c(static_cast<long>(s.h) * (s.j - i - s.h));
            for (std::size_t k = 0; k < s.dim; ++k) t.f(hi->offset - base + k, o + k) = c;
        }
    }
    return t;
}

namespace {

std::string summand_label(const Summand& s) {
    return s.is_v ? "V" : std::to_string(s.j) + "," + std::to_string(s.h);
}

}  // namespace

BlockInfo block_info(const TypeALayout& layout, bool is_a, int i, std::size_t dst, std::size_t src) {
    const auto& sp_i = layout.spaces[static_cast<std::size_t>(i)];
    const auto& sp_n = layout.spaces[static_cast<std::size_t>(i + 1)];
    const Summand& s = is_a ? sp_i[src] : sp_n[src];
    const Summand& t = is_a ? sp_n[dst] : sp_i[dst];
    BlockInfo info;
    info.degree = is_a ? 1 + layout.weight(i, s) - layout.weight(i + 1, t)
                       : 1 + layout.weight(i + 1, s) - layout.weight(i, t);
    std::string idx = std::to_string(i);
    if (s.is_v && t.is_v) {
        info.role = BlockRole::Matched;
        info.name = (is_a ? "AA(" : "BB(") + idx + ")";
        return info;
    }
    info.name = std::string(is_a ? "T(" : "S(") + idx + ";" + summand_label(t) + ";" + summand_label(s) + ")";
    if (is_a) {
        if (s.is_v) {
            info.role = BlockRole::Zero;
        } else if (t.is_v) {
            if (s.h != 1) info.role = BlockRole::Zero;
            else info.role = (s.j == i + 1) ? BlockRole::Matched : BlockRole::Free;
        } else {
            long g = grad_degree(i, t.j, t.h, s.j, s.h, BlockKind::T);
            if (g < 0) info.role = BlockRole::Zero;
            else if (g == 0) info.role = (s.j == t.j && s.h == t.h + 1) ? BlockRole::Identity : BlockRole::Zero;
            else info.role = BlockRole::Free;
        }
    } else {
        if (t.is_v) {
            info.role = BlockRole::Zero;
        } else if (s.is_v) {
            if (t.h != t.j - i) info.role = BlockRole::Zero;
            else info.role = (t.j == i + 1) ? BlockRole::Matched : BlockRole::Free;
        } else {
            long g = grad_degree(i, t.j, t.h, s.j, s.h, BlockKind::S);
            if (g < 0) info.role = BlockRole::Zero;
            else if (g == 0) info.role = (s.j == t.j && s.h == t.h) ? BlockRole::Identity : BlockRole::Zero;
            else info.role = BlockRole::Free;
        }
    }
    return info;
}

namespace {

struct BlockRef {
    bool is_a;
    int i;
    std::size_t dst;
    std::size_t src;
};

const Summand& dst_summand(const TypeALayout& L, const BlockRef& b) {
    return L.spaces[static_cast<std::size_t>(b.is_a ? b.i + 1 : b.i)][b.dst];
}
const Summand& src_summand(const TypeALayout& L, const BlockRef& b) {
    return L.spaces[static_cast<std::size_t>(b.is_a ? b.i : b.i + 1)][b.src];
}

template <class F>
void for_each_block(const TypeALayout& L, int n, F&& fn) {
    for (int i = 0; i + 1 < n; ++i) {
        for (bool is_a : {true, false}) {
            const auto& dsp = L.spaces[static_cast<std::size_t>(is_a ? i + 1 : i)];
            const auto& ssp = L.spaces[static_cast<std::size_t>(is_a ? i : i + 1)];
            for (std::size_t a = 0; a < dsp.size(); ++a)
                for (std::size_t b = 0; b < ssp.size(); ++b) {
                    if (dsp[a].dim == 0 || ssp[b].dim == 0) continue;
                    fn(BlockRef{is_a, i, a, b});
                }
        }
    }
}

template <class T>
Matrix<T>& big(BlockRep<T>& x, const BlockRef& b) {
    return b.is_a ? x.At[static_cast<std::size_t>(b.i)] : x.Bt[static_cast<std::size_t>(b.i)];
}
template <class T>
const Matrix<T>& big(const BlockRep<T>& x, const BlockRef& b) {
    return b.is_a ? x.At[static_cast<std::size_t>(b.i)] : x.Bt[static_cast<std::size_t>(b.i)];
}


template <class T>
Matrix<T> convert(const MatQ& m) {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = T(m(i, j));
    return out;
}

template <class T>
Matrix<T> read_block(const TypeALayout& L, const BlockRep<T>& x, const BlockRef& b) {
    const auto& d = dst_summand(L, b);
    const auto& s = src_summand(L, b);
    return big(x, b).block(d.offset, s.offset, d.dim, s.dim);
}

template <class T>
void write_block(const TypeALayout& L, BlockRep<T>& x, const BlockRef& b, const Matrix<T>& m) {
    big(x, b).set_block(dst_summand(L, b).offset, src_summand(L, b).offset, m);
}

template <class T>
Matrix<T> matched_value(const TypeALayout& L, const BlockRef& b, const QuiverRep<T>& x) {
    auto k = static_cast<std::size_t>(b.i);
    bool dv = dst_summand(L, b).is_v;
    bool sv = src_summand(L, b).is_v;
    if (dv && sv) return b.is_a ? x.A[k - 1] : x.B[k - 1];
    return b.is_a ? x.Gamma[k] : x.Delta[k];
}

template <class T>
struct Equations {
    std::vector<Matrix<T>> mu;   // vertex k = 1..n-1 stored at k-1
    std::vector<Matrix<T>> rel;  // i = 0..n-2
};

template <class T>
Equations<T> equations(const TypeALayout& L, const BlockRep<T>& x, const std::vector<Sl2Triple>& sl2) {
    int n = x.data.n;
    Equations<T> eq;
    for (int k = 1; k < n; ++k) {
        auto kk = static_cast<std::size_t>(k);
        Matrix<T> m = x.At[kk - 1] * x.Bt[kk - 1];
        if (k + 1 < n) m -= x.Bt[kk] * x.At[kk];
        eq.mu.push_back(std::move(m));
    }
    for (int i = 0; i + 1 < n; ++i) {
        auto ii = static_cast<std::size_t>(i);
        std::size_t base = L.d_prime_offset(i);
        std::size_t dim = L.dims[ii] - base;
        Matrix<T> p = (x.Bt[ii] * x.At[ii]).block(base, base, dim, dim) - convert<T>(sl2[ii].e);
        Matrix<T> f = convert<T>(sl2[ii].f);
        eq.rel.push_back(p * f - f * p);
    }
    return eq;
}

// Entries of every equation component of homogeneity degree m.
template <class T>
void degree_components(const TypeALayout& L, const Equations<T>& eq, long m, std::vector<T>& out) {
    for (std::size_t k = 1; k <= eq.mu.size(); ++k) {
        const auto& sp = L.spaces[k];
        for (const auto& t : sp)
            for (const auto& s : sp) {
                if (2 + L.weight(static_cast<int>(k), s) - L.weight(static_cast<int>(k), t) != m) continue;
                for (std::size_t a = 0; a < t.dim; ++a)
                    for (std::size_t b = 0; b < s.dim; ++b) out.push_back(eq.mu[k - 1](t.offset + a, s.offset + b));
            }
    }
    for (std::size_t i = 0; i < eq.rel.size(); ++i) {
        const auto& sp = L.spaces[i];
        std::size_t base = L.d_prime_offset(static_cast<int>(i));
        for (const auto& t : sp)
            for (const auto& s : sp) {
                if (t.is_v || s.is_v) continue;
                if (L.weight(static_cast<int>(i), s) - L.weight(static_cast<int>(i), t) != m) continue;
                for (std::size_t a = 0; a < t.dim; ++a)
                    for (std::size_t b = 0; b < s.dim; ++b)
                        out.push_back(eq.rel[i](t.offset - base + a, s.offset - base + b));
            }
    }
}

std::vector<Sl2Triple> all_triples(const TypeAData& data) {
    std::vector<Sl2Triple> t;
    for (int i = 0; i + 1 < data.n; ++i) t.push_back(sl2_for_blocks(data, i));
    return t;
}

template <class T>
BlockRep<T> empty_rep(const TypeAData& data, const TypeALayout& L) {
    BlockRep<T> x;
    x.data = data;
    for (int i = 0; i + 1 < data.n; ++i) {
        auto ii = static_cast<std::size_t>(i);
        x.At.emplace_back(L.dims[ii + 1], L.dims[ii]);
        x.Bt.emplace_back(L.dims[ii], L.dims[ii + 1]);
    }
    return x;
}

template <class T>
void set_identities(const TypeALayout& L, BlockRep<T>& x) {
    for_each_block(L, x.data.n, [&](const BlockRef& b) {
        if (block_info(L, b.is_a, b.i, b.dst, b.src).role == BlockRole::Identity)
            write_block(L, x, b, Matrix<T>::identity(dst_summand(L, b).dim));
    });
}

template <class T>
void check_shape(const QuiverRep<T>& x, const TypeAData& data) {
    x.validate();
    if (!(x.quiver == data.quiver()) || x.v != data.v || x.w != data.d)
        throw std::invalid_argument("representation does not match the type A data");
}

}  // namespace

template <class T>
Matrix<T> get_block(const TypeALayout& layout, const BlockRep<T>& x, bool is_a, int i, std::size_t dst,
                    std::size_t src) {
    return read_block(layout, x, BlockRef{is_a, i, dst, src});
}

std::vector<std::string> VerifyReport::failures() const {
    std::vector<std::string> f;
    for (const auto& it : items)
        if (!it.pass) f.push_back(it.name);
    return f;
}

template <class T>
VerifyReport maffei_verify(const BlockRep<T>& xt, const QuiverRep<T>* x) {
    const auto& data = xt.data;
    auto L = make_layout(data);
    VerifyReport rep;
    auto add = [&](std::string name, bool ok) {
        rep.items.push_back({std::move(name), ok});
        rep.pass = rep.pass && ok;
    };
    for (int i = 0; i + 1 < data.n; ++i) {
        auto ii = static_cast<std::size_t>(i);
        if (xt.At.size() <= ii || xt.Bt.size() <= ii || xt.At[ii].rows() != L.dims[ii + 1] ||
            xt.At[ii].cols() != L.dims[ii] || xt.Bt[ii].rows() != L.dims[ii] || xt.Bt[ii].cols() != L.dims[ii + 1])
            throw std::invalid_argument("maffei_verify: block shapes do not match the type A data");
    }
    if (x) check_shape(*x, data);
    for_each_block(L, data.n, [&](const BlockRef& b) {
        auto info = block_info(L, b.is_a, b.i, b.dst, b.src);
        Matrix<T> m = read_block(L, xt, b);
        switch (info.role) {
            case BlockRole::Zero: add("zero " + info.name, m.is_zero()); break;
            case BlockRole::Identity: add("identity " + info.name, m == Matrix<T>::identity(m.rows())); break;
            case BlockRole::Matched:
                if (x) add("match " + info.name, m == matched_value(L, b, *x));
                break;
            case BlockRole::Free: break;
        }
    });
    auto eq = equations(L, xt, all_triples(data));
    for (std::size_t k = 0; k < eq.mu.size(); ++k) add("moment map at vertex " + std::to_string(k + 1), eq.mu[k].is_zero());
    for (std::size_t i = 0; i < eq.rel.size(); ++i) add("sl2 relation " + std::to_string(i), eq.rel[i].is_zero());
    return rep;
}

template <class T>
BlockRep<T> maffei_lift(const QuiverRep<T>& x, const TypeAData& data, LiftStats* stats) {
    check_shape(x, data);
    for (const auto& m : moment_map(x))
        if (!m.is_zero()) throw DomainError("PreconditionMomentMap", "moment_map(x) is not zero");
    auto L = make_layout(data);
    auto sl2 = all_triples(data);
    BlockRep<T> xt = empty_rep<T>(data, L);
    set_identities(L, xt);

    struct Unknown {
        BlockRef b;
        std::size_t r, c;
    };
    std::map<long, std::vector<Unknown>> stages;
    for_each_block(L, data.n, [&](const BlockRef& b) {
        auto info = block_info(L, b.is_a, b.i, b.dst, b.src);
        if (info.role == BlockRole::Matched) write_block(L, xt, b, matched_value(L, b, x));
        if (info.role != BlockRole::Free) return;
        for (std::size_t r = 0; r < dst_summand(L, b).dim; ++r)
            for (std::size_t c = 0; c < src_summand(L, b).dim; ++c) stages[info.degree].push_back({b, r, c});
    });

    LiftStats st;
    for (const auto& [m, unknowns] : stages) {
        ++st.stages;
        st.unknowns += unknowns.size();
        auto at = [&](const Unknown& u) -> T& {
            return big(xt, u.b)(dst_summand(L, u.b).offset + u.r, src_summand(L, u.b).offset + u.c);
        };
        std::vector<T> f0;
        degree_components(L, equations(L, xt, sl2), m, f0);
        Matrix<T> lhs(f0.size(), unknowns.size());
        Matrix<T> rhs(f0.size(), 1);
        for (std::size_t e = 0; e < f0.size(); ++e) rhs(e, 0) = -f0[e];
        for (std::size_t k = 0; k < unknowns.size(); ++k) {
            at(unknowns[k]) = T(1);
            std::vector<T> fk;
            degree_components(L, equations(L, xt, sl2), m, fk);
            at(unknowns[k]) = T(0);
            for (std::size_t e = 0; e < f0.size(); ++e) lhs(e, k) = fk[e] - f0[e];
        }
        if (rank(lhs) < unknowns.size()) ++st.underdetermined_stages;
        auto sol = try_solve(lhs, rhs);
        if (!sol) throw DomainError("LiftInconsistent", "stage of degree " + std::to_string(m) + " has no solution");
        for (std::size_t k = 0; k < unknowns.size(); ++k) at(unknowns[k]) = (*sol)(k, 0);
    }
    if (stats) *stats = st;
    auto report = maffei_verify(xt, &x);
    if (!report.pass) throw DomainError("LiftInconsistent", "lift fails " + report.failures().front());
    return xt;
}

BlockRepQ canonical_frame(const TypeAData& data) {
    auto L = make_layout(data);
    auto x = empty_rep<Rational>(data, L);
    set_identities(L, x);
    return x;
}

FlagIso flag_iso_e0(const RepQ& x, const TypeAData& data) {
    if (!data.is_e0()) throw std::invalid_argument("flag_iso_e0: needs d = (N, 0, ..., 0)");
    check_shape(x, data);
    for (const auto& m : moment_map(x))
        if (!m.is_zero()) throw DomainError("PreconditionMomentMap", "moment_map(x) is not zero");
    auto N = static_cast<std::size_t>(data.N);
    FlagIso out;
    out.endomorphism = x.Delta[0] * x.Gamma[0];
    out.flag.emplace_back(N, 0);
    MatQ p = x.Gamma[0];
    long expected = 0;
    for (int i = 1; i < data.n; ++i) {
        if (i > 1) p = x.A[static_cast<std::size_t>(i - 2)] * p;
        expected += data.r[static_cast<std::size_t>(i - 1)];
        MatQ f = kernel_matrix(p);
        if (static_cast<long>(f.cols()) != expected)
            throw DomainError("FlagDimensionMismatch", "dim F_" + std::to_string(i) + " = " +
                                                           std::to_string(f.cols()) + ", expected " +
                                                           std::to_string(expected));
        out.flag.push_back(std::move(f));
    }
    out.flag.push_back(MatQ::identity(N));
    for (std::size_t i = 1; i < out.flag.size(); ++i) {
        const MatQ& lower = out.flag[i - 1];
        MatQ image = out.endomorphism * out.flag[i];
        if (rank(hstack(lower, image)) != lower.cols())
            throw std::logic_error("flag_iso_e0: x F_i is not contained in F_{i-1}");
    }
    return out;
}

PullbackSides pullback_pair(const RepQ& x, const TypeAData& data, const std::vector<Rational>& v1,
                            const std::vector<Rational>& v2) {
    auto l1 = maffei_lift(jet_along(x, v1), data);
    auto l2 = maffei_lift(jet_along(x, v2), data);
    PullbackSides out{Rational(0), Rational(0)};
    for (std::size_t i = 0; i < l1.At.size(); ++i)
        out.expanded += (jet_derivative(l1.Bt[i]) * jet_derivative(l2.At[i])).trace();
    RepQ t1 = RepQ::zero(x.quiver, x.v, x.w);
    RepQ t2 = t1;
    t1.set_coordinates(v1);
    t2.set_coordinates(v2);
    for (std::size_t k = 0; k < t1.A.size(); ++k) out.original += (t1.B[k] * t2.A[k]).trace();
    for (std::size_t i = 0; i < t1.Gamma.size(); ++i) out.original += (t1.Delta[i] * t2.Gamma[i]).trace();
    return out;
}

bool symplectic_pullback_check(const RepQ& x, const TypeAData& data, int trials, std::uint64_t seed) {
    auto basis = moment_kernel_basis(x);
    SeedStream rng(seed);
    auto sample = [&]() {
        std::vector<Rational> t(x.coordinate_count(), Rational(0));
        for (const auto& b : basis) {
            Rational c = rng.small();
            for (std::size_t k = 0; k < t.size(); ++k) t[k] += c * b[k];
        }
        return t;
    };
    for (int k = 0; k < trials; ++k) {
        auto v1 = sample();
        auto v2 = sample();
        auto sides = pullback_pair(x, data, v1, v2);
        if (sides.expanded != sides.original) return false;
    }
    return true;
}

BlockRepQ kazhdan_act(const BlockRepQ& xt, const Rational& t) {
    if (t.is_zero()) throw std::invalid_argument("kazhdan_act: t must be nonzero");
    auto L = make_layout(xt.data);
    BlockRepQ out = xt;
    Rational tinv = Rational(1) / t;
    for_each_block(L, xt.data.n, [&](const BlockRef& b) {
        long m = block_info(L, b.is_a, b.i, b.dst, b.src).degree;
        Rational s(1);
        for (long k = 0; k < (m < 0 ? -m : m); ++k) s *= (m > 0 ? tinv : t);
        write_block(L, out, b, s * read_block(L, xt, b));
    });
    return out;
}

bool kazhdan_action_check(const BlockRepQ& xt, const RepQ& x, const Rational& t) {
    auto moved = kazhdan_act(xt, t);
    RepQ scaled = x;
    Rational tinv = Rational(1) / t;
    std::vector<Rational> c = x.coordinates();
    for (auto& e : c) e *= tinv;
    scaled.set_coordinates(c);
    return maffei_verify(moved, &scaled).pass;
}

Sl2Triple jordan_triple(const std::vector<long>& blocks) {
    std::size_t n = 0;
    for (long b : blocks) n += static_cast<std::size_t>(b);
    Sl2Triple t{MatQ(n, n), MatQ(n, n), MatQ(n, n)};
    std::size_t o = 0;
    for (long s : blocks) {
        for (long h = 1; h <= s; ++h) {
            auto p = o + static_cast<std::size_t>(h - 1);
            t.h(p, p) = Rational(s + 1 - 2 * h);
            if (h > 1) t.e(p - 1, p) = Rational(1);
            if (h < s) t.f(p + 1, p) = Rational(h * (s - h));
        }
        o += static_cast<std::size_t>(s);
    }
    return t;
}

SlodowySlice slodowy_slice(long N, const std::vector<long>& jordan_type) {
    long sum = 0;
    for (long b : jordan_type) {
        if (b <= 0) throw DomainError("InvalidPartition", "parts must be positive");
        sum += b;
    }
    if (N <= 0 || sum != N) throw DomainError("InvalidPartition", "parts must sum to N");
    SlodowySlice sl;
    sl.N = N;
    sl.jordan_type = jordan_type;
    std::sort(sl.jordan_type.rbegin(), sl.jordan_type.rend());
    sl.triple = jordan_triple(sl.jordan_type);
    auto n = static_cast<std::size_t>(N);
    const MatQ& f = sl.triple.f;
    std::map<long, std::vector<std::pair<std::size_t, std::size_t>>> by_weight;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            by_weight[(sl.triple.h(a, a) - sl.triple.h(b, b)).to_long()].push_back({a, b});
    // ad f lowers the ad h weight by 2, so its kernel splits over weight spaces
    for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
        const auto& cells = it->second;
        MatQ op(n * n, cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) {
            MatQ z(n, n);
            z(cells[k].first, cells[k].second) = Rational(1);
            MatQ c = f * z - z * f;
            for (std::size_t e = 0; e < n * n; ++e) op(e, k) = c.entries()[e];
        }
        for (const auto& kv : kernel(op)) {
            MatQ z(n, n);
            for (std::size_t k = 0; k < cells.size(); ++k) z(cells[k].first, cells[k].second) = kv[k];
            sl.slice_basis.push_back(std::move(z));
            sl.kazhdan_degrees.push_back(-it->first + 2);
        }
    }
    return sl;
}

template Matrix<Rational> get_block(const TypeALayout&, const BlockRep<Rational>&, bool, int, std::size_t,
                                    std::size_t);
template Matrix<JetQ> get_block(const TypeALayout&, const BlockRep<JetQ>&, bool, int, std::size_t, std::size_t);
template VerifyReport maffei_verify(const BlockRep<Rational>&, const QuiverRep<Rational>*);
template VerifyReport maffei_verify(const BlockRep<JetQ>&, const QuiverRep<JetQ>*);
template BlockRep<Rational> maffei_lift(const QuiverRep<Rational>&, const TypeAData&, LiftStats*);
template BlockRep<JetQ> maffei_lift(const QuiverRep<JetQ>&, const TypeAData&, LiftStats*);

}  // namespace quivq
