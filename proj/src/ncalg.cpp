#include "quivq/ncalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "quivq/errors.hpp"
#include "quivq/linalg.hpp"

namespace quivq {

// ---------------------------------------------------------------------------
// ParamPoly

namespace {

ParamPoly::Exp trimmed(ParamPoly::Exp e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

}  // namespace

ParamPoly::ParamPoly(const CycScalar& c) {
    if (!c.is_zero()) t_.emplace(Exp{}, c);
}

ParamPoly ParamPoly::var(std::size_t index) {
    ParamPoly p;
    Exp e(index + 1, 0);
    e[index] = 1;
    p.t_.emplace(e, CycScalar(1));
    return p;
}

void ParamPoly::add(const Exp& e, const CycScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

CycScalar ParamPoly::constant_term() const {
    auto it = t_.find(Exp{});
    return it == t_.end() ? CycScalar(0) : it->second;
}

CycScalar ParamPoly::evaluate(const std::vector<CycScalar>& values) const {
    CycScalar s = 0;
    for (const auto& [e, c] : t_) {
        CycScalar m = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const CycScalar x = i < values.size() ? values[i] : CycScalar(0);
            for (int p = 0; p < e[i]; ++p) m *= x;
        }
        s += m;
    }
    return s;
}

ParamPoly ParamPoly::negate_h() const {
    ParamPoly out;
    for (const auto& [e, c] : t_) out.add(e, (!e.empty() && e[0] % 2 == 1) ? -c : c);
    return out;
}

int ParamPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (int x : e) s += 2 * x;
        d = std::max(d, s);
    }
    return d;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        bool unit = c == CycScalar(1) && !e.empty();
        if (!unit) {
            if (e.empty()) os << c;
            else os << "(" << c << ")";
        }
        bool need_star = !unit;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << (i < names.size() ? names[i] : "p" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    ParamPoly out;
    for (const auto& [e1, c1] : t_) {
        for (const auto& [e2, c2] : o.t_) {
            Exp e(std::max(e1.size(), e2.size()), 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            out.add(trimmed(e), c1 * c2);
        }
    }
    return *this = out;
}

// ---------------------------------------------------------------------------
// NCElement

NCElement NCElement::scalar(const ParamPoly& p) { return term(p, {}, 0); }
NCElement NCElement::generator(int index) { return term(ParamPoly(1), {index}, 0); }
NCElement NCElement::group(std::size_t g) { return term(ParamPoly(1), {}, g); }

NCElement NCElement::term(const ParamPoly& coeff, std::vector<int> mono, std::size_t grp) {
    NCElement x;
    x.add(NCKey{std::move(mono), grp}, coeff);
    return x;
}

int NCElement::degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, static_cast<int>(k.mono.size()));
    return d;
}

NCElement NCElement::specialise(const std::vector<CycScalar>& values) const {
    NCElement out;
    for (const auto& [k, c] : t_) out.add(k, ParamPoly(c.evaluate(values)));
    return out;
}

NCElement NCElement::times_group(std::size_t g, const std::vector<std::vector<std::size_t>>& mul) const {
    NCElement out;
    for (const auto& [k, c] : t_) out.add(NCKey{k.mono, mul[k.grp][g]}, c);
    return out;
}

void NCElement::add(const NCKey& k, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NCElement& NCElement::operator+=(const NCElement& o) {
    for (const auto& [k, c] : o.t_) add(k, c);
    return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
    for (const auto& [k, c] : o.t_) add(k, -c);
    return *this;
}

NCElement& NCElement::operator*=(const ParamPoly& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    std::map<NCKey, ParamPoly> out;
    for (auto& [k, c] : t_) {
        ParamPoly p = c * s;
        if (!p.is_zero()) out.emplace(k, std::move(p));
    }
    t_ = std::move(out);
    return *this;
}

// ---------------------------------------------------------------------------
// Contexts

namespace {

MatC darboux_form(int N) {
    const auto d = static_cast<std::size_t>(2 * N);
    MatC w(d, d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(N); ++i) {
        w(i, i + static_cast<std::size_t>(N)) = 1;
        w(i + static_cast<std::size_t>(N), i) = -1;
    }
    return w;
}

std::vector<std::string> darboux_names(int N) {
    std::vector<std::string> names;
    for (int i = 1; i <= N; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= N; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

// wreath coordinate 2j -> x_j, 2j + 1 -> y_j
MatC to_darboux(const MatC& m, int n) {
    auto pos = [n](std::size_t r) { return r % 2 == 0 ? r / 2 : static_cast<std::size_t>(n) + r / 2; };
    MatC out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(pos(r), pos(c)) = m(r, c);
    return out;
}

std::string wreath_key(const WreathElement& e) {
    std::string k;
    for (int p : e.perm) k += std::to_string(p) + ",";
    k += ";";
    for (auto g : e.gammas) k += std::to_string(g) + ",";
    return k;
}

}  // namespace

void AlgebraCtx::rebuild_relations() {
    const auto d = static_cast<std::size_t>(dim);
    rel.assign(d * d, NCElement());
    for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            // v_b v_a - v_a v_b = -[v_a, v_b]
            NCElement r = NCElement::scalar(ParamPoly::var(0) * ParamPoly(-omega(a, b)));
            for (const auto& s : reflections)
                r.add(NCKey{{}, s.element}, ParamPoly::var(s.param) * ParamPoly(-s.omega_s(a, b)));
            rel[b * d + a] = std::move(r);
        }
    }
    certified = false;
    cache = std::make_shared<Cache>();
}

AlgebraCtx make_weyl_ctx(int N) {
    if (N < 0) throw std::invalid_argument("make_weyl_ctx: negative dimension");
    AlgebraCtx ctx;
    ctx.mode = AlgebraCtx::Mode::Weyl;
    ctx.dim = 2 * N;
    ctx.basis_names = darboux_names(N);
    ctx.param_names = {"h"};
    ctx.omega = darboux_form(N);
    ctx.group_matrices = {MatC::identity(static_cast<std::size_t>(2 * N))};
    ctx.group_mul = {{0}};
    ctx.group_inv = {0};
    ctx.rebuild_relations();
    return ctx;
}

AlgebraCtx make_sra_ctx(const WreathGroup& w) {
    AlgebraCtx ctx;
    ctx.mode = AlgebraCtx::Mode::SRA;
    ctx.dim = 2 * w.n;
    ctx.basis_names = darboux_names(w.n);
    ctx.omega = darboux_form(w.n);
    const std::size_t l = w.gamma->classes.size() - 1;
    ctx.param_names = {"h"};
    for (std::size_t i = 1; i <= l; ++i) ctx.param_names.push_back("c" + std::to_string(i));
    if (w.n > 1) ctx.param_names.push_back("k");

    ctx.group_elements = w.enumerate();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ctx.group_elements.size(); ++i) {
        index.emplace(wreath_key(ctx.group_elements[i]), i);
        ctx.group_matrices.push_back(to_darboux(w.matrix(ctx.group_elements[i]), w.n));
    }
    const std::size_t G = ctx.group_elements.size();
    ctx.group_mul.assign(G, std::vector<std::size_t>(G, 0));
    ctx.group_inv.assign(G, 0);
    for (std::size_t a = 0; a < G; ++a) {
        for (std::size_t b = 0; b < G; ++b) {
            std::size_t c = index.at(wreath_key(w.multiply(ctx.group_elements[a], ctx.group_elements[b])));
            ctx.group_mul[a][b] = c;
            if (c == 0) ctx.group_inv[a] = b;
        }
    }
    for (const auto& cls : symplectic_reflections(w)) {
        std::size_t param = cls.kind == ReflectionClassKind::Sym ? l + 1 : cls.label;
        for (const auto& s : cls.members) {
            MatC pi = to_darboux(s.projector, w.n);
            ctx.reflections.push_back({index.at(wreath_key(s.element)), param, pi.transpose() * ctx.omega * pi});
        }
    }
    ctx.rebuild_relations();
    return ctx;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

using WordSum = std::vector<std::pair<CycScalar, std::vector<int>>>;

// g applied to each letter of word, expanded into basis words.
WordSum act_on_word(const AlgebraCtx& ctx, std::size_t g, const std::vector<int>& word) {
    WordSum cur{{CycScalar(1), {}}};
    if (g == 0) {
        cur[0].second = word;
        return cur;
    }
    const MatC& m = ctx.group_matrices[g];
    for (int a : word) {
        WordSum next;
        for (const auto& [c, w] : cur) {
            for (std::size_t b = 0; b < m.rows(); ++b) {
                const CycScalar& e = m(b, static_cast<std::size_t>(a));
                if (e.is_zero()) continue;
                auto w2 = w;
                w2.push_back(static_cast<int>(b));
                next.emplace_back(c * e, std::move(w2));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

NCElement normalize_impl(const AlgebraCtx& ctx, const std::vector<int>& word);

// One rewrite of the descent at position p, followed by full normalisation.
NCElement rewrite_at(const AlgebraCtx& ctx, const std::vector<int>& word, std::size_t p) {
    const auto d = static_cast<std::size_t>(ctx.dim);
    const int b = word[p];
    const int a = word[p + 1];
    if (b <= a) throw std::logic_error("rewrite_at: no descent");
    std::vector<int> swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    NCElement out = normalize_impl(ctx, swapped);
    std::vector<int> prefix(word.begin(), word.begin() + static_cast<long>(p));
    std::vector<int> suffix(word.begin() + static_cast<long>(p) + 2, word.end());
    for (const auto& [key, coeff] : ctx.rel[static_cast<std::size_t>(b) * d + static_cast<std::size_t>(a)].terms()) {
        // prefix * s * suffix = prefix * s(suffix) * s
        for (const auto& [c, w] : act_on_word(ctx, key.grp, suffix)) {
            std::vector<int> full = prefix;
            full.insert(full.end(), w.begin(), w.end());
            out += normalize_impl(ctx, full).times_group(key.grp, ctx.group_mul) * (coeff * ParamPoly(c));
        }
    }
    return out;
}

NCElement normalize_impl(const AlgebraCtx& ctx, const std::vector<int>& word) {
    std::size_t p = 0;
    while (p + 1 < word.size() && word[p] <= word[p + 1]) ++p;
    if (p + 1 >= word.size()) return NCElement::term(ParamPoly(1), word, 0);
    {
        std::lock_guard<std::mutex> lock(ctx.cache->mu);
        auto it = ctx.cache->normal.find(word);
        if (it != ctx.cache->normal.end()) return it->second;
    }
    NCElement out = rewrite_at(ctx, word, p);
    std::lock_guard<std::mutex> lock(ctx.cache->mu);
    ctx.cache->normal.emplace(word, out);
    return out;
}

}  // namespace

NCElement normalize_word(const AlgebraCtx& ctx, const std::vector<int>& word) {
    for (int a : word) {
        if (a < 0 || a >= ctx.dim) throw std::out_of_range("normalize_word: basis index");
    }
    return normalize_impl(ctx, word);
}

NCElement act_on_generator(const AlgebraCtx& ctx, std::size_t g, int a) {
    NCElement out;
    for (const auto& [c, w] : act_on_word(ctx, g, {a})) out.add(NCKey{w, 0}, ParamPoly(c));
    return out;
}

NCElement nc_mul(const AlgebraCtx& ctx, const NCElement& x, const NCElement& y) {
    NCElement out;
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            ParamPoly c = cx * cy;
            const std::size_t g = ctx.group_mul[kx.grp][ky.grp];
            for (const auto& [s, w] : act_on_word(ctx, kx.grp, ky.mono)) {
                std::vector<int> full = kx.mono;
                full.insert(full.end(), w.begin(), w.end());
                out += normalize_impl(ctx, full).times_group(g, ctx.group_mul) * (c * ParamPoly(s));
            }
        }
    }
    return out;
}

NCElement commutator(const AlgebraCtx& ctx, const NCElement& x, const NCElement& y) {
    return nc_mul(ctx, x, y) - nc_mul(ctx, y, x);
}

ConfluenceReport confluence_check(AlgebraCtx& ctx, int degree_cap) {
    ConfluenceReport rep;
    const int d = ctx.dim;
    if (degree_cap >= 3) {
        for (int c = 0; c < d && rep.pass; ++c) {
            for (int b = 0; b < c && rep.pass; ++b) {
                for (int a = 0; a < b && rep.pass; ++a) {
                    std::vector<int> w{c, b, a};
                    ++rep.triples_checked;
                    if (!(rewrite_at(ctx, w, 0) == rewrite_at(ctx, w, 1))) {
                        rep.pass = false;
                        rep.witness_triple = w;
                    }
                }
            }
        }
    }
    // g v_b v_a: push g through first, or rewrite v_b v_a first
    for (std::size_t g = 1; g < ctx.group_order() && rep.pass; ++g) {
        for (int b = 0; b < d && rep.pass; ++b) {
            for (int a = 0; a < b && rep.pass; ++a) {
                ++rep.group_overlaps_checked;
                NCElement lhs = nc_mul(ctx, NCElement::group(g), NCElement::term(1, {b, a}, 0));
                NCElement rhs = nc_mul(ctx, NCElement::group(g), rewrite_at(ctx, {b, a}, 0));
                if (!(lhs == rhs)) {
                    rep.pass = false;
                    rep.witness_group = std::make_pair(g, std::make_pair(b, a));
                }
            }
        }
    }
    // the action must be a homomorphism for the g h v overlaps
    for (std::size_t g = 0; g < ctx.group_order() && rep.pass; ++g)
        for (std::size_t h = 0; h < ctx.group_order() && rep.pass; ++h)
            if (!(ctx.group_matrices[g] * ctx.group_matrices[h] == ctx.group_matrices[ctx.group_mul[g][h]]))
                rep.pass = false;
    ctx.certified = rep.pass;
    return rep;
}

long graded_dimension(const AlgebraCtx& ctx, int d) {
    if (!ctx.certified) throw DomainError("ConfluenceNotCertified", "run confluence_check first");
    if (d < 0) return 0;
    // count nondecreasing words of length d by walking them
    long count = 0;
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    if (ctx.dim == 0) return d == 0 ? static_cast<long>(ctx.group_order()) : 0;
    while (true) {
        ++count;
        int p = d - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == ctx.dim - 1) --p;
        if (p < 0) break;
        int v = w[static_cast<std::size_t>(p)] + 1;
        for (int q = p; q < d; ++q) w[static_cast<std::size_t>(q)] = v;
    }
    return count * static_cast<long>(ctx.group_order());
}

NCElement averaging_idempotent(const AlgebraCtx& ctx) {
    NCElement e;
    const CycScalar inv = CycScalar(Rational(1, static_cast<long>(ctx.group_order())));
    for (std::size_t g = 0; g < ctx.group_order(); ++g) e.add(NCKey{{}, g}, ParamPoly(inv));
    return e;
}

NCElement spherical_product(const AlgebraCtx& ctx, const NCElement& x, const NCElement& y) {
    NCElement e = averaging_idempotent(ctx);
    NCElement r = nc_mul(ctx, e, x);
    r = nc_mul(ctx, r, e);
    r = nc_mul(ctx, r, y);
    return nc_mul(ctx, r, e);
}

long spherical_graded_dimension(const AlgebraCtx& ctx, int d) {
    if (d < 0) return 0;
    NCElement e = averaging_idempotent(ctx);
    std::vector<CycScalar> zeros(ctx.param_count(), CycScalar(0));
    std::vector<NCElement> images;
    std::map<NCKey, std::size_t> column;
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    while (true) {
        NCElement m = NCElement::term(1, w, 0);
        NCElement img = nc_mul(ctx, nc_mul(ctx, e, m), e).specialise(zeros);
        for (const auto& [k, c] : img.terms()) column.emplace(k, column.size());
        images.push_back(std::move(img));
        int p = d - 1;
        while (p >= 0 && w[static_cast<std::size_t>(p)] == ctx.dim - 1) --p;
        if (p < 0 || ctx.dim == 0) break;
        int v = w[static_cast<std::size_t>(p)] + 1;
        for (int q = p; q < d; ++q) w[static_cast<std::size_t>(q)] = v;
    }
    MatC m(images.size(), column.size());
    for (std::size_t r = 0; r < images.size(); ++r)
        for (const auto& [k, c] : images[r].terms()) m(r, column.at(k)) = c.constant_term();
    return static_cast<long>(rank(m));
}

NCElement parity_antiauto(const AlgebraCtx& ctx, const NCElement& x) {
    if (ctx.mode != AlgebraCtx::Mode::Weyl) throw DomainError("Unsupported", "parity_antiauto needs Weyl mode");
    NCElement out;
    for (const auto& [k, c] : x.terms()) {
        std::vector<int> rev(k.mono.rbegin(), k.mono.rend());
        out += normalize_impl(ctx, rev) * c.negate_h();
    }
    return out;
}

long molien_dim(const std::vector<MatC>& elements, int d) {
    if (elements.empty()) throw std::invalid_argument("molien_dim: empty group");
    if (d < 0) return 0;
    CycScalar total = 0;
    for (const auto& g : elements) {
        // Newton: k h_k = sum_{i=1}^k p_i h_{k-i}
        std::vector<CycScalar> p(static_cast<std::size_t>(d) + 1), h(static_cast<std::size_t>(d) + 1);
        MatC power = MatC::identity(g.rows());
        for (int k = 1; k <= d; ++k) {
            power = power * g;
            p[static_cast<std::size_t>(k)] = power.trace();
        }
        h[0] = 1;
        for (int k = 1; k <= d; ++k) {
            CycScalar s = 0;
            for (int i = 1; i <= k; ++i) s += p[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(k - i)];
            h[static_cast<std::size_t>(k)] = s * CycScalar(Rational(1, k));
        }
        total += h[static_cast<std::size_t>(d)];
    }
    total /= CycScalar(static_cast<long>(elements.size()));
    Rational r = total.to_rational();
    return r.to_long();
}

// ---------------------------------------------------------------------------
// Quiver Weyl algebras

QuiverWeyl make_quiver_weyl(const FramedQuiver& fq, const DimVec& v) {
    QuiverWeyl qw;
    qw.fq = fq;
    qw.v = v;
    const Quiver& q = fq.base;
    RepQ shape = RepQ::zero(q, v, fq.framing);
    std::size_t nB = 0;
    for (const auto& m : shape.A) nB += m.rows() * m.cols();
    std::size_t nGamma = 0;
    for (const auto& m : shape.Gamma) nGamma += m.rows() * m.cols();
    const std::size_t N = nB + nGamma;
    qw.ctx = make_weyl_ctx(static_cast<int>(N));
    qw.rep_coordinate.assign(2 * N, 0);
    std::vector<std::string> names(2 * N);
    // A_a(p, q) is paired with B_a(q, p); Gamma_i(p, q) with Delta_i(q, p)
    std::size_t x = 0, offA = 0, offB = nB, offG = 2 * nB, offD = 2 * nB + nGamma;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto r = shape.A[k].rows(), c = shape.A[k].cols();
        for (std::size_t p = 0; p < r; ++p) {
            for (std::size_t s = 0; s < c; ++s) {
                qw.rep_coordinate[x] = offA + p * c + s;
                qw.rep_coordinate[N + x] = offB + s * r + p;
                names[x] = "a" + std::to_string(k) + "_" + std::to_string(p) + std::to_string(s);
                names[N + x] = "b" + std::to_string(k) + "_" + std::to_string(s) + std::to_string(p);
                ++x;
            }
        }
        offA += r * c;
        offB += r * c;
    }
    for (std::size_t i = 0; i < shape.Gamma.size(); ++i) {
        const auto r = shape.Gamma[i].rows(), c = shape.Gamma[i].cols();
        for (std::size_t p = 0; p < r; ++p) {
            for (std::size_t s = 0; s < c; ++s) {
                qw.rep_coordinate[x] = offG + p * c + s;
                qw.rep_coordinate[N + x] = offD + s * r + p;
                names[x] = "g" + std::to_string(i) + "_" + std::to_string(p) + std::to_string(s);
                names[N + x] = "d" + std::to_string(i) + "_" + std::to_string(s) + std::to_string(p);
                ++x;
            }
        }
        offG += r * c;
        offD += r * c;
    }
    qw.ctx.basis_names = names;
    return qw;
}

NCElement quantum_comoment(const QuiverWeyl& qw, const std::vector<MatQ>& xi) {
    const Quiver& q = qw.fq.base;
    const std::size_t n = qw.v.size();
    if (xi.size() != n) throw std::invalid_argument("quantum_comoment: one block per vertex");
    for (std::size_t i = 0; i < n; ++i) {
        auto d = static_cast<std::size_t>(qw.v[i]);
        if (xi[i].rows() != d || xi[i].cols() != d) throw std::invalid_argument("quantum_comoment: block shape");
    }
    const auto N = static_cast<std::size_t>(qw.ctx.dim / 2);
    // x-index of A_a(p, s) and Gamma_i(p, s) in the order used by make_quiver_weyl
    std::vector<std::size_t> startA, startG;
    std::size_t x = 0;
    for (const auto& a : q.arrows) {
        startA.push_back(x);
        x += static_cast<std::size_t>(qw.v[static_cast<std::size_t>(a.head)] * qw.v[static_cast<std::size_t>(a.tail)]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        startG.push_back(x);
        x += static_cast<std::size_t>(qw.v[i] * qw.fq.framing[i]);
    }
    std::map<std::pair<int, int>, Rational> quad;  // (x-index, y-index) -> coefficient of x*y
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto h = static_cast<std::size_t>(q.arrows[k].head);
        const auto t = static_cast<std::size_t>(q.arrows[k].tail);
        const auto vh = static_cast<std::size_t>(qw.v[h]), vt = static_cast<std::size_t>(qw.v[t]);
        auto A = [&](std::size_t p, std::size_t s) { return static_cast<int>(startA[k] + p * vt + s); };
        auto B = [&](std::size_t s, std::size_t p) { return static_cast<int>(N + startA[k] + p * vt + s); };
        // tr(A B xi_h) = sum A(p,s) B(s,r) xi_h(r,p)
        for (std::size_t p = 0; p < vh; ++p)
            for (std::size_t s = 0; s < vt; ++s)
                for (std::size_t r = 0; r < vh; ++r)
                    if (!xi[h](r, p).is_zero()) quad[{A(p, s), B(s, r)}] += xi[h](r, p);
        // -tr(B A xi_t) = -sum B(s,p) A(p,r) xi_t(r,s)
        for (std::size_t s = 0; s < vt; ++s)
            for (std::size_t p = 0; p < vh; ++p)
                for (std::size_t r = 0; r < vt; ++r)
                    if (!xi[t](r, s).is_zero()) quad[{A(p, r), B(s, p)}] -= xi[t](r, s);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto vi = static_cast<std::size_t>(qw.v[i]), wi = static_cast<std::size_t>(qw.fq.framing[i]);
        auto G = [&](std::size_t p, std::size_t s) { return static_cast<int>(startG[i] + p * wi + s); };
        auto D = [&](std::size_t s, std::size_t p) { return static_cast<int>(N + startG[i] + p * wi + s); };
        // tr(Gamma Delta xi_i) = sum Gamma(p,s) Delta(s,r) xi_i(r,p)
        for (std::size_t p = 0; p < vi; ++p)
            for (std::size_t s = 0; s < wi; ++s)
                for (std::size_t r = 0; r < vi; ++r)
                    if (!xi[i](r, p).is_zero()) quad[{G(p, s), D(s, r)}] += xi[i](r, p);
    }
    NCElement out;
    const ParamPoly half(CycScalar(Rational(1, 2)));
    for (const auto& [uv, c] : quad) {
        if (c.is_zero()) continue;
        NCElement sym = normalize_impl(qw.ctx, {uv.first, uv.second}) + normalize_impl(qw.ctx, {uv.second, uv.first});
        out += sym * (half * ParamPoly(CycScalar(c)));
    }
    return out;
}

std::string to_string(const AlgebraCtx& ctx, const NCElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(ctx.param_names) << ")";
        for (int a : k.mono) os << "*" << ctx.basis_names[static_cast<std::size_t>(a)];
        if (k.grp != 0) os << "*g" << k.grp;
    }
    return os.str();
}

}  // namespace quivq
