#include "quivq/mckay.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quivq/errors.hpp"
#include "quivq/linalg.hpp"

namespace quivq {

namespace {

constexpr std::size_t kClosureCap = 1000;

using Mat2 = MatC;

Mat2 mat2(CycScalar a, CycScalar b, CycScalar c, CycScalar d) { return Mat2(2, 2, {a, b, c, d}); }

Mat2 inverse2(const Mat2& g) { return mat2(g(1, 1), -g(0, 1), -g(1, 0), g(0, 0)); }

CycScalar i4() { return CycScalar::zeta(4); }

// a + bi + cj + dk  ->  [[a + bi, c + di], [-c + di, a - bi]]
Mat2 quaternion(const CycScalar& a, const CycScalar& b, const CycScalar& c, const CycScalar& d) {
    CycScalar i = i4();
    return mat2(a + b * i, c + d * i, -c + d * i, a - b * i);
}

CycScalar sqrt5() { return CycScalar(1) + CycScalar(2) * (CycScalar::zeta(5, 1) + CycScalar::zeta(5, 4)); }

std::vector<Mat2> closure(const std::vector<Mat2>& gens, const std::function<std::string(const Mat2&)>& key) {
    std::vector<Mat2> out{Mat2::identity(2)};
    std::set<std::string> seen{key(out[0])};
    for (std::size_t q = 0; q < out.size(); ++q) {
        for (const auto& g : gens) {
            Mat2 y = out[q] * g;
            if (seen.insert(key(y)).second) {
                out.push_back(y);
                if (out.size() > kClosureCap) throw std::logic_error("closure: group too large");
            }
        }
    }
    return out;
}

std::vector<Mat2> generators(const GroupSpec& s) {
    CycScalar h = Rational(1, 2);
    Mat2 qi = quaternion(0, 1, 0, 0);
    Mat2 qj = quaternion(0, 0, 1, 0);
    Mat2 qw = quaternion(-h, h, h, h);
    switch (s.family) {
        case Family::Cyclic:
            return {mat2(CycScalar::zeta(s.m, 1), 0, 0, CycScalar::zeta(s.m, -1))};
        case Family::BinaryDihedral:
            return {mat2(CycScalar::zeta(2 * s.m, 1), 0, 0, CycScalar::zeta(2 * s.m, -1)), mat2(0, 1, -1, 0)};
        case Family::BinaryTetrahedral:
            return {qi, qj, qw};
        case Family::BinaryOctahedral:
            return {qi, qj, qw, mat2(CycScalar::zeta(8, 1), 0, 0, CycScalar::zeta(8, 7))};
        case Family::BinaryIcosahedral: {
            CycScalar phi = (CycScalar(1) + sqrt5()) * h;
            return {qi, qj, qw, quaternion(phi * h, (phi - CycScalar(1)) * h, h, 0)};
        }
    }
    return {};
}

int group_conductor(const GroupSpec& s) {
    switch (s.family) {
        case Family::Cyclic: return s.m;
        case Family::BinaryDihedral: return std::lcm(2 * s.m, 4);
        case Family::BinaryTetrahedral: return 4;
        case Family::BinaryOctahedral: return 8;
        case Family::BinaryIcosahedral: return 20;
    }
    return 1;
}

// Chebyshev recursion: trace of Sym^k of an SL_2 element with trace t.
CycScalar sym_trace(const CycScalar& t, int k) {
    CycScalar prev = 1, cur = t;
    if (k == 0) return prev;
    for (int j = 1; j < k; ++j) {
        CycScalar next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Exponent j with z = zeta_L^j.
long discrete_log(const CycScalar& z, int L) {
    for (long j = 0; j < L; ++j) {
        if (CycScalar::zeta(L, j) == z) return j;
    }
    throw std::logic_error("discrete_log: not a root of unity of the expected order");
}

struct Irrep {
    std::string label;
    long dim;
    std::function<CycScalar(const Mat2&)> chi;
};

std::vector<Irrep> irreps_for(const KleinianGroup& g) {
    const GroupSpec& s = g.spec;
    auto tr = [](const Mat2& x) { return x.trace(); };
    auto sym = [tr](int k) { return [tr, k](const Mat2& x) { return sym_trace(tr(x), k); }; };
    std::vector<Irrep> out;
    switch (s.family) {
        case Family::Cyclic:
            for (int k = 0; k < s.m; ++k) {
                out.push_back({"chi" + std::to_string(k), 1, [k](const Mat2& x) {
                                   CycScalar p = 1;
                                   for (int t = 0; t < k; ++t) p *= x(0, 0);
                                   return p;
                               }});
            }
            break;
        case Family::BinaryDihedral: {
            const int m = s.m;
            const int L = 2 * m;
            // x = a^j (diagonal) or a^j b (antidiagonal, x(0,1) = zeta^j)
            auto decode = [L](const Mat2& x) -> std::pair<long, int> {
                if (x(0, 1).is_zero()) return {discrete_log(x(0, 0), L), 0};
                return {discrete_log(x(0, 1), L), 1};
            };
            std::vector<std::pair<CycScalar, CycScalar>> lin;  // images of a and b
            lin.push_back({1, 1});
            if (m % 2 == 0) {
                lin.push_back({1, -1});
                lin.push_back({-1, 1});
                lin.push_back({-1, -1});
            } else {
                lin.push_back({1, -1});
                lin.push_back({-1, i4()});
                lin.push_back({-1, -i4()});
            }
            for (std::size_t t = 0; t < lin.size(); ++t) {
                auto [alpha, beta] = lin[t];
                out.push_back({"lin" + std::to_string(t), 1, [=](const Mat2& x) {
                                   auto [j, e] = decode(x);
                                   CycScalar v = (j % 2 == 0) ? CycScalar(1) : alpha;
                                   return e ? v * beta : v;
                               }});
            }
            for (int k = 1; k < m; ++k) {
                out.push_back({"ind" + std::to_string(k), 2, [=](const Mat2& x) {
                                   auto [j, e] = decode(x);
                                   if (e) return CycScalar(0);
                                   return CycScalar::zeta(L, k * j) + CycScalar::zeta(L, -k * j);
                               }});
            }
            break;
        }
        case Family::BinaryTetrahedral: {
            // 2T / Q8 = Z/3, generated by the coset of w = (-1 + i + j + k)/2
            CycScalar h = Rational(1, 2);
            Mat2 winv = inverse2(quaternion(-h, h, h, h));
            auto gk = [&g](const Mat2& x) { return g.key(x); };
            auto q8v = closure({quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0)}, gk);
            std::set<std::string> q8;
            for (const auto& x : q8v) q8.insert(g.key(x));
            auto coset = [=, &g](const Mat2& x) -> int {
                if (q8.count(g.key(x))) return 0;
                if (q8.count(g.key(winv * x))) return 1;
                return 2;
            };
            auto omega = [=](int p) {
                return [=](const Mat2& x) { return CycScalar::zeta(3, p * coset(x)); };
            };
            out.push_back({"triv", 1, sym(0)});
            out.push_back({"omega", 1, omega(1)});
            out.push_back({"omega2", 1, omega(2)});
            out.push_back({"rho", 2, sym(1)});
            out.push_back({"rho.omega", 2, [=](const Mat2& x) { return tr(x) * omega(1)(x); }});
            out.push_back({"rho.omega2", 2, [=](const Mat2& x) { return tr(x) * omega(2)(x); }});
            out.push_back({"sym2", 3, sym(2)});
            break;
        }
        case Family::BinaryOctahedral: {
            CycScalar h = Rational(1, 2);
            auto gk = [&g](const Mat2& x) { return g.key(x); };
            auto q8v = closure({quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0)}, gk);
            auto tv = closure({quaternion(0, 1, 0, 0), quaternion(0, 0, 1, 0), quaternion(-h, h, h, h)}, gk);
            std::set<std::string> q8, t2;
            for (const auto& x : q8v) q8.insert(g.key(x));
            for (const auto& x : tv) t2.insert(g.key(x));
            auto sign = [=, &g](const Mat2& x) { return t2.count(g.key(x)) ? CycScalar(1) : CycScalar(-1); };
            // pulled back from S_3 = 2O / Q8
            auto s3 = [=, &g](const Mat2& x) {
                if (q8.count(g.key(x))) return CycScalar(2);
                if (t2.count(g.key(x))) return CycScalar(-1);
                return CycScalar(0);
            };
            out.push_back({"triv", 1, sym(0)});
            out.push_back({"sign", 1, sign});
            out.push_back({"rho", 2, sym(1)});
            out.push_back({"rho.sign", 2, [=](const Mat2& x) { return tr(x) * sign(x); }});
            out.push_back({"s3", 2, s3});
            out.push_back({"sym2", 3, sym(2)});
            out.push_back({"sym2.sign", 3, [=](const Mat2& x) { return sym_trace(tr(x), 2) * sign(x); }});
            out.push_back({"sym3", 4, sym(3)});
            break;
        }
        case Family::BinaryIcosahedral: {
            // zeta_20 -> zeta_20^17 fixes i and sends sqrt 5 to -sqrt 5
            auto gal = [](const CycScalar& z) { return z.galois(17); };
            auto conj_sym = [=](int k) { return [=](const Mat2& x) { return gal(sym_trace(tr(x), k)); }; };
            for (int k = 0; k <= 5; ++k) out.push_back({"sym" + std::to_string(k), k + 1, sym(k)});
            out.push_back({"rho'", 2, conj_sym(1)});
            out.push_back({"sym2'", 3, conj_sym(2)});
            out.push_back({"rho.rho'", 4, [=](const Mat2& x) { return tr(x) * gal(tr(x)); }});
            break;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Irrep& a, const Irrep& b) { return a.dim < b.dim; });
    return out;
}

void fail(const std::string& what) { throw DomainError("TableValidationFailed", what); }

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Cyclic: return "cyclic";
        case Family::BinaryDihedral: return "binary-dihedral";
        case Family::BinaryTetrahedral: return "binary-tetrahedral";
        case Family::BinaryOctahedral: return "binary-octahedral";
        case Family::BinaryIcosahedral: return "binary-icosahedral";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : {Family::Cyclic, Family::BinaryDihedral, Family::BinaryTetrahedral, Family::BinaryOctahedral,
                     Family::BinaryIcosahedral}) {
        if (family_name(f) == s) return f;
    }
    throw std::invalid_argument("unknown group family: " + s);
}

std::string KleinianGroup::name() const {
    switch (spec.family) {
        case Family::Cyclic: return "Cyclic(" + std::to_string(spec.m) + ")";
        case Family::BinaryDihedral: return "BinaryDihedral(" + std::to_string(spec.m) + ")";
        case Family::BinaryTetrahedral: return "BinaryTetrahedral";
        case Family::BinaryOctahedral: return "BinaryOctahedral";
        case Family::BinaryIcosahedral: return "BinaryIcosahedral";
    }
    return "?";
}

std::string KleinianGroup::key(const MatC& g) const {
    std::string k;
    for (const auto& e : g.entries()) {
        k += (e.is_rational() ? e : e.lift(conductor)).key();
        k += '|';
    }
    return k;
}

std::size_t KleinianGroup::index_of(const MatC& g) const { return index.at(key(g)); }

std::size_t KleinianGroup::multiply(std::size_t a, std::size_t b) const { return index_of(elements[a] * elements[b]); }

std::size_t KleinianGroup::inverse_of(std::size_t a) const { return index_of(inverse2(elements[a])); }

std::vector<CycScalar> KleinianGroup::natural_character() const {
    std::vector<CycScalar> out;
    for (const auto& c : classes) out.push_back(elements[c.front()].trace());
    return out;
}

KleinianGroup build_group(const GroupSpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("build_group: m must be >= 1");
    KleinianGroup g;
    g.spec = spec;
    g.conductor = group_conductor(spec);
    auto gens = generators(spec);
    g.elements = closure(gens, [&g](const Mat2& x) { return g.key(x); });
    for (std::size_t i = 0; i < g.elements.size(); ++i) g.index.emplace(g.key(g.elements[i]), i);

    std::vector<std::size_t> gen_idx, gen_inv;
    for (const auto& x : gens) {
        gen_idx.push_back(g.index_of(x));
        gen_inv.push_back(g.index_of(inverse2(x)));
    }
    const std::size_t none = static_cast<std::size_t>(-1);
    g.class_of.assign(g.order(), none);
    for (std::size_t start = 0; start < g.order(); ++start) {
        if (g.class_of[start] != none) continue;
        std::size_t c = g.classes.size();
        g.classes.push_back({start});
        g.class_of[start] = c;
        for (std::size_t q = 0; q < g.classes[c].size(); ++q) {
            std::size_t x = g.classes[c][q];
            for (std::size_t t = 0; t < gens.size(); ++t) {
                std::size_t y = g.multiply(g.multiply(gen_idx[t], x), gen_inv[t]);
                if (g.class_of[y] == none) {
                    g.class_of[y] = c;
                    g.classes[c].push_back(y);
                }
            }
        }
        std::sort(g.classes[c].begin(), g.classes[c].end());
    }

    for (const auto& irr : irreps_for(g)) {
        std::vector<CycScalar> row;
        for (const auto& c : g.classes) row.push_back(irr.chi(g.elements[c.front()]));
        g.char_table.push_back(std::move(row));
        g.dims.push_back(irr.dim);
        g.irrep_labels.push_back(irr.label);
    }
    validate_table(g);
    return g;
}

void validate_table(const KleinianGroup& g) {
    const std::size_t r = g.char_table.size();
    const std::size_t k = g.classes.size();
    const CycScalar order(static_cast<long>(g.order()));
    if (r != k) fail("class count " + std::to_string(k) + " != irreducible count " + std::to_string(r));
    std::size_t covered = 0;
    for (std::size_t c = 0; c < k; ++c) {
        covered += g.classes[c].size();
        if (g.order() % g.classes[c].size() != 0) fail("class size does not divide the order");
    }
    if (covered != g.order()) fail("classes do not partition the group");
    if (g.class_of[0] != 0 || g.classes[0].size() != 1) fail("identity class is not first");
    long sq = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (g.char_table[i].size() != k) fail("row length");
        if (!(g.char_table[i][0] == CycScalar(g.dims[i]))) fail("chi(1) differs from the dimension");
        sq += g.dims[i] * g.dims[i];
    }
    if (sq != static_cast<long>(g.order())) fail("sum of squared dimensions");
    for (std::size_t c = 0; c < k; ++c) {
        if (!(g.char_table[0][c] == CycScalar(1))) fail("N_0 is not trivial");
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i; j < r; ++j) {
            CycScalar s = 0;
            for (std::size_t c = 0; c < k; ++c)
                s += CycScalar(static_cast<long>(g.classes[c].size())) * g.char_table[i][c] * conj(g.char_table[j][c]);
            if (!(s == (i == j ? order : CycScalar(0))))
                fail("row orthogonality at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            CycScalar s = 0;
            for (std::size_t i = 0; i < r; ++i) s += g.char_table[i][a] * conj(g.char_table[i][b]);
            CycScalar expect = a == b ? CycScalar(Rational(static_cast<long>(g.order()),
                                                           static_cast<long>(g.classes[a].size())))
                                      : CycScalar(0);
            if (!(s == expect)) fail("column orthogonality at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
}

std::vector<std::vector<long>> mckay_matrix(const KleinianGroup& g) {
    const std::size_t r = g.char_table.size();
    auto chi2 = g.natural_character();
    std::vector<std::vector<long>> a(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            CycScalar s = 0;
            for (std::size_t c = 0; c < g.classes.size(); ++c)
                s += CycScalar(static_cast<long>(g.classes[c].size())) * chi2[c] * g.char_table[i][c] *
                     conj(g.char_table[j][c]);
            s /= CycScalar(static_cast<long>(g.order()));
            if (!s.is_rational()) throw DomainError("NonIntegralMultiplicity", "irrational inner product");
            Rational q = s.to_rational();
            if (q.sign() < 0 || !(q == Rational(q.to_long())))
                throw DomainError("NonIntegralMultiplicity", "inner product " + q.str());
            a[i][j] = q.to_long();
        }
    }
    return a;
}

McKayQuiver mckay_quiver(const KleinianGroup& g) {
    McKayQuiver out;
    out.multiplicities = mckay_matrix(g);
    out.delta = g.dims;
    const auto n = out.multiplicities.size();
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < n; ++i) {
        for (long t = 0; t < out.multiplicities[i][i] / 2; ++t)
            arrows.push_back({static_cast<int>(i), static_cast<int>(i)});
        for (std::size_t j = i + 1; j < n; ++j)
            for (long t = 0; t < out.multiplicities[i][j]; ++t)
                arrows.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    out.quiver = Quiver(static_cast<int>(n), std::move(arrows));
    return out;
}

// ---------------------------------------------------------------------------
// Wreath products

std::size_t WreathGroup::order() const {
    std::size_t o = 1;
    for (int k = 2; k <= n; ++k) o *= static_cast<std::size_t>(k);
    for (int k = 0; k < n; ++k) o *= gamma->order();
    return o;
}

WreathElement WreathGroup::identity() const {
    WreathElement e;
    e.perm.resize(static_cast<std::size_t>(n));
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.gammas.assign(static_cast<std::size_t>(n), 0);
    return e;
}

// (a b) v: b sends v_j to slot pb(j) with gamma b_j, then a sends slot pb(j) to pa(pb(j)).
WreathElement WreathGroup::multiply(const WreathElement& a, const WreathElement& b) const {
    WreathElement c;
    c.perm.resize(static_cast<std::size_t>(n));
    c.gammas.resize(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        auto mid = static_cast<std::size_t>(b.perm[j]);
        c.perm[j] = a.perm[mid];
        c.gammas[j] = gamma->multiply(a.gammas[mid], b.gammas[j]);
    }
    return c;
}

MatC WreathGroup::matrix(const WreathElement& g) const {
    const auto N = static_cast<std::size_t>(2 * n);
    MatC m(N, N);
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
        m.set_block(2 * static_cast<std::size_t>(g.perm[j]), 2 * j, gamma->elements[g.gammas[j]]);
    return m;
}

std::vector<WreathElement> WreathGroup::enumerate(std::size_t cap) const {
    if (order() > cap) throw std::length_error("WreathGroup::enumerate: order exceeds cap");
    std::vector<WreathElement> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const std::size_t G = gamma->order();
    do {
        std::vector<std::size_t> gs(static_cast<std::size_t>(n), 0);
        while (true) {
            out.push_back({perm, gs});
            std::size_t t = 0;
            while (t < gs.size() && ++gs[t] == G) gs[t++] = 0;
            if (t == gs.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MatC symplectic_form(int n) {
    const auto N = static_cast<std::size_t>(2 * n);
    MatC w(N, N);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        w(2 * i, 2 * i + 1) = 1;
        w(2 * i + 1, 2 * i) = -1;
    }
    return w;
}

MatC reflection_projector(const MatC& s) {
    const std::size_t N = s.rows();
    MatC d = s - MatC::identity(N);
    MatC im = column_space(d);
    MatC ker = kernel_matrix(d);
    if (im.cols() + ker.cols() != N) throw DomainError("NotComplementary", "im and ker of s - id");
    MatC basis = hstack(im, ker);
    MatC keep(N, N);
    for (std::size_t t = 0; t < im.cols(); ++t) keep(t, t) = 1;
    return basis * keep * inverse(basis);
}

CycScalar omega_s(const SymplecticReflection& s, const std::vector<CycScalar>& x, const std::vector<CycScalar>& y) {
    const std::size_t N = s.projector.rows();
    MatC px = s.projector * MatC::column(x);
    MatC py = s.projector * MatC::column(y);
    MatC w = symplectic_form(static_cast<int>(N / 2));
    return (px.transpose() * w * py)(0, 0);
}

std::vector<ReflectionClass> symplectic_reflections(const WreathGroup& w) {
    const KleinianGroup& G = *w.gamma;
    std::vector<ReflectionClass> out;
    auto make = [&](const WreathElement& e, ReflectionClassKind kind, std::size_t label) {
        SymplecticReflection s;
        s.element = e;
        s.kind = kind;
        s.class_label = label;
        s.matrix = w.matrix(e);
        if (rank(s.matrix - MatC::identity(s.matrix.rows())) != 2)
            throw std::logic_error("symplectic_reflections: rank(s - id) != 2");
        s.projector = reflection_projector(s.matrix);
        return s;
    };
    if (w.n > 1) {
        ReflectionClass sym{ReflectionClassKind::Sym, 0, {}};
        for (int i = 0; i < w.n; ++i) {
            for (int j = i + 1; j < w.n; ++j) {
                for (std::size_t gi = 0; gi < G.order(); ++gi) {
                    WreathElement e = w.identity();
                    std::swap(e.perm[static_cast<std::size_t>(i)], e.perm[static_cast<std::size_t>(j)]);
                    // s_ij gamma_(i) gamma_(j)^{-1}
                    e.gammas[static_cast<std::size_t>(i)] = gi;
                    e.gammas[static_cast<std::size_t>(j)] = G.inverse_of(gi);
                    sym.members.push_back(make(e, ReflectionClassKind::Sym, 0));
                }
            }
        }
        out.push_back(std::move(sym));
    }
    for (std::size_t c = 1; c < G.classes.size(); ++c) {
        ReflectionClass cls{ReflectionClassKind::Gamma, c, {}};
        for (int j = 0; j < w.n; ++j) {
            for (std::size_t gi : G.classes[c]) {
                WreathElement e = w.identity();
                e.gammas[static_cast<std::size_t>(j)] = gi;
                cls.members.push_back(make(e, ReflectionClassKind::Gamma, c));
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace quivq
