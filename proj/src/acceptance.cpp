#include "quivq/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "quivq/errors.hpp"
#include "quivq/fixtures.hpp"
#include "quivq/linalg.hpp"
#include "quivq/mckay.hpp"
#include "quivq/ncalg.hpp"
#include "quivq/params.hpp"
#include "quivq/random.hpp"
#include "quivq/roots.hpp"
#include "quivq/typea.hpp"

namespace quivq {

bool CriterionResult::pass() const {
    if (items.empty() || seconds >= budget) return false;
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

namespace {

class Recorder {
public:
    Recorder(CriterionResult& out, std::string tag) : out_(out), tag_(std::move(tag)) {}

    void check(const std::string& name, bool pass, std::string detail = {}) {
        out_.items.push_back({out_.criterion, tag_, name, pass, std::move(detail)});
    }
    /// Runs f; a thrown exception fails the item with its message.
    void check(const std::string& name, const std::function<bool(std::string&)>& f) {
        std::string detail;
        bool pass = false;
        try {
            pass = f(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        check(name, pass, detail);
    }

private:
    CriterionResult& out_;
    std::string tag_;
};

std::string str(const DimVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---------------------------------------------------------------- 1: McKay

bool cartan_kills(const McKayQuiver& mq) {
    auto c = cartan_from_quiver(mq.quiver);
    for (const auto& row : c.matrix) {
        long s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * mq.delta[j];
        if (s != 0) return false;
    }
    return true;
}

std::vector<long> valences(const Quiver& q) {
    std::vector<long> d(static_cast<std::size_t>(q.vertices), 0);
    for (const auto& a : q.arrows) {
        ++d[static_cast<std::size_t>(a.tail)];
        ++d[static_cast<std::size_t>(a.head)];
    }
    return d;
}

KleinianGroup group_for(const GroupSpec& spec, bool corrupt) {
    auto g = build_group(spec);
    if (corrupt) {
        auto& row = g.char_table.back();
        row[1] = -row[1];
        validate_table(g);
    }
    return g;
}

void criterion_mckay(Recorder& rec, const AcceptanceOptions& opts) {
    for (int m = 2; m <= 6; ++m) {
        rec.check("Cyclic(" + std::to_string(m) + ") is affine A" + std::to_string(m - 1), [&](std::string& d) {
            auto mq = mckay_quiver(group_for({Family::Cyclic, m}, opts.corrupt_table));
            auto c = cartan_from_quiver(mq.quiver);
            bool shape = mq.quiver.vertices == m && mq.quiver.arrows.size() == static_cast<std::size_t>(m);
            for (long v : valences(mq.quiver)) shape = shape && v == 2;
            d = "delta=" + str(mq.delta);
            return shape && c.type == CartanType::Affine && mq.delta == DimVec(static_cast<std::size_t>(m), 1) &&
                   cartan_kills(mq);
        });
    }
    rec.check("BinaryDihedral(2) is affine D4 with delta (1,1,1,1,2)", [&](std::string& d) {
        auto mq = mckay_quiver(group_for({Family::BinaryDihedral, 2}, opts.corrupt_table));
        d = "delta=" + str(mq.delta);
        return mq.delta == DimVec{1, 1, 1, 1, 2} && valences(mq.quiver) == std::vector<long>{1, 1, 1, 1, 4} &&
               cartan_from_quiver(mq.quiver).type == CartanType::Affine && cartan_kills(mq);
    });
    rec.check("BinaryTetrahedral is affine E6", [&](std::string& d) {
        auto mq = mckay_quiver(group_for({Family::BinaryTetrahedral, 1}, opts.corrupt_table));
        d = "delta=" + str(mq.delta);
        return mq.delta == DimVec{1, 1, 1, 2, 2, 2, 3} &&
               valences(mq.quiver) == std::vector<long>{1, 1, 1, 2, 2, 2, 3} &&
               cartan_from_quiver(mq.quiver).type == CartanType::Affine && cartan_kills(mq);
    });
}

// ---------------------------------------------------------------- 2: Crawley-Boevey

void criterion_cb(Recorder& rec, const AcceptanceOptions&) {
    FramedQuiver fq(fixtures::affine_a1(), {1, 0});
    for (long n : {1L, 2L}) {
        DimVec v{n, n};
        std::string sfx = ", affine A1, v=" + std::to_string(n) + "delta, w=eps0";
        rec.check("weak inequality" + sfx, [&](std::string& d) {
            auto r = cb_flatness_check(fq, v, false);
            d = "p(v^w)=" + r.p_total.str() + ", decompositions=" + std::to_string(r.decompositions);
            // n = 1: e0+e1+es, (1,1,0)+es, (1,0,1)+e1
            bool count_ok = n != 1 || r.decompositions == 3;
            return r.holds && count_ok;
        });
        rec.check("strict inequality" + sfx, [&](std::string& d) {
            auto r = cb_flatness_check(fq, v, true);
            if (!r.holds && !r.violations.empty()) {
                d = "equality at";
                for (const auto& part : r.violations.front()) d += " " + str(part);
                d += " (see decisions ledger)";
            }
            return r.holds;
        });
    }
    struct Fixture {
        DimVec d, v;
    };
    for (const auto& f : {Fixture{{4, 0}, {2, 1}}, Fixture{{2, 1}, {1, 1}}, Fixture{{1, 1, 1}, {1, 1, 1}}}) {
        rec.check("dominance inequality holds, d=" + str(f.d) + " v=" + str(f.v), [&](std::string& d) {
            std::size_t scanned = 0;
            auto viol = typea_dominance_scan(f.d, f.v, &scanned);
            std::size_t expected = 1;
            for (long x : f.v) expected *= static_cast<std::size_t>(x + 1);
            d = std::to_string(scanned) + " v' scanned";
            return dominance_check(f.d, f.v) && viol.empty() && scanned == expected;
        });
    }
    rec.check("non-dominant fixture d=(1,0) v=(1,1) is violated", [&](std::string& d) {
        auto viol = typea_dominance_scan({1, 0}, {1, 1});
        if (!viol.empty()) d = "v'=" + str(viol.front().v_prime) + ": " + viol.front().lhs.str() + " < " + viol.front().rhs.str();
        return !dominance_check({1, 0}, {1, 1}) && !viol.empty();
    });
}

// ---------------------------------------------------------------- 3: SRA

void criterion_sra(Recorder& rec, const AcceptanceOptions&) {
    auto c2 = build_group({Family::Cyclic, 2});
    auto c3 = build_group({Family::Cyclic, 3});
    for (auto w : {WreathGroup{1, &c2}, WreathGroup{1, &c3}, WreathGroup{2, &c2}}) {
        std::string label = w.gamma->name() + ", n=" + std::to_string(w.n);
        auto ctx = make_sra_ctx(w);
        rec.check("confluence " + label, [&](std::string& d) {
            auto r = confluence_check(ctx);
            d = std::to_string(r.triples_checked) + " triples, " + std::to_string(r.group_overlaps_checked) +
                " group overlaps";
            return r.pass && ctx.certified;
        });
        rec.check("graded dimension = dim S^d V * |G| for d <= 4, " + label, [&](std::string& d) {
            for (int deg = 0; deg <= 4; ++deg) {
                long got = graded_dimension(ctx, deg);
                long want = binomial(ctx.dim + deg - 1, deg) * static_cast<long>(ctx.group_order());
                if (got != want) {
                    d = "d=" + std::to_string(deg) + ": " + std::to_string(got) + " vs " + std::to_string(want);
                    return false;
                }
            }
            return true;
        });
        rec.check("spherical dimension = Molien for d <= 4, " + label, [&](std::string& d) {
            for (int deg = 0; deg <= 4; ++deg) {
                long got = spherical_graded_dimension(ctx, deg);
                long want = molien_dim(ctx.group_matrices, deg);
                if (got != want) {
                    d = "d=" + std::to_string(deg) + ": " + std::to_string(got) + " vs " + std::to_string(want);
                    return false;
                }
            }
            return true;
        });
    }
}

// ---------------------------------------------------------------- 4: quantum comoment

// xi . f = -f(xi . x) for the coordinate function f, from the first-order group action.
NCElement xi_action(const QuiverWeyl& qw, const std::vector<MatQ>& xi, int var) {
    RepQ shape = RepQ::zero(qw.fq.base, qw.v, qw.fq.framing);
    const std::size_t nc = shape.coordinate_count();
    std::vector<int> var_of(nc, -1);
    for (std::size_t k = 0; k < qw.rep_coordinate.size(); ++k) var_of[qw.rep_coordinate[k]] = static_cast<int>(k);
    std::vector<MatJ> g;
    for (const auto& m : xi) g.push_back(make_jet(MatQ::identity(m.rows()), m));
    NCElement out;
    for (std::size_t j = 0; j < nc; ++j) {
        RepQ e = shape;
        std::vector<Rational> x(nc, Rational(0));
        x[j] = 1;
        e.set_coordinates(x);
        auto moved = jet_derivative(act(g, to_jet(e))).coordinates();
        Rational c = -moved[qw.rep_coordinate[static_cast<std::size_t>(var)]];
        if (!c.is_zero()) out += NCElement::term(ParamPoly(CycScalar(c)), {var_of[j]}, 0);
    }
    return out;
}

std::vector<std::vector<MatQ>> unit_blocks(const DimVec& v) {
    std::vector<std::vector<MatQ>> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto d = static_cast<std::size_t>(v[i]);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<MatQ> xi;
                for (long vk : v) xi.emplace_back(static_cast<std::size_t>(vk), static_cast<std::size_t>(vk));
                xi[i](r, c) = 1;
                out.push_back(xi);
            }
    }
    return out;
}

void criterion_comoment(Recorder& rec, const AcceptanceOptions& opts) {
    const ParamPoly h = ParamPoly::var(0);
    struct Fixture {
        std::string name;
        FramedQuiver fq;
        DimVec v;
    };
    std::vector<Fixture> fixtures{
        {"Kronecker w=(1,0) v=(1,1)", FramedQuiver(fixtures::kronecker(), {1, 0}), {1, 1}},
        {"Kronecker w=(1,1) v=(2,1)", FramedQuiver(fixtures::kronecker(), {1, 1}), {2, 1}},
        {"affine A1 w=(1,0) v=(1,1)", FramedQuiver(fixtures::affine_a1(), {1, 0}), {1, 1}},
        {"affine A1 w=(1,0) v=(2,1)", FramedQuiver(fixtures::affine_a1(), {1, 0}), {2, 1}},
    };
    SeedStream rng(opts.seed);
    for (const auto& f : fixtures) {
        auto qw = make_quiver_weyl(f.fq, f.v);
        auto basis = unit_blocks(f.v);
        std::vector<NCElement> phis;
        for (const auto& xi : basis) phis.push_back(quantum_comoment(qw, xi));
        rec.check("[Phi(xi), f] = h (xi.f), " + f.name, [&](std::string& d) {
            std::size_t n = 0;
            for (std::size_t k = 0; k < basis.size(); ++k)
                for (int v = 0; v < qw.ctx.dim; ++v, ++n)
                    if (commutator(qw.ctx, phis[k], NCElement::generator(v)) != xi_action(qw, basis[k], v) * h) {
                        d = "basis element " + std::to_string(k) + ", coordinate " + std::to_string(v);
                        return false;
                    }
            d = std::to_string(n) + " pairs";
            return true;
        });
        rec.check("[Phi(xi), Phi(eta)] = h Phi([xi, eta]), " + f.name, [&](std::string& d) {
            for (int t = 0; t < 8; ++t) {
                auto i = static_cast<std::size_t>(rng.next(0, static_cast<long>(basis.size()) - 1));
                auto j = static_cast<std::size_t>(rng.next(0, static_cast<long>(basis.size()) - 1));
                std::vector<MatQ> br;
                for (std::size_t k = 0; k < basis[i].size(); ++k)
                    br.push_back(basis[i][k] * basis[j][k] - basis[j][k] * basis[i][k]);
                if (commutator(qw.ctx, phis[i], phis[j]) != quantum_comoment(qw, br) * h) {
                    d = "pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                    return false;
                }
            }
            return true;
        });
        rec.check("sigma(Phi(xi)) = Phi(xi), " + f.name, [&](std::string&) {
            for (const auto& p : phis)
                if (parity_antiauto(qw.ctx, p) != p) return false;
            return true;
        });
    }
}

// ---------------------------------------------------------------- 5: Maffei

bool contained(const MatQ& small, const MatQ& big) {
    if (small.cols() == 0) return true;
    return rank(hstack(big, small)) == rank(big);
}

void criterion_maffei(Recorder& rec, const AcceptanceOptions& opts) {
    auto e0 = build_typea(3, 4, {2, 1, 1}, {4, 0});
    rec.check("e=0 fixture n=3 N=4 d=(4,0): 10 samples give flags with nilpotent Delta1 Gamma1", [&](std::string& d) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto x = sample_lambda0(e0.framed_quiver(), e0.v, opts.seed + s);
            auto fl = flag_iso_e0(x, e0);
            const auto& E = fl.endomorphism;
            bool ok = fl.flag.size() == 4 && fl.flag.front().cols() == 0 && rank(fl.flag.back()) == 4;
            long expect = 0;
            for (std::size_t i = 1; ok && i < fl.flag.size(); ++i) {
                expect += e0.r[i - 1];
                ok = static_cast<long>(fl.flag[i].cols()) == expect && rank(fl.flag[i]) == fl.flag[i].cols() &&
                     contained(fl.flag[i - 1], fl.flag[i]) && contained(E * fl.flag[i], fl.flag[i - 1]);
            }
            if (!ok || !(E * E * E).is_zero()) {
                d = "sample " + std::to_string(s);
                return false;
            }
        }
        return true;
    });
    auto t = build_typea(3, 4, {2, 1, 1}, {2, 1});
    std::vector<RepQ> xs;
    std::vector<BlockRepQ> lifts;
    rec.check("general fixture n=3 N=4 d=(2,1): maffei_lift and maffei_verify on 10 samples", [&](std::string& d) {
        std::size_t unknowns = 0;
        for (std::uint64_t s = 0; s < 10; ++s) {
            xs.push_back(sample_lambda0(t.framed_quiver(), t.v, opts.seed + s));
            LiftStats st;
            lifts.push_back(maffei_lift(xs.back(), t, &st));
            unknowns += st.unknowns;
            auto rep = maffei_verify(lifts.back(), &xs.back());
            if (!rep.pass) {
                d = "sample " + std::to_string(s) + ": " + rep.failures().front();
                return false;
            }
        }
        d = std::to_string(unknowns) + " unknowns solved";
        return true;
    });
    rec.check("Kazhdan action at t in {2, 3, -1}", [&](std::string& d) {
        if (lifts.size() != xs.size() || xs.empty()) return false;
        for (std::size_t s = 0; s < xs.size(); ++s)
            for (long tv : {2L, 3L, -1L})
                if (!kazhdan_action_check(lifts[s], xs[s], Rational(tv))) {
                    d = "sample " + std::to_string(s) + ", t=" + std::to_string(tv);
                    return false;
                }
        return true;
    });
    rec.check("symplectic pullback on 5 tangent pairs per sample", [&](std::string& d) {
        if (xs.empty()) return false;
        for (std::size_t s = 0; s < xs.size(); ++s)
            if (!symplectic_pullback_check(xs[s], t, 5, opts.seed + 100 + s)) {
                d = "sample " + std::to_string(s);
                return false;
            }
        return true;
    });
}

// ---------------------------------------------------------------- 6: weight multiplicities

// Weyl character formula with the Kostant partition function; finite type only.
long kostant_oracle(const CartanData& c, const DimVec& d, const DimVec& v) {
    std::size_t n = c.rank();
    MatQ C(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) C(i, j) = Rational(c.matrix[i][j]);
    MatQ Cinv = inverse(C);
    Quiver q(static_cast<int>(n), {});
    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = i + 1; j < static_cast<int>(n); ++j)
            for (long k = 0; k < -c.matrix[i][j]; ++k) q.arrows.push_back({i, j});
    std::vector<DimVec> roots;
    for (const auto& r : positive_roots_below(q, DimVec(n, 6))) roots.push_back(r.coords);

    std::map<std::pair<DimVec, std::size_t>, long> memo;
    std::function<long(const DimVec&, std::size_t)> partitions = [&](const DimVec& g, std::size_t start) -> long {
        bool zero = true;
        for (long x : g) {
            if (x < 0) return 0;
            zero = zero && x == 0;
        }
        if (zero) return 1;
        if (start == roots.size()) return 0;
        auto key = std::make_pair(g, start);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        long total = partitions(g, start + 1);
        DimVec h = g;
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                h[i] -= roots[start][i];
                ok = ok && h[i] >= 0;
            }
            if (!ok) break;
            total += partitions(h, start + 1);
        }
        memo[key] = total;
        return total;
    };

    DimVec lr(n);
    for (std::size_t i = 0; i < n; ++i) lr[i] = d[i] + 1;
    std::map<DimVec, int> orbit{{lr, 1}};
    std::vector<DimVec> todo{lr};
    while (!todo.empty()) {
        DimVec w = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            DimVec x = w;
            for (std::size_t j = 0; j < n; ++j) x[j] -= w[i] * c.matrix[i][j];
            if (orbit.emplace(x, -orbit[w]).second) todo.push_back(x);
        }
    }
    long total = 0;
    for (const auto& [w, sign] : orbit) {
        std::vector<Rational> diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = Rational(w[i] - lr[i]);
        MatQ rc = Cinv * MatQ::column(diff);
        DimVec g(n);
        bool integral = true;
        for (std::size_t i = 0; i < n; ++i) {
            Rational x = rc(i, 0) + Rational(v[i]);
            integral = integral && x.is_integer();
            if (integral) g[i] = x.to_long();
        }
        if (integral) total += sign * partitions(g, 0);
    }
    return total;
}

void criterion_multiplicity(Recorder& rec, const AcceptanceOptions&) {
    auto a1 = cartan_from_matrix({{2}});
    auto a2 = cartan_from_matrix({{2, -1}, {-1, 2}});
    rec.check("A1 L(2w) weight 0 has multiplicity 1", weight_multiplicity(a1, {2}, {1}) == 1);
    rec.check("A2 adjoint weight 0 has multiplicity 2", weight_multiplicity(a2, {1, 1}, {1, 1}) == 2);
    std::vector<std::pair<std::string, CartanData>> types{
        {"A1", a1},
        {"A1xA1", cartan_from_matrix({{2, 0}, {0, 2}})},
        {"A2", a2},
        {"A3", cartan_from_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})},
        {"A1xA2", cartan_from_matrix({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}})},
        {"A1xA1xA1", cartan_from_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})},
    };
    for (const auto& [name, c] : types) {
        rec.check("Freudenthal = character oracle on " + name + ", height <= 6", [&](std::string& d) {
            std::size_t n = c.rank();
            std::size_t cases = 0;
            DimVec hw(n, 0);
            while (true) {
                // all v with height <= 6
                std::function<bool(DimVec&, std::size_t, long)> walk = [&](DimVec& v, std::size_t k, long left) {
                    if (k == n) {
                        ++cases;
                        long got = weight_multiplicity(c, hw, v);
                        long want = kostant_oracle(c, hw, v);
                        if (got != want) {
                            d = "d=" + str(hw) + " v=" + str(v) + ": " + std::to_string(got) + " vs " +
                                std::to_string(want);
                            return false;
                        }
                        return true;
                    }
                    for (long x = 0; x <= left; ++x) {
                        v[k] = x;
                        if (!walk(v, k + 1, left - x)) return false;
                    }
                    v[k] = 0;
                    return true;
                };
                DimVec v(n, 0);
                if (!walk(v, 0, 6)) return false;
                std::size_t k = 0;
                while (k < n && hw[k] == 2) hw[k++] = 0;
                if (k == n) break;
                ++hw[k];
            }
            d = std::to_string(cases) + " weights";
            return true;
        });
    }
}

// ---------------------------------------------------------------- 7: parameter maps

void criterion_params(Recorder& rec, const AcceptanceOptions& opts) {
    for (auto spec : {GroupSpec{Family::Cyclic, 2}, GroupSpec{Family::Cyclic, 3}, GroupSpec{Family::BinaryDihedral, 2}}) {
        auto g = build_group(spec);
        rec.check("upsilon and upsilon0 invert exactly, h -> h, " + g.name(), [&](std::string&) {
            auto u = build_upsilon(g, 2);
            auto u0 = build_upsilon0(g);
            bool ok = u.verified && u0.verified;
            ok = ok && u.inverse * u.matrix == MatC::identity(u.source.dim()) &&
                 u.matrix * u.inverse == MatC::identity(u.target.dim());
            ok = ok && u0.inverse * u0.matrix == MatC::identity(u0.source.dim());
            for (std::size_t a = 0; a < u.matrix.rows(); ++a) ok = ok && u.matrix(a, 0) == CycScalar(a == 0 ? 1 : 0);
            for (std::size_t a = 0; a < u0.matrix.rows(); ++a) ok = ok && u0.matrix(a, 0) == CycScalar(a == 0 ? 1 : 0);
            return ok;
        });
    }
    rec.check("Cyclic(2) matrices match the hand inversion", [&](std::string&) {
        auto g = build_group({Family::Cyclic, 2});
        using C = CycScalar;
        MatC ups(3, 3, {C(1), C(1), C(Rational(-1, 2)), C(0), C(0), C(Rational(1, 2)), C(0), C(-1), C(Rational(1, 2))});
        MatC ups0(3, 2, {C(1), C(1), C(0), C(Rational(1, 2)), C(0), C(Rational(-1, 2))});
        return build_upsilon(g, 2).matrix == ups && build_upsilon0(g).matrix == ups0;
    });
    SeedStream rng(opts.seed);
    auto random_chi = [&](std::size_t n) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rng.small());
        return v;
    };
    for (auto [label, spec] : {std::pair{"A2", GroupSpec{Family::Cyclic, 3}}, std::pair{"A3", GroupSpec{Family::Cyclic, 4}},
                               std::pair{"D4", GroupSpec{Family::BinaryDihedral, 2}}}) {
        auto mq = mckay_quiver(build_group(spec));
        const auto& q = mq.quiver;
        auto adj = q.adjacency();
        int n = q.vertices;
        rec.check(std::string("s_i^2 = id and braid relations on ") + label, [&](std::string& d) {
            std::size_t relations = 0;
            for (int trial = 0; trial < 4; ++trial) {
                auto chi = random_chi(static_cast<std::size_t>(n + 1));
                for (bool rho : {false, true}) {
                    for (int i = 1; i < n; ++i) {
                        ++relations;
                        if (weyl_act(q, mq.delta, {i, i}, chi, rho) != chi) return false;
                        for (int j = i + 1; j < n; ++j) {
                            int m = adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0 ? 2 : 3;
                            std::vector<int> word;
                            for (int k = 0; k < m; ++k) {
                                word.push_back(i);
                                word.push_back(j);
                            }
                            ++relations;
                            if (weyl_act(q, mq.delta, word, chi, rho) != chi) return false;
                        }
                    }
                }
            }
            d = std::to_string(relations) + " relations";
            return true;
        });
        rec.check(std::string("sigma_flip is an involution commuting with weyl_act on ") + label, [&](std::string&) {
            for (int trial = 0; trial < 4; ++trial) {
                auto chi = random_chi(static_cast<std::size_t>(n + 1));
                if (sigma_flip(sigma_flip(chi, mq.delta), mq.delta) != chi) return false;
                for (int i = 1; i < n; ++i)
                    if (sigma_flip(weyl_act(q, mq.delta, {i}, chi), mq.delta) !=
                        weyl_act(q, mq.delta, {i}, sigma_flip(chi, mq.delta)))
                        return false;
            }
            return true;
        });
    }
}

// ---------------------------------------------------------------- 8: reflection functor

std::vector<std::vector<int>> cyclic_paths(const Quiver& q, std::size_t max_len) {
    int ids = 2 * static_cast<int>(q.arrows.size());
    std::vector<std::vector<int>> out;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& p) {
        if (!p.empty() && doubled_arrow_ends(q, p.front()).second == doubled_arrow_ends(q, p.back()).first)
            out.push_back(p);
        if (p.size() == max_len) return;
        for (int a = 0; a < ids; ++a) {
            // M_{p0} M_{p1}: the arrow applied before p.back() ends where p.back() starts
            if (!p.empty() && doubled_arrow_ends(q, a).second != doubled_arrow_ends(q, p.back()).first) continue;
            p.push_back(a);
            grow(p);
            p.pop_back();
        }
    };
    std::vector<int> p;
    grow(p);
    return out;
}

void criterion_reflect(Recorder& rec, const AcceptanceOptions& opts) {
    Quiver qw = FramedQuiver(fixtures::affine_a1(), {1, 0}).expanded();
    DimVec vw{1, 1, 1};
    std::vector<Rational> chi{Rational(2), Rational(-5), Rational(3)};
    rec.check("chi = (2,-5,3) is generic for v^w = (1,1,1)", [&](std::string&) {
        if (!pair(chi, vw).is_zero()) return false;
        for (const auto& r : positive_roots_below(qw, vw))
            if (r.coords != vw && pair(chi, r.coords).is_zero()) return false;
        return true;
    });
    std::vector<Rational> target;
    for (const auto& c : chi) target.push_back(-c);
    rec.check("A'B' = AB - chi_i id and the moment value moves by s_i", [&](std::string& d) {
        std::size_t done = 0;
        for (std::uint64_t s = 0; s < 5; ++s) {
            auto r = sample_lambda(FramedQuiver(qw, {0, 0, 0}), vw, target, opts.seed + s);
            for (int i = 0; i < qw.vertices; ++i) {
                auto r2 = reflect(r, i, chi);
                auto before = reflection_blocks(r, i);
                auto after = reflection_blocks(r2, i);
                MatQ lhs = after.A * after.B;
                MatQ rhs = before.A * before.B - MatQ::scalar(before.A.rows(), chi[static_cast<std::size_t>(i)]);
                auto chi2 = reflect_character(qw, i, chi);
                auto mu = moment_map(r2);
                bool ok = lhs == rhs && r2.v == reflect_dimension(qw, i, r.v);
                for (std::size_t j = 0; j < mu.size(); ++j)
                    ok = ok && mu[j] == MatQ::scalar(static_cast<std::size_t>(r2.v[j]), -chi2[j]);
                if (!ok) {
                    d = "sample " + std::to_string(s) + ", vertex " + std::to_string(i);
                    return false;
                }
                ++done;
            }
        }
        d = std::to_string(done) + " reflections";
        return true;
    });
    rec.check("chi = 0: trace invariants of length <= 4 are preserved", [&](std::string& d) {
        auto paths = cyclic_paths(qw, 4);
        std::size_t reflected = 0;
        for (std::uint64_t s = 0; s < 8; ++s) {
            auto r = sample_lambda0(FramedQuiver(qw, {0, 0, 0}), vw, opts.seed + s);
            for (int i = 0; i < qw.vertices; ++i) {
                RepQ r2;
                try {
                    r2 = reflect(r, i, std::vector<Rational>(3, Rational(0)));
                } catch (const DomainError&) {
                    continue;
                }
                ++reflected;
                for (const auto& p : paths)
                    if (trace_invariant(r2, p) != trace_invariant(r, p)) {
                        d = "sample " + std::to_string(s) + ", vertex " + std::to_string(i);
                        return false;
                    }
            }
        }
        d = std::to_string(paths.size()) + " paths, " + std::to_string(reflected) + " reflections";
        return reflected > 0;
    });
}

// ---------------------------------------------------------------- 9: Slodowy

long centralizer_dim(std::vector<long> p) {
    std::sort(p.rbegin(), p.rend());
    long s = 0;
    for (long k = 1; k <= (p.empty() ? 0 : p.front()); ++k) {
        long c = 0;
        for (long x : p) c += (x >= k);
        s += c * c;
    }
    return s;
}

void partitions_of(long n, long max, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long k = std::min(n, max); k >= 1; --k) {
        cur.push_back(k);
        partitions_of(n - k, k, cur, out);
        cur.pop_back();
    }
}

void criterion_slodowy(Recorder& rec, const AcceptanceOptions&) {
    for (long N = 1; N <= 4; ++N) {
        std::vector<std::vector<long>> parts;
        std::vector<long> cur;
        partitions_of(N, N, cur, parts);
        for (const auto& p : parts) {
            rec.check("partition " + str(p), [&](std::string& d) {
                auto sl = slodowy_slice(N, p);
                bool ok = sl2_relations_hold(sl.triple);
                ok = ok && static_cast<long>(sl.slice_basis.size()) == centralizer_dim(p);
                for (std::size_t k = 0; k < sl.slice_basis.size(); ++k) {
                    const auto& z = sl.slice_basis[k];
                    ok = ok && sl.kazhdan_degrees[k] >= 2 && (sl.triple.f * z - z * sl.triple.f).is_zero();
                }
                d = "dim " + std::to_string(sl.slice_basis.size());
                return ok;
            });
        }
    }
}

struct Criterion {
    int id;
    const char* tag;
    const char* title;
    double budget;
    void (*run)(Recorder&, const AcceptanceOptions&);
};

const Criterion kCriteria[] = {
    {1, "mckay", "McKay correspondence", 5, criterion_mckay},
    {2, "cb", "Crawley-Boevey flatness and type A dominance", 10, criterion_cb},
    {3, "sra", "SRA flatness", 60, criterion_sra},
    {4, "comoment", "quantum comoment", 5, criterion_comoment},
    {5, "maffei", "Maffei transversal lift", 120, criterion_maffei},
    {6, "multiplicity", "weight multiplicities", 30, criterion_multiplicity},
    {7, "params", "parameter maps", 5, criterion_params},
    {8, "reflect", "reflection functor", 10, criterion_reflect},
    {9, "slodowy", "Slodowy slices", 5, criterion_slodowy},
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    std::vector<CriterionResult> out;
    for (const auto& c : kCriteria) {
        if (!opts.filter.empty() && std::string(c.tag).find(opts.filter) == std::string::npos) continue;
        CriterionResult res{c.id, c.title, 0, c.budget, {}};
        Recorder rec(res, c.tag);
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(rec, opts);
        } catch (const std::exception& e) {
            rec.check("setup", false, e.what());
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace quivq
