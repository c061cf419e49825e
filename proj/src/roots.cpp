#include "quivq/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

namespace quivq {

std::string to_string(CartanType t) {
    switch (t) {
        case CartanType::Finite: return "finite";
        case CartanType::Affine: return "affine";
        case CartanType::Indefinite: return "indefinite";
    }
    return "unknown";
}

long CartanData::form(const DimVec& x, const DimVec& y) const {
    long s = 0;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j) s += x[i] * matrix[i][j] * y[j];
    return s;
}

namespace {

// 1 = positive definite, 0 = positive semidefinite singular, -1 = neither.
int definiteness(const std::vector<std::vector<long>>& m) {
    std::size_t n = m.size();
    MatQ a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(m[i][j]);
    bool singular = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).sign() < 0) return -1;
        if (a(k, k).is_zero()) {
            for (std::size_t j = k; j < n; ++j) {
                if (!a(k, j).is_zero()) return -1;
            }
            singular = true;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return singular ? 0 : 1;
}

bool connected_support(const std::vector<std::vector<long>>& c, const DimVec& alpha) {
    std::size_t n = alpha.size();
    std::size_t start = n;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] != 0) {
            ++count;
            if (start == n) start = i;
        }
    }
    if (count == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t j = 0; j < n; ++j) {
            if (!seen[j] && alpha[j] != 0 && i != j && c[i][j] < 0) {
                seen[j] = true;
                stack.push_back(j);
            }
        }
    }
    return reached == count;
}

bool leq(const DimVec& a, const DimVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Quiver quiver_from_cartan(const CartanData& c) {
    std::vector<Arrow> arrows;
    auto n = static_cast<int>(c.rank());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (long k = 0; k < -c.matrix[i][j]; ++k) arrows.push_back({i, j});
    return Quiver(n, arrows);
}

}  // namespace

CartanData cartan_from_matrix(std::vector<std::vector<long>> m) {
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("Cartan matrix must be square");
        if (m[i][i] != 2) throw std::invalid_argument("Cartan matrix must have diagonal 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw std::invalid_argument("Cartan matrix must be symmetric");
            if (i != j && m[i][j] > 0) throw std::invalid_argument("Cartan matrix off-diagonal must be <= 0");
        }
    }
    CartanData c;
    c.matrix = std::move(m);
    int def = definiteness(c.matrix);
    c.type = def == 1 ? CartanType::Finite : (def == 0 ? CartanType::Affine : CartanType::Indefinite);
    return c;
}

CartanData cartan_from_quiver(const Quiver& q) {
    if (q.has_loops()) throw DomainError("UnsupportedQuiver", "Cartan data needs a loop-free quiver");
    auto n = q.adjacency();
    std::vector<std::vector<long>> m(n.size(), std::vector<long>(n.size(), 0));
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j) m[i][j] = (i == j ? 2 : 0) - n[i][j];
    return cartan_from_matrix(std::move(m));
}

DimVec affine_delta(const CartanData& c) {
    std::size_t n = c.rank();
    MatQ a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(c.matrix[i][j]);
    auto ker = kernel(a);
    if (ker.size() != 1) throw DomainError("NotAffine", "Cartan kernel is not one-dimensional");
    auto v = ker[0];
    mpz_class lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, x.denominator());
    DimVec out(n);
    mpz_class g = 0;
    std::vector<mpz_class> ints(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class s = v[i].raw() * lcm_den;
        ints[i] = s.get_num();
        g = gcd(g, ints[i]);
    }
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class q = ints[i] / g;
        if (sign == 0 && q != 0) sign = q > 0 ? 1 : -1;
        out[i] = q.get_si();
    }
    for (auto& x : out) x *= sign;
    for (auto x : out) {
        if (x <= 0) throw DomainError("NotAffine", "kernel vector is not strictly positive");
    }
    return out;
}

Rational p_value(const DimVec& alpha, const Quiver& q) {
    if (alpha.size() != static_cast<std::size_t>(q.vertices)) throw std::invalid_argument("p_value: length mismatch");
    long s = 1;
    for (long x : alpha) s -= x * x;
    for (const auto& a : q.arrows) s += alpha[a.tail] * alpha[a.head];
    return Rational(s);
}

std::vector<Root> positive_roots_below(const Quiver& q, const DimVec& bound) {
    if (bound.size() != static_cast<std::size_t>(q.vertices))
        throw std::invalid_argument("positive_roots_below: bound length mismatch");
    CartanData c = cartan_from_quiver(q);
    std::size_t n = bound.size();
    auto close = [&](std::set<DimVec>& found, std::queue<DimVec>& todo) {
        while (!todo.empty()) {
            DimVec a = todo.front();
            todo.pop();
            for (std::size_t i = 0; i < n; ++i) {
                long pair_i = 0;
                for (std::size_t j = 0; j < n; ++j) pair_i += c.matrix[i][j] * a[j];
                if (pair_i >= 0) continue;
                DimVec b = a;
                b[i] -= pair_i;
                if (leq(b, bound) && found.insert(b).second) todo.push(b);
            }
        }
    };

    std::set<DimVec> real;
    std::queue<DimVec> todo;
    for (std::size_t i = 0; i < n; ++i) {
        if (bound[i] < 1) continue;
        DimVec e(n, 0);
        e[i] = 1;
        real.insert(e);
        todo.push(e);
    }
    close(real, todo);

    std::set<DimVec> imag;
    DimVec a(n, 0);
    while (true) {
        std::size_t k = 0;
        while (k < n && a[k] == bound[k]) a[k++] = 0;
        if (k == n) break;
        ++a[k];
        if (!connected_support(c.matrix, a)) continue;
        bool fundamental = true;
        for (std::size_t i = 0; i < n && fundamental; ++i) {
            long pair_i = 0;
            for (std::size_t j = 0; j < n; ++j) pair_i += c.matrix[i][j] * a[j];
            fundamental = pair_i <= 0;
        }
        if (fundamental && imag.insert(a).second) todo.push(a);
    }
    close(imag, todo);

    std::vector<Root> out;
    for (const auto& r : real) out.push_back({r, true});
    for (const auto& r : imag) out.push_back({r, false});
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return x.coords < y.coords; });
    return out;
}

namespace {

struct DecompSearch {
    std::vector<DimVec> roots;  // lexicographically nonincreasing
    std::vector<Rational> p;
    std::map<std::pair<DimVec, std::size_t>, std::optional<Rational>> max_memo;
    std::map<std::pair<DimVec, std::size_t>, std::size_t> count_memo;

    static DimVec minus(const DimVec& a, const DimVec& b) {
        DimVec r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    }
    static bool is_zero_vec(const DimVec& a) {
        return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
    }

    // Max of sum p over decompositions of rem into roots with index >= start.
    std::optional<Rational> max_p(const DimVec& rem, std::size_t start) {
        auto key = std::make_pair(rem, start);
        auto it = max_memo.find(key);
        if (it != max_memo.end()) return it->second;
        std::optional<Rational> best;
        for (std::size_t k = start; k < roots.size(); ++k) {
            if (!leq(roots[k], rem)) continue;
            DimVec r = minus(rem, roots[k]);
            std::optional<Rational> cand;
            if (is_zero_vec(r)) {
                cand = p[k];
            } else if (auto sub = max_p(r, k)) {
                cand = p[k] + *sub;
            }
            if (cand && (!best || *cand > *best)) best = cand;
        }
        max_memo[key] = best;
        return best;
    }

    std::size_t count(const DimVec& rem, std::size_t start) {
        auto key = std::make_pair(rem, start);
        auto it = count_memo.find(key);
        if (it != count_memo.end()) return it->second;
        std::size_t total = 0;
        for (std::size_t k = start; k < roots.size(); ++k) {
            if (!leq(roots[k], rem)) continue;
            DimVec r = minus(rem, roots[k]);
            total += is_zero_vec(r) ? 1 : count(r, k);
        }
        count_memo[key] = total;
        return total;
    }

    // Collects decompositions (>= 2 parts) whose p-sum satisfies `bad`.
    void collect(const DimVec& rem, std::size_t start, const Rational& sum, std::vector<std::size_t>& parts,
                 const std::function<bool(const Rational&)>& bad, std::size_t cap,
                 std::vector<std::vector<DimVec>>& out) {
        for (std::size_t k = start; k < roots.size() && out.size() < cap; ++k) {
            if (!leq(roots[k], rem)) continue;
            DimVec r = minus(rem, roots[k]);
            Rational s = sum + p[k];
            parts.push_back(k);
            if (is_zero_vec(r)) {
                if (parts.size() >= 2 && bad(s)) {
                    std::vector<DimVec> d;
                    for (auto idx : parts) d.push_back(roots[idx]);
                    out.push_back(std::move(d));
                }
            } else if (auto m = max_p(r, k); m && bad(s + *m)) {
                collect(r, k, s, parts, bad, cap, out);
            }
            parts.pop_back();
        }
    }
};

}  // namespace

CbReport cb_flatness_check_unframed(const Quiver& q, const DimVec& alpha, bool strict, std::size_t max_violations) {
    auto roots = positive_roots_below(q, alpha);
    DecompSearch s;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        s.roots.push_back(it->coords);
        s.p.push_back(p_value(it->coords, q));
    }
    CbReport rep;
    rep.vw = alpha;
    rep.strict = strict;
    rep.p_total = p_value(alpha, q);
    bool alpha_is_root = std::any_of(roots.begin(), roots.end(), [&](const Root& r) { return r.coords == alpha; });
    bool nonzero = !DecompSearch::is_zero_vec(alpha);
    std::size_t all = nonzero ? s.count(alpha, 0) : 0;
    rep.decompositions = all - (alpha_is_root ? 1 : 0);
    Rational target = rep.p_total;
    auto bad = [&](const Rational& x) { return strict ? x >= target : x > target; };
    std::vector<std::size_t> parts;
    if (nonzero) s.collect(alpha, 0, Rational(0), parts, bad, std::max<std::size_t>(max_violations, 1), rep.violations);
    rep.holds = rep.violations.empty();
    if (rep.violations.size() > max_violations) rep.violations.resize(max_violations);
    return rep;
}

CbReport cb_flatness_check(const FramedQuiver& fq, const DimVec& v, bool strict, std::size_t max_violations) {
    return cb_flatness_check_unframed(fq.expanded(), fq.expanded_dims(v), strict, max_violations);
}

bool is_generic(const std::vector<Rational>& theta, const Quiver& q, const DimVec& bound) {
    for (const auto& r : positive_roots_below(q, bound)) {
        if (pair(theta, r.coords).is_zero()) return false;
    }
    return true;
}

long weight_multiplicity(const CartanData& c, const DimVec& d, const DimVec& v) {
    std::size_t n = c.rank();
    if (d.size() != n || v.size() != n) throw std::invalid_argument("weight_multiplicity: length mismatch");
    for (long x : d) {
        if (x < 0) throw DomainError("NonDominantHighestWeight", "highest weight has a negative coordinate");
    }
    if (c.type == CartanType::Indefinite) throw DomainError("IndefiniteType", "Freudenthal recursion needs finite or affine type");
    for (long x : v) {
        if (x < 0) return 0;
    }
    Quiver q = quiver_from_cartan(c);
    auto roots = positive_roots_below(q, v);
    std::vector<std::pair<DimVec, long>> mult;
    for (const auto& r : roots) mult.emplace_back(r.coords, r.real ? 1 : static_cast<long>(n) - 1);

    auto dot_d = [&](const DimVec& a) {
        long s = 0;
        for (std::size_t i = 0; i < n; ++i) s += a[i] * d[i];
        return s;
    };
    std::map<DimVec, Rational> memo;
    std::function<Rational(const DimVec&)> m = [&](const DimVec& beta) -> Rational {
        for (long x : beta) {
            if (x < 0) return Rational(0);
        }
        if (std::all_of(beta.begin(), beta.end(), [](long x) { return x == 0; })) return Rational(1);
        auto it = memo.find(beta);
        if (it != memo.end()) return it->second;
        long sum_beta = std::accumulate(beta.begin(), beta.end(), 0L);
        long denom = 2 * dot_d(beta) + 2 * sum_beta - c.form(beta, beta);
        Rational rhs(0);
        for (const auto& [alpha, ma] : mult) {
            for (long k = 1;; ++k) {
                DimVec b2 = beta;
                bool ok = true;
                for (std::size_t i = 0; i < n; ++i) {
                    b2[i] -= k * alpha[i];
                    ok = ok && b2[i] >= 0;
                }
                if (!ok) break;
                // (mu + k alpha, alpha) with mu + k alpha = lambda - b2
                long pairing = dot_d(alpha) - c.form(b2, alpha);
                Rational sub = m(b2);
                if (!sub.is_zero()) rhs += Rational(2 * ma * pairing) * sub;
            }
        }
        Rational result = denom == 0 ? Rational(0) : rhs / Rational(denom);
        if (denom == 0 && !rhs.is_zero())
            throw DomainError("FreudenthalDegenerate", "zero denominator with nonzero right-hand side");
        memo[beta] = result;
        return result;
    };
    Rational r = m(v);
    if (!r.is_integer() || r.sign() < 0) throw DomainError("FreudenthalDegenerate", "non-integral multiplicity " + r.str());
    return r.to_long();
}

bool dominance_check(const DimVec& d, const DimVec& v) {
    if (d.size() != v.size()) throw std::invalid_argument("dominance_check: length mismatch");
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        long prev = i == 0 ? 0 : v[i - 1];
        long next = i + 1 == n ? 0 : v[i + 1];
        if (d[i] < 2 * v[i] - prev - next) return false;
    }
    return true;
}

std::vector<DominanceViolation> typea_dominance_scan(const DimVec& d, const DimVec& v, std::size_t* scanned) {
    if (d.size() != v.size()) throw std::invalid_argument("typea_dominance_scan: length mismatch");
    auto n = static_cast<int>(v.size());
    std::vector<Arrow> arrows;
    for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
    FramedQuiver fq(Quiver(n, arrows), d);
    Quiver qw = fq.expanded();
    CartanData c = cartan_from_quiver(fq.base);
    Rational p_full = p_value(fq.expanded_dims(v), qw);
    std::vector<DominanceViolation> out;
    std::size_t count = 0;
    DimVec vp(v.size(), 0);
    while (true) {
        ++count;
        DimVec u(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] - vp[i];
        Rational lhs = p_full - p_value(fq.expanded_dims(vp), qw);
        Rational rhs = Rational(c.form(u, u), 2);
        if (lhs < rhs) out.push_back({vp, lhs, rhs});
        std::size_t k = 0;
        while (k < vp.size() && vp[k] == v[k]) vp[k++] = 0;
        if (k == vp.size()) break;
        ++vp[k];
    }
    if (scanned) *scanned = count;
    return out;
}

}  // namespace quivq
