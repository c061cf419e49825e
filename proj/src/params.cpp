#include "quivq/params.hpp"

#include <stdexcept>

#include "quivq/errors.hpp"
#include "quivq/linalg.hpp"

namespace quivq {

std::string ParamSpace::kind_name() const {
    switch (kind) {
        case Kind::SRAWreath: return "SRAWreath";
        case Kind::SRAKlein: return "SRAKlein";
        case Kind::ZHat: return "ZHat";
        case Kind::ZHat0: return "ZHat0";
        case Kind::AStar: return "AStar";
    }
    return "?";
}

ParamSpace ParamSpace::sra_wreath(int l) {
    ParamSpace s{Kind::SRAWreath, l, {"h"}};
    for (int i = 1; i <= l; ++i) s.labels.push_back("c" + std::to_string(i));
    s.labels.emplace_back("k");
    return s;
}

ParamSpace ParamSpace::sra_klein(int r) {
    ParamSpace s{Kind::SRAKlein, r, {"h"}};
    for (int i = 1; i <= r; ++i) s.labels.push_back("c" + std::to_string(i));
    return s;
}

ParamSpace ParamSpace::zhat(int r) {
    ParamSpace s{Kind::ZHat, r, {"h"}};
    for (int i = 0; i <= r; ++i) s.labels.push_back("eps" + std::to_string(i));
    return s;
}

ParamSpace ParamSpace::zhat0(int r) {
    ParamSpace s = zhat(r);
    s.kind = Kind::ZHat0;
    return s;
}

ParamSpace ParamSpace::astar(int n) {
    ParamSpace s{Kind::AStar, n - 1, {}};
    for (int i = 1; i < n; ++i) s.labels.push_back("eps" + std::to_string(i));
    return s;
}

std::vector<CycScalar> ParamMap::apply(const std::vector<CycScalar>& x) const {
    if (x.size() != matrix.cols()) throw std::invalid_argument("ParamMap::apply: length mismatch");
    std::vector<CycScalar> y(matrix.rows());
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j) y[i] += matrix(i, j) * x[j];
    return y;
}

std::vector<std::vector<CycScalar>> class_traces(const KleinianGroup& g) {
    if (g.classes.empty() || g.class_of[0] != 0) throw std::logic_error("class_traces: class 0 must be the identity");
    std::vector<std::vector<CycScalar>> out;
    for (std::size_t i = 0; i < g.dims.size(); ++i) {
        std::vector<CycScalar> row{CycScalar(g.dims[i])};
        for (std::size_t j = 1; j < g.classes.size(); ++j)
            row.push_back(CycScalar(static_cast<long>(g.classes[j].size())) * g.char_table[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<CycScalar> eps0_image(const KleinianGroup& g, bool wreath) {
    auto tr = class_traces(g)[0];
    CycScalar order(static_cast<long>(g.order()));
    if (wreath) {
        tr[0] -= order * CycScalar(Rational(1, 2));
        tr.push_back(order);
    } else {
        tr[0] -= order;
    }
    return tr;
}

ParamMap build_upsilon(const KleinianGroup& g, int n) {
    if (n < 2) throw DomainError("Unsupported", "upsilon needs n > 1; use upsilon0 for n = 1");
    if (g.order() < 2) throw DomainError("Unsupported", "upsilon needs a nontrivial group");
    auto traces = class_traces(g);
    int r = static_cast<int>(g.dims.size()) - 1;
    int l = static_cast<int>(g.classes.size()) - 1;
    auto src = ParamSpace::sra_wreath(l);
    auto tgt = ParamSpace::zhat(r);
    // inverse-direction map zhat* -> param*, columns h, eps_0..eps_r
    MatC m(src.dim(), tgt.dim());
    m(0, 0) = CycScalar(1);
    for (int i = 0; i <= r; ++i) {
        auto col = (i == 0) ? eps0_image(g, true) : traces[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < col.size(); ++a) m(a, static_cast<std::size_t>(i + 1)) = col[a];
    }
    ParamMap p{src, tgt, inverse(m), m, false};
    p.verified = (p.inverse * p.matrix == MatC::identity(src.dim())) &&
                 (p.matrix * p.inverse == MatC::identity(tgt.dim()));
    if (!p.verified) throw std::logic_error("build_upsilon: inverse check failed");
    return p;
}

namespace {

template <class T>
void canonicalize_column(std::vector<T>& x, const DimVec& delta) {
    T dot(0);
    T norm(0);
    for (std::size_t i = 0; i < delta.size(); ++i) {
        dot += x[i + 1] * T(delta[i]);
        norm += T(delta[i] * delta[i]);
    }
    T t = dot / norm;
    for (std::size_t i = 0; i < delta.size(); ++i) x[i + 1] -= t * T(delta[i]);
}

}  // namespace

ParamMap build_upsilon0(const KleinianGroup& g) {
    auto traces = class_traces(g);
    int r = static_cast<int>(g.dims.size()) - 1;
    auto src = ParamSpace::sra_klein(r);
    auto tgt = ParamSpace::zhat0(r);
    MatC m(src.dim(), tgt.dim());
    m(0, 0) = CycScalar(1);
    for (int i = 0; i <= r; ++i) {
        auto col = (i == 0) ? eps0_image(g, false) : traces[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < col.size(); ++a) m(a, static_cast<std::size_t>(i + 1)) = col[a];
    }
    DimVec delta = g.dims;
    for (std::size_t a = 0; a < src.dim(); ++a) {
        CycScalar s(0);
        for (std::size_t i = 0; i < delta.size(); ++i) s += CycScalar(delta[i]) * m(a, i + 1);
        if (!s.is_zero())
            throw DomainError("RelationViolated", "sum delta_i image(eps_i) has nonzero " + src.labels[a] + " part");
    }
    // invert on the basis h, eps_1..eps_r of zhat0*, then move to canonical coordinates
    MatC square(src.dim(), src.dim());
    for (std::size_t a = 0; a < src.dim(); ++a) {
        square(a, 0) = m(a, 0);
        for (int i = 1; i <= r; ++i) square(a, static_cast<std::size_t>(i)) = m(a, static_cast<std::size_t>(i + 1));
    }
    MatC sq_inv = inverse(square);
    MatC ups(tgt.dim(), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c) {
        std::vector<CycScalar> col(tgt.dim());
        col[0] = sq_inv(0, c);
        for (int i = 1; i <= r; ++i) col[static_cast<std::size_t>(i + 1)] = sq_inv(static_cast<std::size_t>(i), c);
        canonicalize_column(col, delta);
        for (std::size_t a = 0; a < tgt.dim(); ++a) ups(a, c) = col[a];
    }
    ParamMap p{src, tgt, ups, m, false};
    p.verified = (m * ups == MatC::identity(src.dim()));
    if (!p.verified) throw std::logic_error("build_upsilon0: inverse check failed");
    return p;
}

std::vector<Rational> canonical_zhat0(const std::vector<Rational>& x, const DimVec& delta) {
    if (x.size() != delta.size() + 1) throw std::invalid_argument("canonical_zhat0: length mismatch");
    auto y = x;
    canonicalize_column(y, delta);
    return y;
}

std::vector<Rational> hstar_to_z0(const std::vector<Rational>& lambda, const DimVec& delta) {
    if (lambda.size() + 1 != delta.size()) throw std::invalid_argument("hstar_to_z0: need r coefficients");
    std::vector<Rational> chi{Rational(0)};
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        chi.push_back(lambda[i]);
        chi[0] -= Rational(delta[i + 1]) * lambda[i];
    }
    chi[0] /= Rational(delta[0]);
    return chi;
}

std::vector<Rational> a_to_zstar(const std::vector<Rational>& x, const std::vector<long>& r) {
    if (x.size() != r.size() || x.empty()) throw std::invalid_argument("a_to_zstar: length mismatch");
    Rational tr(0);
    for (std::size_t i = 0; i < x.size(); ++i) tr += Rational(r[i]) * x[i];
    if (!tr.is_zero()) throw DomainError("NonTraceZero", "sum r_i x_i = " + tr.str());
    std::vector<Rational> out;
    Rational partial(0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        partial += Rational(r[i]) * x[i];
        out.push_back(partial);
    }
    return out;
}

std::vector<Rational> rho_z0(const DimVec& delta) {
    std::vector<Rational> rho(delta.size(), Rational(1));
    Rational s(0);
    for (std::size_t i = 1; i < delta.size(); ++i) s += Rational(delta[i]);
    rho[0] = -s / Rational(delta[0]);
    return rho;
}

namespace {

Rational delta_part(const std::vector<Rational>& eps, const DimVec& delta) {
    Rational dot(0);
    Rational norm(0);
    for (std::size_t i = 0; i < delta.size(); ++i) {
        dot += eps[i] * Rational(delta[i]);
        norm += Rational(delta[i] * delta[i]);
    }
    return dot / norm;
}

}  // namespace

std::vector<Rational> weyl_act(const Quiver& q, const DimVec& delta, const std::vector<int>& word,
                               const std::vector<Rational>& chi, bool rho_shift) {
    auto n = static_cast<std::size_t>(q.vertices);
    if (delta.size() != n || chi.size() != n + 1) throw std::invalid_argument("weyl_act: length mismatch");
    std::vector<Rational> eps(chi.begin() + 1, chi.end());
    auto rho = rho_z0(delta);
    if (rho_shift)
        for (std::size_t i = 0; i < n; ++i) eps[i] += rho[i];
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (i < 1 || i >= q.vertices) throw std::out_of_range("weyl_act: reflection index outside 1..r");
        Rational t = delta_part(eps, delta);
        for (std::size_t k = 0; k < n; ++k) eps[k] -= t * Rational(delta[k]);
        eps = reflect_character(q, i, eps);
        for (std::size_t k = 0; k < n; ++k) eps[k] += t * Rational(delta[k]);
    }
    if (rho_shift)
        for (std::size_t i = 0; i < n; ++i) eps[i] -= rho[i];
    std::vector<Rational> out{chi[0]};
    out.insert(out.end(), eps.begin(), eps.end());
    return out;
}

std::vector<Rational> sigma_flip(const std::vector<Rational>& chi, const DimVec& delta) {
    if (chi.size() != delta.size() + 1) throw std::invalid_argument("sigma_flip: length mismatch");
    std::vector<Rational> eps(chi.begin() + 1, chi.end());
    Rational t = delta_part(eps, delta);
    std::vector<Rational> out{chi[0]};
    for (std::size_t i = 0; i < delta.size(); ++i) out.push_back(eps[i] - Rational(2) * t * Rational(delta[i]));
    return out;
}

}  // namespace quivq
