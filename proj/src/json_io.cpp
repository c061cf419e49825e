#include "quivq/json_io.hpp"

namespace quivq::json_io {

const json& require(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedInput("missing field \"" + key + "\"");
    return j.at(key);
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw MalformedInput("expected a rational string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        throw MalformedInput("bad rational \"" + j.get<std::string>() + "\"");
    }
}

std::vector<Rational> rationals_from(const json& j) {
    if (!j.is_array()) throw MalformedInput("expected an array of rationals");
    std::vector<Rational> v;
    for (const auto& e : j) v.push_back(rational_from(e));
    return v;
}

json to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const CycScalar& z) {
    if (z.is_rational()) return z.to_rational().str();
    json c = json::array();
    for (const auto& x : z.coeffs()) c.push_back(x.str());
    return {{"conductor", z.conductor()}, {"coeffs", c}};
}

CycScalar cyc_from(const json& j) {
    if (!j.is_object()) return CycScalar(rational_from(j));
    int m = require(j, "conductor").get<int>();
    if (m < 1) throw MalformedInput("conductor must be positive");
    auto c = rationals_from(require(j, "coeffs"));
    if (c.size() != static_cast<std::size_t>(euler_phi(m))) throw MalformedInput("coefficient count must be phi(m)");
    return CycScalar(m, c);
}

json to_json(const std::vector<CycScalar>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

namespace {

template <class T>
json matrix_json(const Matrix<T>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

json dims_json(const DimVec& v) { return json(v); }

}  // namespace

json to_json(const MatQ& m) { return matrix_json(m); }
json to_json(const MatC& m) { return matrix_json(m); }

MatQ matq_from(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw MalformedInput("matrix must have " + std::to_string(rows) + " rows");
    MatQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw MalformedInput("matrix row must have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from(j[i][k]);
    }
    return m;
}

DimVec dims_from(const json& j) {
    if (!j.is_array()) throw MalformedInput("expected an integer array");
    DimVec v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw MalformedInput("expected an integer, got " + e.dump());
        v.push_back(e.get<long>());
    }
    return v;
}

json to_json(const Quiver& q, const DimVec* framing) {
    json arrows = json::array();
    for (const auto& a : q.arrows) arrows.push_back({a.tail, a.head});
    json j{{"vertices", q.vertices}, {"arrows", arrows}};
    if (framing) j["framing"] = dims_json(*framing);
    return j;
}

Quiver quiver_from(const json& j) {
    const auto& nv = require(j, "vertices");
    if (!nv.is_number_integer() || nv.get<int>() < 0) throw MalformedInput("vertices must be a nonnegative integer");
    int n = nv.get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : require(j, "arrows")) {
        if (!a.is_array() || a.size() != 2) throw MalformedInput("arrow must be [tail, head]");
        int t = a[0].get<int>();
        int h = a[1].get<int>();
        if (t < 0 || h < 0 || t >= n || h >= n) throw MalformedInput("arrow endpoint out of range");
        arrows.push_back({t, h});
    }
    return Quiver(n, arrows);
}

FramedQuiver framed_from(const json& j) {
    Quiver q = quiver_from(j);
    DimVec d(static_cast<std::size_t>(q.vertices), 0);
    if (j.contains("framing")) d = dims_from(j.at("framing"));
    if (d.size() != static_cast<std::size_t>(q.vertices)) throw MalformedInput("framing length must equal vertices");
    return FramedQuiver(q, d);
}

json to_json(const RepQ& r) {
    auto list = [](const std::vector<MatQ>& ms) {
        json a = json::array();
        for (const auto& m : ms) a.push_back(to_json(m));
        return a;
    };
    return {{"quiver", to_json(r.quiver)}, {"v", dims_json(r.v)}, {"w", dims_json(r.w)}, {"A", list(r.A)},
            {"B", list(r.B)},          {"Gamma", list(r.Gamma)}, {"Delta", list(r.Delta)}};
}

RepQ rep_from(const json& j) {
    Quiver q = quiver_from(require(j, "quiver"));
    DimVec v = dims_from(require(j, "v"));
    DimVec w = j.contains("w") ? dims_from(j.at("w")) : DimVec(v.size(), 0);
    if (v.size() != static_cast<std::size_t>(q.vertices) || w.size() != v.size())
        throw MalformedInput("dimension vectors must have one entry per vertex");
    for (long x : v)
        if (x < 0) throw MalformedInput("negative dimension");
    for (long x : w)
        if (x < 0) throw MalformedInput("negative framing");
    RepQ r = RepQ::zero(q, v, w);
    auto fill = [&](const char* key, std::vector<MatQ>& ms) {
        if (!j.contains(key)) return;
        const auto& a = j.at(key);
        if (!a.is_array() || a.size() != ms.size())
            throw MalformedInput(std::string("\"") + key + "\" must list " + std::to_string(ms.size()) + " blocks");
        for (std::size_t k = 0; k < ms.size(); ++k) ms[k] = matq_from(a[k], ms[k].rows(), ms[k].cols());
    };
    fill("A", r.A);
    fill("B", r.B);
    fill("Gamma", r.Gamma);
    fill("Delta", r.Delta);
    return r;
}

json to_json(const TypeAData& t) {
    return {{"n", t.n},       {"N", t.N},       {"r", dims_json(t.r)}, {"d", dims_json(t.d)}, {"v", dims_json(t.v)},
            {"tilde_v", dims_json(t.tilde_v)}, {"tilde_d", dims_json(t.tilde_d)}};
}

TypeAData typea_from(const json& j) {
    try {
        return build_typea(require(j, "n").get<int>(), require(j, "N").get<long>(), dims_from(require(j, "r")),
                           dims_from(require(j, "d")));
    } catch (const DomainError&) {
        throw;
    } catch (const MalformedInput&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
    }
}

namespace {

const char* role_name(BlockRole r) {
    switch (r) {
        case BlockRole::Zero: return "zero";
        case BlockRole::Identity: return "identity";
        case BlockRole::Matched: return "matched";
        case BlockRole::Free: return "free";
    }
    return "?";
}

}  // namespace

json to_json(const BlockRepQ& x) {
    auto L = make_layout(x.data);
    json at = json::array();
    json bt = json::array();
    for (const auto& m : x.At) at.push_back(to_json(m));
    for (const auto& m : x.Bt) bt.push_back(to_json(m));
    json blocks = json::array();
    for (int i = 0; i + 1 < x.data.n; ++i) {
        const auto& lo = L.spaces[static_cast<std::size_t>(i)];
        const auto& hi = L.spaces[static_cast<std::size_t>(i + 1)];
        for (bool is_a : {true, false}) {
            const auto& dsts = is_a ? hi : lo;
            const auto& srcs = is_a ? lo : hi;
            for (std::size_t a = 0; a < dsts.size(); ++a) {
                for (std::size_t b = 0; b < srcs.size(); ++b) {
                    if (dsts[a].dim == 0 || srcs[b].dim == 0) continue;
                    auto info = block_info(L, is_a, i, a, b);
                    auto m = get_block(L, x, is_a, i, a, b);
                    if (info.role == BlockRole::Zero && m.is_zero()) continue;
                    blocks.push_back({{"name", info.name},
                                      {"map", std::string(is_a ? "A" : "B") + std::to_string(i)},
                                      {"role", role_name(info.role)},
                                      {"degree", info.degree},
                                      {"matrix", to_json(m)}});
                }
            }
        }
    }
    return {{"typea", to_json(x.data)}, {"At", at}, {"Bt", bt}, {"blocks", blocks}};
}

BlockRepQ blockrep_from(const json& j, const TypeAData& t) {
    auto L = make_layout(t);
    BlockRepQ x{t, {}, {}};
    const auto& at = require(j, "At");
    const auto& bt = require(j, "Bt");
    auto maps = static_cast<std::size_t>(t.n - 1);
    if (!at.is_array() || !bt.is_array() || at.size() != maps || bt.size() != maps)
        throw MalformedInput("At and Bt must list n-1 matrices");
    for (std::size_t i = 0; i < maps; ++i) {
        x.At.push_back(matq_from(at[i], L.dims[i + 1], L.dims[i]));
        x.Bt.push_back(matq_from(bt[i], L.dims[i], L.dims[i + 1]));
    }
    return x;
}

json to_json(const ParamMap& p) {
    auto space = [](const ParamSpace& s) { return json{{"kind", s.kind_name()}, {"labels", s.labels}}; };
    bool rational = true;
    for (const auto& e : p.matrix.entries()) rational = rational && e.is_rational();
    return {{"source", space(p.source)}, {"target", space(p.target)}, {"matrix", to_json(p.matrix)},
            {"inverse", to_json(p.inverse)}, {"rational", rational}, {"verified_inverse", p.verified}};
}

json to_json(const KleinianGroup& g, const McKayQuiver& mq) {
    json sizes = json::array();
    for (const auto& c : g.classes) sizes.push_back(c.size());
    json table = json::array();
    for (const auto& row : g.char_table) table.push_back(to_json(row));
    return {{"family", family_name(g.spec.family)},
            {"name", g.name()},
            {"order", g.order()},
            {"class_sizes", sizes},
            {"irreps", g.irrep_labels},
            {"character_table", table},
            {"delta", dims_json(mq.delta)},
            {"adjacency", mq.multiplicities},
            {"quiver", to_json(mq.quiver)}};
}

json to_json(const AlgebraCtx& ctx, const NCElement& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms())
        terms.push_back({{"coeff", c.str(ctx.param_names)}, {"mono", k.mono}, {"grp", k.grp}});
    return terms;
}

json error_json(const std::string& code, const std::string& detail) {
    return {{"schema", "quivq.error/1"}, {"error", code}, {"detail", detail}};
}

}  // namespace quivq::json_io
