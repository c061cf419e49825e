// quivq: batch front end. Every subcommand prints one JSON document on stdout.
// Exit status: 0 success, 1 malformed input, 2 domain error, 3 failed selftest.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "quivq/acceptance.hpp"
#include "quivq/errors.hpp"
#include "quivq/json_io.hpp"
#include "quivq/random.hpp"
#include "quivq/roots.hpp"

using namespace quivq;
using json_io::json;
using json_io::MalformedInput;
using json_io::require;

namespace {

json read_input(const std::string& path) {
    if (path.empty()) throw MalformedInput("--input is required");
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw MalformedInput("cannot open " + path);
        buf << f.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

json result(const std::string& schema) { return {{"schema", "quivq." + schema + "/1"}}; }

json violations_json(const std::vector<std::vector<DimVec>>& v) {
    json a = json::array();
    for (const auto& d : v) a.push_back(d);
    return a;
}

KleinianGroup group_from_flags(const std::string& family, int m) {
    Family f;
    try {
        f = parse_family(family);
    } catch (const std::exception&) {
        throw MalformedInput("unknown family \"" + family + "\"");
    }
    if (m < 1) throw MalformedInput("--m must be positive");
    return build_group({f, m});
}

/// The rep in the input, or a seeded point of the zero fibre of the type A quiver.
RepQ typea_point(const json& in, const TypeAData& t, std::uint64_t seed) {
    if (in.contains("rep")) return json_io::rep_from(in.at("rep"));
    return sample_lambda0(t.framed_quiver(), t.v, seed);
}

// ---------------------------------------------------------------------------

json cmd_mckay(const std::string& family, int m) {
    auto g = group_from_flags(family, m);
    auto out = result("mckay");
    out.update(json_io::to_json(g, mckay_quiver(g)));
    return out;
}

json cmd_cb_check(const json& in) {
    auto out = result("cb-check");
    if (in.contains("typea")) {
        const auto& ta = in.at("typea");
        DimVec d = json_io::dims_from(require(ta, "d"));
        DimVec v = json_io::dims_from(require(ta, "v"));
        if (d.size() != v.size()) throw MalformedInput("typea d and v must have equal length");
        std::size_t scanned = 0;
        auto viol = typea_dominance_scan(d, v, &scanned);
        json vj = json::array();
        for (const auto& x : viol)
            vj.push_back({{"v_prime", x.v_prime}, {"lhs", x.lhs.str()}, {"rhs", x.rhs.str()}});
        out["dominant"] = dominance_check(d, v);
        out["scanned"] = scanned;
        out["holds"] = viol.empty();
        out["violations"] = vj;
        return out;
    }
    auto fq = json_io::framed_from(require(in, "quiver"));
    DimVec v = json_io::dims_from(require(in, "v"));
    if (v.size() != static_cast<std::size_t>(fq.base.vertices)) throw MalformedInput("v must have one entry per vertex");
    auto strict = cb_flatness_check(fq, v, true);
    auto weak = cb_flatness_check(fq, v, false);
    out["vw"] = strict.vw;
    out["p"] = strict.p_total.str();
    out["decompositions"] = strict.decompositions;
    out["strict"] = strict.holds;
    out["weak"] = weak.holds;
    out["violations"] = violations_json(strict.violations);
    return out;
}

json cmd_multiplicity(const json& in) {
    const auto& cm = require(in, "cartan");
    std::vector<std::vector<long>> m;
    for (const auto& row : cm) m.push_back(json_io::dims_from(row));
    for (const auto& row : m)
        if (row.size() != m.size()) throw MalformedInput("cartan must be square");
    auto c = cartan_from_matrix(m);
    DimVec d = json_io::dims_from(require(in, "d"));
    DimVec v = json_io::dims_from(require(in, "v"));
    if (d.size() != m.size() || v.size() != m.size()) throw MalformedInput("d and v must have rank entries");
    auto out = result("multiplicity");
    out["type"] = to_string(c.type);
    out["multiplicity"] = weight_multiplicity(c, d, v);
    return out;
}

json cmd_sra_check(const std::string& family, int m, int n, int max_degree) {
    if (n < 1) throw MalformedInput("--n must be positive");
    auto g = group_from_flags(family, m);
    auto ctx = make_sra_ctx(WreathGroup{n, &g});
    auto rep = confluence_check(ctx);
    auto out = result("sra-check");
    out["group"] = g.name();
    out["n"] = n;
    out["order"] = ctx.group_order();
    out["params"] = ctx.param_names;
    out["confluent"] = rep.pass;
    out["triples_checked"] = rep.triples_checked;
    out["group_overlaps_checked"] = rep.group_overlaps_checked;
    if (rep.witness_triple) out["witness_triple"] = *rep.witness_triple;
    if (rep.witness_group)
        out["witness_group"] = {rep.witness_group->first, rep.witness_group->second.first, rep.witness_group->second.second};
    if (rep.pass) {
        json dims = json::array();
        for (int d = 0; d <= max_degree; ++d)
            dims.push_back({{"degree", d},
                            {"graded", graded_dimension(ctx, d)},
                            {"spherical", spherical_graded_dimension(ctx, d)},
                            {"molien", molien_dim(ctx.group_matrices, d)}});
        out["dimensions"] = dims;
    }
    return out;
}

json cmd_comoment_check(const json& in, std::uint64_t seed) {
    auto fq = json_io::framed_from(require(in, "quiver"));
    DimVec v = json_io::dims_from(require(in, "v"));
    if (v.size() != static_cast<std::size_t>(fq.base.vertices)) throw MalformedInput("v must have one entry per vertex");
    auto qw = make_quiver_weyl(fq, v);
    const ParamPoly h = ParamPoly::var(0);
    json phis = json::array();
    bool parity = true;
    std::vector<std::vector<MatQ>> basis;
    std::vector<NCElement> images;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto d = static_cast<std::size_t>(v[i]);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<MatQ> xi;
                for (long vk : v) xi.emplace_back(static_cast<std::size_t>(vk), static_cast<std::size_t>(vk));
                xi[i](r, c) = 1;
                auto phi = quantum_comoment(qw, xi);
                parity = parity && parity_antiauto(qw.ctx, phi) == phi;
                phis.push_back({{"vertex", i}, {"row", r}, {"col", c}, {"phi", json_io::to_json(qw.ctx, phi)}});
                basis.push_back(std::move(xi));
                images.push_back(std::move(phi));
            }
    }
    SeedStream rng(seed);
    bool hom = true;
    std::size_t pairs = basis.empty() ? 0 : 8;
    for (std::size_t t = 0; t < pairs; ++t) {
        auto i = static_cast<std::size_t>(rng.next(0, static_cast<long>(basis.size()) - 1));
        auto j = static_cast<std::size_t>(rng.next(0, static_cast<long>(basis.size()) - 1));
        std::vector<MatQ> br;
        for (std::size_t k = 0; k < v.size(); ++k) br.push_back(basis[i][k] * basis[j][k] - basis[j][k] * basis[i][k]);
        hom = hom && commutator(qw.ctx, images[i], images[j]) == quantum_comoment(qw, br) * h;
    }
    auto out = result("comoment-check");
    out["generators"] = qw.ctx.basis_names;
    out["comoment"] = phis;
    out["parity_invariant"] = parity;
    out["homomorphism_pairs"] = pairs;
    out["homomorphism"] = hom;
    return out;
}

json cmd_maffei_lift(const json& in, std::uint64_t seed) {
    auto t = json_io::typea_from(require(in, "typea"));
    auto x = typea_point(in, t, seed);
    LiftStats st;
    auto xt = maffei_lift(x, t, &st);
    auto out = result("maffei-lift");
    out["rep"] = json_io::to_json(x);
    out["lift"] = json_io::to_json(xt);
    out["stats"] = {{"stages", st.stages}, {"unknowns", st.unknowns}, {"underdetermined_stages", st.underdetermined_stages}};
    return out;
}

json cmd_maffei_verify(const json& in) {
    auto t = json_io::typea_from(require(in, "typea"));
    auto xt = json_io::blockrep_from(require(in, "lift"), t);
    std::optional<RepQ> x;
    if (in.contains("rep")) x = json_io::rep_from(in.at("rep"));
    auto rep = maffei_verify(xt, x ? &*x : nullptr);
    json items = json::array();
    for (const auto& it : rep.items) items.push_back({{"name", it.name}, {"pass", it.pass}});
    auto out = result("maffei-verify");
    out["pass"] = rep.pass;
    out["failures"] = rep.failures();
    out["items"] = items;
    return out;
}

json cmd_flag_iso(const json& in, std::uint64_t seed) {
    auto t = json_io::typea_from(require(in, "typea"));
    auto x = typea_point(in, t, seed);
    auto fl = flag_iso_e0(x, t);
    json flag = json::array();
    for (const auto& f : fl.flag) flag.push_back(json_io::to_json(f));
    auto out = result("flag-iso");
    out["rep"] = json_io::to_json(x);
    out["endomorphism"] = json_io::to_json(fl.endomorphism);
    out["flag"] = flag;
    return out;
}

json cmd_slodowy(long N, const std::vector<long>& parts) {
    auto sl = slodowy_slice(N, parts);
    json basis = json::array();
    for (std::size_t k = 0; k < sl.slice_basis.size(); ++k)
        basis.push_back({{"matrix", json_io::to_json(sl.slice_basis[k])}, {"kazhdan_degree", sl.kazhdan_degrees[k]}});
    auto out = result("slodowy");
    out["N"] = N;
    out["jordan_type"] = sl.jordan_type;
    out["triple"] = {{"e", json_io::to_json(sl.triple.e)},
                     {"h", json_io::to_json(sl.triple.h)},
                     {"f", json_io::to_json(sl.triple.f)}};
    out["sl2_relations"] = sl2_relations_hold(sl.triple);
    out["dimension"] = sl.slice_basis.size();
    out["basis"] = basis;
    return out;
}

json cmd_params_map(const std::string& kind, const std::string& family, int m, int n) {
    auto g = group_from_flags(family, m);
    ParamMap p;
    if (kind == "upsilon") p = build_upsilon(g, n);
    else if (kind == "upsilon0") p = build_upsilon0(g);
    else throw MalformedInput("--kind must be upsilon or upsilon0");
    auto out = result("params-map");
    out["kind"] = kind;
    out["group"] = g.name();
    out.update(json_io::to_json(p));
    return out;
}

json cmd_reflect(const json& in) {
    auto rep = json_io::rep_from(require(in, "rep"));
    const auto& vj = require(in, "vertex");
    if (!vj.is_number_integer()) throw MalformedInput("vertex must be an integer");
    int i = vj.get<int>();
    if (i < 0 || i >= rep.quiver.vertices) throw MalformedInput("vertex out of range");
    auto chi = json_io::rationals_from(require(in, "chi"));
    if (chi.size() != rep.v.size()) throw MalformedInput("chi must have one entry per vertex");
    auto r2 = reflect(rep, i, chi);
    auto out = result("reflect");
    out["rep"] = json_io::to_json(r2);
    out["chi"] = json_io::to_json(reflect_character(rep.quiver, i, chi));
    return out;
}

json cmd_pullback_check(const json& in, std::uint64_t seed) {
    auto t = json_io::typea_from(require(in, "typea"));
    auto x = typea_point(in, t, seed);
    int trials = in.contains("trials") ? in.at("trials").get<int>() : 5;
    if (trials < 1) throw MalformedInput("trials must be positive");
    auto out = result("pullback-check");
    out["trials"] = trials;
    out["pass"] = symplectic_pullback_check(x, t, trials, seed);
    return out;
}

json cmd_selftest(const std::string& filter, bool corrupt, std::uint64_t seed, bool& all) {
    AcceptanceOptions opts{filter, seed, corrupt};
    json crit = json::array();
    all = true;
    for (const auto& c : run_acceptance(opts)) {
        json items = json::array();
        bool pass = true;
        for (const auto& it : c.items) {
            items.push_back({{"tag", it.tag}, {"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
            pass = pass && it.pass;
        }
        all = all && pass;
        crit.push_back({{"criterion", c.criterion}, {"title", c.title}, {"pass", pass}, {"items", items}});
    }
    auto out = result("selftest");
    out["seed"] = seed;
    out["filter"] = filter;
    out["corrupt_table"] = corrupt;
    out["pass"] = all;
    out["criteria"] = crit;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quiver, McKay, SRA and type A computations"};
    app.require_subcommand(1);
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "seed for every sampler")->capture_default_str();

    std::string input;
    std::string family = "cyclic";
    int m = 2;
    int n = 1;
    auto add_input = [&](CLI::App* s) { s->add_option("--input", input, "input JSON file, - for stdin"); };
    auto add_group = [&](CLI::App* s) {
        s->add_option("--family", family, "cyclic, binary-dihedral, binary-tetrahedral, binary-octahedral, binary-icosahedral");
        s->add_option("--m", m, "order parameter of cyclic and binary dihedral groups");
    };

    auto* mckay = app.add_subcommand("mckay", "group, character table and McKay quiver");
    add_group(mckay);
    auto* cb = app.add_subcommand("cb-check", "Crawley-Boevey inequality or type A dominance scan");
    add_input(cb);
    auto* mult = app.add_subcommand("multiplicity", "weight multiplicity by Freudenthal's formula");
    add_input(mult);
    auto* sra = app.add_subcommand("sra-check", "SRA confluence and graded dimensions");
    add_group(sra);
    int max_degree = 4;
    sra->add_option("--n", n, "wreath rank");
    sra->add_option("--max-degree", max_degree, "largest degree for dimension counts");
    auto* com = app.add_subcommand("comoment-check", "quantum comoment on a framed quiver");
    add_input(com);
    auto* lift = app.add_subcommand("maffei-lift", "transversal lift of a type A point");
    add_input(lift);
    auto* verify = app.add_subcommand("maffei-verify", "check a transversal element");
    add_input(verify);
    auto* flag = app.add_subcommand("flag-iso", "flag of an e = 0 type A point");
    add_input(flag);
    auto* slo = app.add_subcommand("slodowy", "Slodowy slice of a nilpotent in Jordan form");
    long N = 0;
    std::vector<long> parts;
    slo->add_option("--N", N, "matrix size")->required();
    slo->add_option("--partition", parts, "Jordan block sizes")->required()->delimiter(',');
    auto* pm = app.add_subcommand("params-map", "upsilon or upsilon0 parameter map");
    std::string kind;
    pm->add_option("--kind", kind, "upsilon or upsilon0")->required();
    add_group(pm);
    int pm_n = 2;
    pm->add_option("--n", pm_n, "wreath rank for upsilon");
    auto* refl = app.add_subcommand("reflect", "reflection functor at one vertex");
    add_input(refl);
    auto* pb = app.add_subcommand("pullback-check", "symplectic pullback identity on tangent pairs");
    add_input(pb);
    auto* self = app.add_subcommand("selftest", "run the acceptance suite");
    std::string filter;
    bool corrupt = false;
    self->add_option("--filter", filter, "run only criteria whose tag contains this");
    self->add_flag("--corrupt-table", corrupt, "negative control: negate one character table entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        json out;
        int status = 0;
        if (*mckay) out = cmd_mckay(family, m);
        else if (*cb) out = cmd_cb_check(read_input(input));
        else if (*mult) out = cmd_multiplicity(read_input(input));
        else if (*sra) out = cmd_sra_check(family, m, n, max_degree);
        else if (*com) out = cmd_comoment_check(read_input(input), seed);
        else if (*lift) out = cmd_maffei_lift(read_input(input), seed);
        else if (*verify) out = cmd_maffei_verify(read_input(input));
        else if (*flag) out = cmd_flag_iso(read_input(input), seed);
        else if (*slo) out = cmd_slodowy(N, parts);
        else if (*pm) out = cmd_params_map(kind, family, m, pm_n);
        else if (*refl) out = cmd_reflect(read_input(input));
        else if (*pb) out = cmd_pullback_check(read_input(input), seed);
        else if (*self) {
            bool all = false;
            out = cmd_selftest(filter, corrupt, seed, all);
            status = all ? 0 : 3;
        }
        std::cout << out.dump(2) << "\n";
        return status;
    } catch (const DomainError& e) {
        std::cout << json_io::error_json(e.code(), e.detail()).dump(2) << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cout << json_io::error_json("MalformedInput", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cout << json_io::error_json("MalformedInput", e.what()).dump(2) << "\n";
        return 1;
    }
}
