#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quivq/cyclotomic.hpp"
#include "quivq/matrix.hpp"
#include "quivq/mckay.hpp"
#include "quivq/quiver.hpp"

namespace quivq {

/// Commutative polynomial in the parameters h, c_1, ..., c_l (and k for wreath groups
/// with n > 1), variable 0 being h. Exponent vectors carry no trailing zeros.
class ParamPoly {
public:
    using Exp = std::vector<int>;

    ParamPoly() = default;
    ParamPoly(const CycScalar& c);  // NOLINT(google-explicit-constructor)
    ParamPoly(long c) : ParamPoly(CycScalar(c)) {}  // NOLINT(google-explicit-constructor)
    static ParamPoly var(std::size_t index);

    [[nodiscard]] const std::map<Exp, CycScalar>& terms() const { return t_; }
    [[nodiscard]] bool is_zero() const { return t_.empty(); }
    [[nodiscard]] CycScalar constant_term() const;
    /// Value with every variable specialised; missing trailing values count as 0.
    [[nodiscard]] CycScalar evaluate(const std::vector<CycScalar>& values) const;
    /// h -> -h.
    [[nodiscard]] ParamPoly negate_h() const;
    /// Weighted degree with every variable of degree 2; -1 for zero.
    [[nodiscard]] int degree() const;
    [[nodiscard]] std::string str(const std::vector<std::string>& names) const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
    friend ParamPoly operator-(const ParamPoly& a) { return ParamPoly() - a; }
    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

private:
    std::map<Exp, CycScalar> t_;
    void add(const Exp& e, const CycScalar& c);
};

/// (mono, grp): a nondecreasing word in basis indices of V followed by a group element id.
struct NCKey {
    std::vector<int> mono;
    std::size_t grp = 0;
    friend auto operator<=>(const NCKey&, const NCKey&) = default;
};

class NCElement {
public:
    NCElement() = default;
    static NCElement scalar(const ParamPoly& p);
    static NCElement generator(int index);
    static NCElement group(std::size_t g);
    static NCElement term(const ParamPoly& coeff, std::vector<int> mono, std::size_t grp);

    [[nodiscard]] const std::map<NCKey, ParamPoly>& terms() const { return t_; }
    [[nodiscard]] bool is_zero() const { return t_.empty(); }
    /// Largest word length, -1 for zero.
    [[nodiscard]] int degree() const;
    /// Every coefficient specialised at the given parameter values.
    [[nodiscard]] NCElement specialise(const std::vector<CycScalar>& values) const;
    /// Right multiplication of every group part by g (caller supplies the product table).
    [[nodiscard]] NCElement times_group(std::size_t g, const std::vector<std::vector<std::size_t>>& mul) const;

    void add(const NCKey& k, const ParamPoly& c);
    NCElement& operator+=(const NCElement& o);
    NCElement& operator-=(const NCElement& o);
    NCElement& operator*=(const ParamPoly& s);
    friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
    friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
    friend NCElement operator*(NCElement a, const ParamPoly& s) { return a *= s; }
    friend NCElement operator*(const ParamPoly& s, NCElement a) { return a *= s; }
    friend bool operator==(const NCElement&, const NCElement&) = default;

private:
    std::map<NCKey, ParamPoly> t_;
};

struct ReflectionData {
    std::size_t element = 0;  // group element id
    std::size_t param = 0;    // parameter variable index
    MatC omega_s;             // Gram matrix of pi^* omega in the Darboux basis
};

/// Homogenized Weyl algebra or symplectic reflection algebra over K[params], with basis
/// x_1 < ... < x_N < y_1 < ... < y_N of V, omega(x_i, y_i) = 1, group elements rightmost.
struct AlgebraCtx {
    enum class Mode { Weyl, SRA };

    Mode mode = Mode::Weyl;
    int dim = 0;  // 2N
    std::vector<std::string> basis_names;
    std::vector<std::string> param_names;  // h first
    MatC omega;                            // dim x dim Gram matrix

    std::vector<MatC> group_matrices;  // action on V; column a is g(v_a)
    std::vector<std::vector<std::size_t>> group_mul;
    std::vector<std::size_t> group_inv;
    std::vector<WreathElement> group_elements;  // SRA mode only
    std::vector<ReflectionData> reflections;

    /// rel[b * dim + a] for b > a: v_b v_a = v_a v_b + rel.
    std::vector<NCElement> rel;
    bool certified = false;

    [[nodiscard]] std::size_t group_order() const { return group_matrices.size(); }
    [[nodiscard]] std::size_t param_count() const { return param_names.size(); }
    /// Recomputes the relation table from omega and the reflection data; clears certification.
    void rebuild_relations();

    struct Cache {
        std::mutex mu;
        std::map<std::vector<int>, NCElement> normal;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();
};

AlgebraCtx make_weyl_ctx(int N);
/// SRA of the wreath product Gamma_n acting on L^{+n}; enumerates Gamma_n.
AlgebraCtx make_sra_ctx(const WreathGroup& w);

/// Normal form of an arbitrary word in the basis of V (no group part).
NCElement normalize_word(const AlgebraCtx& ctx, const std::vector<int>& word);
NCElement nc_mul(const AlgebraCtx& ctx, const NCElement& x, const NCElement& y);
NCElement commutator(const AlgebraCtx& ctx, const NCElement& x, const NCElement& y);
/// g(v_a) as an element of V, written as a sum of generators.
NCElement act_on_generator(const AlgebraCtx& ctx, std::size_t g, int a);

struct ConfluenceReport {
    bool pass = true;
    std::size_t triples_checked = 0;
    std::size_t group_overlaps_checked = 0;
    std::optional<std::vector<int>> witness_triple;                  // (c, b, a)
    std::optional<std::pair<std::size_t, std::pair<int, int>>> witness_group;  // (g, (b, a))
};

/// Resolves every overlap v_c v_b v_a (c > b > a) by rewriting first at the left and first
/// at the right, and every overlap g v_b v_a by pushing g through before and after the
/// rewrite. Sets ctx.certified on success. degree_cap bounds the triple degree (>= 3 checks all).
ConfluenceReport confluence_check(AlgebraCtx& ctx, int degree_cap = 3);

/// Number of normal-form monomials of V-degree d. Throws DomainError("ConfluenceNotCertified").
long graded_dimension(const AlgebraCtx& ctx, int d);

/// e = (1/|G|) sum g.
NCElement averaging_idempotent(const AlgebraCtx& ctx);
/// e x e y e.
NCElement spherical_product(const AlgebraCtx& ctx, const NCElement& x, const NCElement& y);
/// Dimension of span{ e m e : deg m = d } with all parameters set to 0.
long spherical_graded_dimension(const AlgebraCtx& ctx, int d);

/// Product-reversing involution fixing V with h -> -h. Weyl mode only.
NCElement parity_antiauto(const AlgebraCtx& ctx, const NCElement& x);

/// dim (S^d V)^G from the traces of powers of each element.
long molien_dim(const std::vector<MatC>& elements, int d);

/// Weyl algebra of R(DQ, v, w) = R(Q, v, w) + R(Q, v, w)^*: x-coordinates are the entries
/// of A_a and Gamma_i, y-coordinates the paired entries of B_a and Delta_i.
struct QuiverWeyl {
    AlgebraCtx ctx;
    FramedQuiver fq;
    DimVec v;
    /// For each basis index of V, the position in RepQ::coordinates().
    std::vector<std::size_t> rep_coordinate;
};

QuiverWeyl make_quiver_weyl(const FramedQuiver& fq, const DimVec& v);

/// Symmetrised quantisation of mu^*(xi) = sum_i tr(mu_i xi_i). Throws std::invalid_argument on shape mismatch.
NCElement quantum_comoment(const QuiverWeyl& qw, const std::vector<MatQ>& xi);

std::string to_string(const AlgebraCtx& ctx, const NCElement& x);

}  // namespace quivq
