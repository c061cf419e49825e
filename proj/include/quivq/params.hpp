#pragma once

#include <string>
#include <vector>

#include "quivq/cyclotomic.hpp"
#include "quivq/matrix.hpp"
#include "quivq/mckay.hpp"
#include "quivq/quiver.hpp"

namespace quivq {

/// Coordinate spaces for parameters. Vectors always list h first.
struct ParamSpace {
    enum class Kind { SRAWreath, SRAKlein, ZHat, ZHat0, AStar };

    Kind kind = Kind::ZHat;
    int r = 0;                    // number of nontrivial classes, or of nonzero vertices
    std::vector<std::string> labels;

    [[nodiscard]] std::size_t dim() const { return labels.size(); }
    [[nodiscard]] std::string kind_name() const;

    /// h, c_1..c_l, k
    static ParamSpace sra_wreath(int l);
    /// h, c_1..c_r
    static ParamSpace sra_klein(int r);
    /// h, eps_0..eps_r
    static ParamSpace zhat(int r);
    /// h, eps_0..eps_r, taken modulo sum delta_i eps_i; canonical coordinates satisfy sum delta_i a_i = 0
    static ParamSpace zhat0(int r);
    /// eps_1..eps_{n-1}
    static ParamSpace astar(int n);
};

/// Linear map between parameter spaces; column j is the image of source basis vector j.
/// `inverse` maps back, and inverse * matrix = id has been checked when verified is set.
struct ParamMap {
    ParamSpace source;
    ParamSpace target;
    MatC matrix;
    MatC inverse;
    bool verified = false;

    [[nodiscard]] std::vector<CycScalar> apply(const std::vector<CycScalar>& x) const;
};

/// tr_{N_i} c as a vector over (h, c_1..c_l).
std::vector<std::vector<CycScalar>> class_traces(const KleinianGroup& g);

/// upsilon for Gamma_n, n > 1: the inverse of h -> h, eps_0 -> tr_{N_0} c + |G| k - |G| h / 2,
/// eps_i -> tr_{N_i} c. Throws DomainError("Unsupported") for trivial Gamma or n < 2, and
/// DomainError("NotInvertible").
ParamMap build_upsilon(const KleinianGroup& g, int n);

/// upsilon_0 for n = 1: the inverse of h -> h, eps_0 -> tr_{N_0} c - |G| h, eps_i -> tr_{N_i} c,
/// with values in canonical ZHat0 coordinates. Throws DomainError("RelationViolated").
ParamMap build_upsilon0(const KleinianGroup& g);

/// Image of eps_0 under the inverse-direction map of upsilon (wreath) or upsilon_0 (n = 1).
std::vector<CycScalar> eps0_image(const KleinianGroup& g, bool wreath);

/// Canonical ZHat0 representative of (h, a_0..a_r): subtracts t * delta so that sum delta_i a_i = 0.
std::vector<Rational> canonical_zhat0(const std::vector<Rational>& x, const DimVec& delta);

/// chi_i = lambda_i for i >= 1 and chi_0 = -sum delta_i lambda_i; lambda lists lambda_1..lambda_r.
std::vector<Rational> hstar_to_z0(const std::vector<Rational>& lambda, const DimVec& delta);

/// eps_i coefficient sum_{j <= i} r_j x_j for i = 1..n-1. Throws DomainError("NonTraceZero").
std::vector<Rational> a_to_zstar(const std::vector<Rational>& x, const std::vector<long>& r);

/// Simple reflections s_i (i in 1..r, applied right to left as in a product w = s_{w0} s_{w1} ...)
/// on chi = (h, chi_0..chi_r) of the affine quiver q with imaginary root delta: chi = chi_0' + t delta
/// with chi_0' orthogonal to delta, s_i acts contragrediently on chi_0' and fixes delta and h.
/// With rho_shift the dot action s . chi = s(chi + rho) - rho is used instead.
/// Throws std::out_of_range for an index outside 1..r.
std::vector<Rational> weyl_act(const Quiver& q, const DimVec& delta, const std::vector<int>& word,
                               const std::vector<Rational>& chi, bool rho_shift = false);

/// rho in z_0: chi_i = 1 for i >= 1 and chi_0 = -sum_{i>=1} delta_i.
std::vector<Rational> rho_z0(const DimVec& delta);

/// chi_0' + t delta -> chi_0' - t delta, h fixed.
std::vector<Rational> sigma_flip(const std::vector<Rational>& chi, const DimVec& delta);

}  // namespace quivq
