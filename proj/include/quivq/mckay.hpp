#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "quivq/quiver.hpp"

namespace quivq {

enum class Family { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct GroupSpec {
    Family family = Family::Cyclic;
    int m = 1;  // used by Cyclic and BinaryDihedral
};

std::string family_name(Family f);
/// Parses "cyclic", "binary-dihedral", "binary-tetrahedral", "binary-octahedral", "binary-icosahedral".
Family parse_family(const std::string& s);

/// A finite subgroup of SL_2 over a cyclotomic field, with conjugacy classes and the
/// irreducible characters N_0 (trivial), ..., N_r ordered by dimension.
struct KleinianGroup {
    GroupSpec spec;
    int conductor = 1;                      // field of the matrix entries
    std::vector<MatC> elements;             // elements[0] is the identity
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of;
    std::vector<std::vector<CycScalar>> char_table;  // [irrep][class]
    std::vector<long> dims;
    std::vector<std::string> irrep_labels;

    [[nodiscard]] std::size_t order() const { return elements.size(); }
    [[nodiscard]] std::string name() const;
    [[nodiscard]] std::string key(const MatC& g) const;
    /// Index of a group element; throws std::out_of_range if g is not in the group.
    [[nodiscard]] std::size_t index_of(const MatC& g) const;
    [[nodiscard]] std::size_t multiply(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::size_t inverse_of(std::size_t a) const;
    /// Character of the defining representation K^2 on each class.
    [[nodiscard]] std::vector<CycScalar> natural_character() const;
    /// Value of irreducible character i at element g.
    [[nodiscard]] const CycScalar& chi(std::size_t irrep, std::size_t element) const {
        return char_table[irrep][class_of[element]];
    }

    std::unordered_map<std::string, std::size_t> index;
};

/// Generates the group, its classes and its character table, then validates the table.
/// Throws DomainError("TableValidationFailed").
KleinianGroup build_group(const GroupSpec& spec);

/// Row and column orthogonality, sum of squared dimensions, class count and class sizes.
/// Throws DomainError("TableValidationFailed") with the failing check named.
void validate_table(const KleinianGroup& g);

/// <chi_{K^2} chi_i, chi_j>, which must be a nonnegative integer for every pair.
/// Throws DomainError("NonIntegralMultiplicity").
std::vector<std::vector<long>> mckay_matrix(const KleinianGroup& g);

struct McKayQuiver {
    Quiver quiver;  // undoubled, arrows oriented from lower to higher index
    DimVec delta;   // irreducible dimensions
    std::vector<std::vector<long>> multiplicities;
};

McKayQuiver mckay_quiver(const KleinianGroup& g);

/// Element of S_n x| Gamma^n, acting on L^{+n} by (g v)_{perm[j]} = gamma_j v_j.
struct WreathElement {
    std::vector<int> perm;
    std::vector<std::size_t> gammas;
    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

struct WreathGroup {
    int n = 1;
    const KleinianGroup* gamma = nullptr;

    [[nodiscard]] std::size_t order() const;
    [[nodiscard]] WreathElement identity() const;
    [[nodiscard]] WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
    [[nodiscard]] MatC matrix(const WreathElement& g) const;  // 2n x 2n
    /// Every element, in a fixed order starting with the identity. Throws if the order exceeds cap.
    [[nodiscard]] std::vector<WreathElement> enumerate(std::size_t cap = 20000) const;
};

enum class ReflectionClassKind { Sym, Gamma };

struct SymplecticReflection {
    WreathElement element;
    ReflectionClassKind kind = ReflectionClassKind::Gamma;
    std::size_t class_label = 0;  // index i >= 1 of the Gamma class S_i^0 (0 for Sym)
    MatC matrix;
    MatC projector;  // onto im(s - id) along ker(s - id)
};

struct ReflectionClass {
    ReflectionClassKind kind;
    std::size_t label;  // for Gamma classes: i in 1..l, numbering the nontrivial classes of Gamma
    std::vector<SymplecticReflection> members;
};

/// S_sym (present iff n > 1) followed by S_1, ..., S_l.
std::vector<ReflectionClass> symplectic_reflections(const WreathGroup& w);

/// Block symplectic form omega_0^{+n} with omega_0(e_1, e_2) = 1.
MatC symplectic_form(int n);

/// omega(pi x, pi y) for the projector stored on s.
CycScalar omega_s(const SymplecticReflection& s, const std::vector<CycScalar>& x, const std::vector<CycScalar>& y);

/// Projector onto im(s - id) along ker(s - id); requires the two to be complementary.
MatC reflection_projector(const MatC& s);

}  // namespace quivq
