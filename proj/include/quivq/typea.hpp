#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quivq/jet.hpp"
#include "quivq/matrix.hpp"
#include "quivq/quiver.hpp"

namespace quivq {

/// Type A data: the quiver is A_{n-1} with vertices 1..n-1 stored as 0..n-2, arrow k is
/// A_{k+1} : V_{k+1} -> V_{k+2}, and vertex k carries the framing D_{k+1} of dimension d_{k+1}.
struct TypeAData {
    int n = 0;
    long N = 0;
    std::vector<long> r;        // r_1..r_n
    std::vector<long> d;        // d_1..d_{n-1}
    std::vector<long> v;        // v_1..v_{n-1}
    std::vector<long> tilde_v;  // dim of V_i + D_i'
    std::vector<long> tilde_d;  // (N, 0, ..., 0)

    [[nodiscard]] Quiver quiver() const;
    [[nodiscard]] FramedQuiver framed_quiver() const;
    [[nodiscard]] bool is_e0() const;
};

/// v_i = sum_{j>i} r_j - sum_{j>i} (j-i) d_j. Throws DomainError("NonPositiveDimension"),
/// std::invalid_argument if the sums do not match N.
TypeAData build_typea(int n, long N, const std::vector<long>& r, const std::vector<long>& d);

enum class BlockKind { T, S };

long grad_degree(int i, int j, int h, int jp, int hp, BlockKind kind);

/// Summand of an expanded space: V_i, or the copy D_j^{(h)}.
struct Summand {
    bool is_v = false;
    int j = 0;
    int h = 0;
    std::size_t dim = 0;
    std::size_t offset = 0;
};

/// Decomposition of V~_0 = D_0' and V~_i = V_i + D_i' for i = 1..n-1.
struct TypeALayout {
    std::vector<std::vector<Summand>> spaces;
    std::vector<std::size_t> dims;

    /// Weight of [e_i, f_i] on the summand: j - i + 1 - 2h on D_j^{(h)}, 0 on V_i.
    [[nodiscard]] long weight(int i, const Summand& s) const;
    /// Offset of D_i' inside V~_i.
    [[nodiscard]] std::size_t d_prime_offset(int i) const;
};

TypeALayout make_layout(const TypeAData& data);

struct Sl2Triple {
    MatQ e;
    MatQ h;
    MatQ f;
};

bool sl2_relations_hold(const Sl2Triple& t);

/// The triple (e_i, [e_i, f_i], f_i) on D_i', in the summand order of make_layout.
Sl2Triple sl2_for_blocks(const TypeAData& data, int i);

/// Role of a block in a transversal element.
enum class BlockRole { Zero, Identity, Matched, Free };

struct BlockInfo {
    BlockRole role = BlockRole::Zero;
    std::string name;
    long degree = 0;  // homogeneity degree in x
};

/// At[i] = A~_i : V~_i -> V~_{i+1}, Bt[i] = B~_i : V~_{i+1} -> V~_i for i = 0..n-2.
template <class T>
struct BlockRep {
    TypeAData data;
    std::vector<Matrix<T>> At;
    std::vector<Matrix<T>> Bt;
};

using BlockRepQ = BlockRep<Rational>;
using BlockRepJ = BlockRep<JetQ>;

/// Classification of the block of A~_i (is_a) or B~_i from summand `src` to summand `dst`.
BlockInfo block_info(const TypeALayout& layout, bool is_a, int i, std::size_t dst, std::size_t src);

template <class T>
Matrix<T> get_block(const TypeALayout& layout, const BlockRep<T>& x, bool is_a, int i, std::size_t dst,
                    std::size_t src);

struct VerifyItem {
    std::string name;
    bool pass = true;
};

struct VerifyReport {
    bool pass = true;
    std::vector<VerifyItem> items;
    [[nodiscard]] std::vector<std::string> failures() const;
};

/// Itemized check of transversality, the sl2 bracket relation, the expanded moment map and
/// the matching with x. Pass nullptr for x to skip matching.
template <class T>
VerifyReport maffei_verify(const BlockRep<T>& xt, const QuiverRep<T>* x);

struct LiftStats {
    std::size_t stages = 0;
    std::size_t unknowns = 0;
    std::size_t underdetermined_stages = 0;
};

/// The transversal lift of x in Lambda_0, solved stage by stage in the homogeneity degree.
/// Throws DomainError("PreconditionMomentMap") or DomainError("LiftInconsistent").
template <class T>
BlockRep<T> maffei_lift(const QuiverRep<T>& x, const TypeAData& data, LiftStats* stats = nullptr);

/// Forced identity blocks only.
BlockRepQ canonical_frame(const TypeAData& data);

struct FlagIso {
    MatQ endomorphism;           // Delta_1 Gamma_1
    std::vector<MatQ> flag;      // basis columns of F_0 = 0, F_1, ..., F_n = K^N
};

/// Throws DomainError("FlagDimensionMismatch") or std::invalid_argument if d != (N, 0, ...).
FlagIso flag_iso_e0(const RepQ& x, const TypeAData& data);

struct PullbackSides {
    Rational expanded;  // beta~(dPhi v1, dPhi v2)
    Rational original;  // beta(v1, v2)
};

/// Both sides of the pullback identity for one tangent pair (coordinates of RepQ).
PullbackSides pullback_pair(const RepQ& x, const TypeAData& data, const std::vector<Rational>& v1,
                            const std::vector<Rational>& v2);

/// Random tangent pairs at x; true iff every pair satisfies the identity exactly.
bool symplectic_pullback_check(const RepQ& x, const TypeAData& data, int trials, std::uint64_t seed);

/// t . x~ = t^{-1} gamma(t) x~: the block of degree m is scaled by t^{-m}.
BlockRepQ kazhdan_act(const BlockRepQ& xt, const Rational& t);

/// t . x~ is transversal and matches t^{-1} x.
bool kazhdan_action_check(const BlockRepQ& xt, const RepQ& x, const Rational& t);

struct SlodowySlice {
    long N = 0;
    std::vector<long> jordan_type;
    Sl2Triple triple;
    std::vector<MatQ> slice_basis;
    std::vector<long> kazhdan_degrees;
};

/// Throws DomainError("InvalidPartition").
SlodowySlice slodowy_slice(long N, const std::vector<long>& jordan_type);

/// The sl2 triple with e in Jordan form for the given block sizes.
Sl2Triple jordan_triple(const std::vector<long>& blocks);

}  // namespace quivq
