#pragma once

#include "coalg/coalgebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coalg {

/// Parity constraint on one argument slot of an identity.
enum class SlotParity { Even, Odd, Any };

/// Node of a nonassociative monomial: either a leaf (variable slot with a
/// derivative order) or a product of two subtrees.
struct NANode;
using NATree = std::shared_ptr<const NANode>;

struct NANode {
    int slot = 0;       // 1-based; 0 for internal nodes
    int derivative = 0; // leaves only
    NATree left;
    NATree right;

    bool is_leaf() const noexcept { return slot != 0; }
};

NATree na_leaf(int slot, int derivative = 0);
NATree na_product(NATree left, NATree right);

/// Slots in left-to-right leaf order.
std::vector<int> leaf_order(const NATree& t);
std::size_t leaf_count(const NATree& t);
/// "(x1 x2) x3'" style rendering; also the canonical key for merging.
std::string to_string(const NATree& t);

/// How graded specs permute factors back to slot order.
enum class SignMode {
    Auto,   // graded flips iff the spec is graded
    Plain,  // ungraded flips, no Koszul signs
    Graded, // graded flips
};

/// Free nonassociative polynomial: rational combination of monomials over
/// slots 1..arity, with a parity signature.
class NAPoly {
public:
    using Term = std::pair<Scalar, NATree>;

    NAPoly() = default;
    explicit NAPoly(std::vector<Term> terms, SignMode signs = SignMode::Auto);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    int arity() const noexcept { return arity_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Every monomial uses each slot 1..arity exactly once.
    bool multilinear() const;

    const std::vector<SlotParity>& signature() const noexcept { return signature_; }
    /// Sets the signature; "eo" style, one character per slot (e, o, or *).
    NAPoly with_signature(std::string_view sig) const;
    NAPoly with_signature(std::vector<SlotParity> sig) const;

    SignMode sign_mode() const noexcept { return signs_; }
    NAPoly with_sign_mode(SignMode m) const;

    /// Rename slots: slot k becomes mapping[k-1].
    NAPoly relabel(const std::vector<int>& mapping) const;

    friend NAPoly operator+(const NAPoly& a, const NAPoly& b);
    friend NAPoly operator-(const NAPoly& a, const NAPoly& b);
    friend NAPoly operator*(const Scalar& s, const NAPoly& a);
    /// Nonassociative product of two polynomials, distributed over terms.
    friend NAPoly product(const NAPoly& a, const NAPoly& b);

    friend bool operator==(const NAPoly& a, const NAPoly& b);

private:
    void canonicalize();

    std::vector<Term> terms_;
    int arity_ = 0;
    std::vector<SlotParity> signature_;
    SignMode signs_ = SignMode::Auto;
};

std::string to_string(const NAPoly& p);
std::string signature_string(const std::vector<SlotParity>& sig);

NAPoly na_var(int slot, int derivative = 0);
NAPoly commutator(const NAPoly& a, const NAPoly& b);
NAPoly associator(const NAPoly& a, const NAPoly& b, const NAPoly& c);

/// Elementary step of a coidentity map acting on one tensor factor.
struct CoOp {
    enum class Kind { Delta, Derive, Flip, Project };

    Kind kind;
    int position;    // 0-based factor position; for Flip, swaps position and position+1
    int amount = 1;  // derivative power for Derive, parity for Project
};

/// Options that fix how identities become coidentities.
struct TranslateOptions {
    /// Use graded flips (Koszul signs from label parities) when permuting
    /// factors back to slot order.
    bool graded = false;
    /// Alternative pairing convention: every Δ application contributes
    /// (-1)^{|c1||c2|}. Off by default (plain pairing without signs).
    bool koszul_pairing = false;
};

/// Linear operator C → C^{⊗k}, stored as a rational combination of
/// composites of Δ, d^m, flips, and parity projections.
class CoidentityMap {
public:
    using Branch = std::pair<Scalar, std::vector<CoOp>>;

    CoidentityMap(int arity, std::vector<Branch> branches, TranslateOptions options);

    int arity() const noexcept { return arity_; }
    const std::vector<Branch>& branches() const noexcept { return branches_; }
    const TranslateOptions& options() const noexcept { return options_; }

    FormalTensor apply(const CoalgebraSpec& spec, const Label& b) const;

    /// Operator notation, e.g. "(Δ⊗id)Δ - (id⊗τ)(Δ⊗id)Δ".
    std::string to_string() const;

private:
    int arity_;
    std::vector<Branch> branches_;
    TranslateOptions options_;
};

/// Builds Φ_p with (α_1⊗…⊗α_k)(Φ_p(c)) = p(α_1,…,α_k)(c) in the dual
/// algebra. Throws PreconditionError for non-multilinear input.
CoidentityMap translate(const NAPoly& p, TranslateOptions options);

/// Translation options for checking p on spec: graded flips follow the sign
/// mode of p and the grading of the spec.
TranslateOptions options_for(const CoalgebraSpec& spec, const NAPoly& p, bool koszul_pairing = false);

/// Pass iff Φ_p(b) = 0 for every label b in range.
CheckReport check_identity(const CoalgebraSpec& spec, const NAPoly& p, CheckRange range,
                           bool koszul_pairing = false, std::string name = {});

/// Full multilinearization of an ungraded homogeneous polynomial. Variables
/// are renumbered by first appearance; a variable of degree d becomes d
/// consecutive fresh slots.
NAPoly linearize(const NAPoly& p);

/// Substitutes slot k by the (single-leaf) variable mapping[k-1]; the inverse
/// direction of linearize, used to recover the original up to scaling.
NAPoly substitute_slots(const NAPoly& p, const std::vector<int>& mapping);

struct CatalogEntry {
    std::string name;
    std::string description;
    NAPoly poly;
};

/// Named library of multilinear identities.
const std::vector<CatalogEntry>& builtin_identities();
/// Throws PreconditionError for unknown names.
const CatalogEntry& lookup_identity(std::string_view name);

/// Parses the identity mini-language: fully parenthesized products of
/// x1..x9 with optional primes, [a,b] commutators, (a,b,c) associators,
/// rational coefficients, + and -. Throws ParseError with a column.
NAPoly parse_identity(std::string_view text);

/// "ee", "eo*o" → slot parities.
std::vector<SlotParity> parse_signature(std::string_view sig);

} // namespace coalg
