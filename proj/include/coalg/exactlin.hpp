#pragma once

#include "coalg/sparse.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coalg {

/// Sum of two tensors of equal arity. Throws PreconditionError on mismatch.
FormalTensor add(const FormalTensor& a, const FormalTensor& b);
FormalTensor scale(const FormalTensor& a, const Scalar& s);

FormalTensor operator+(const FormalTensor& a, const FormalTensor& b);
FormalTensor operator-(const FormalTensor& a, const FormalTensor& b);
FormalTensor operator*(const Scalar& s, const FormalTensor& a);

/// a ⊗ b; arity is the sum of arities.
FormalTensor tensor(const FormalTensor& a, const FormalTensor& b);

/// Swaps factors `position` and `position + 1` (1-based) in every term.
/// When `graded`, a term picks up (-1)^(p*q) from the parities of the swapped
/// labels.
FormalTensor flip(const FormalTensor& t, int position, bool graded);

/// Koszul sign of the swap of two labels under a graded flip.
inline int koszul_sign(const Label& a, const Label& b) { return (a.parity & b.parity) ? -1 : 1; }

enum class Side { Left, Right };

/// Writes an arity-2 tensor as Σ a_i ⊗ b_i, returned as pairs (a_i, b_i) in
/// tensor order. The factors on the chosen side are linearly independent
/// (in fact both sides are), so the opposite-side components lie in every
/// subspace W with t ∈ W ⊗ W. Pairs are ordered by the pivot label of the
/// opposite-side component.
std::vector<std::pair<FormalVector, FormalVector>> extract_components(const FormalTensor& t,
                                                                      Side side);

/// Subspace kept in reduced row echelon form. Each basis vector has its pivot
/// (first label in canonical order) normalized to 1, and no pivot label
/// occurs in any other basis vector.
class EchelonBasis {
public:
    EchelonBasis() = default;

    /// Inserts v; returns false when v was already in the span.
    bool insert(const FormalVector& v);

    /// v minus its projection onto the span along the pivots; zero iff v is in the span.
    FormalVector reduce(const FormalVector& v) const;
    bool contains(const FormalVector& v) const { return reduce(v).is_zero(); }

    /// Coordinates of v with respect to vectors(), if v lies in the span.
    std::optional<std::vector<Scalar>> coordinates(const FormalVector& v) const;

    std::size_t dimension() const noexcept { return rows_.size(); }
    const std::vector<FormalVector>& vectors() const noexcept { return rows_; }
    std::vector<Label> pivots() const;
    bool contains_label(const Label& l) const { return contains(FormalVector::basis(l)); }

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) { return a.rows_ == b.rows_; }

private:
    // Sorted by pivot label.
    std::vector<FormalVector> rows_;
};

/// Coordinates of v in the given linearly independent family, or nullopt when
/// v is outside the span.
std::optional<std::vector<Scalar>> membership(const FormalVector& v,
                                              std::span<const FormalVector> basis);

bool linearly_independent(std::span<const FormalVector> vectors);

} // namespace coalg
