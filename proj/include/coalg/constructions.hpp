#pragma once

#include "coalg/coalgebra.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coalg {

/// Δ_N = (id⊗d)Δ. The coderivation is dropped; shift bound doubles.
/// Throws PreconditionError when the spec has no coderivation.
CoalgebraSpec gelfand_dorfman(const CoalgebraSpec& spec);

/// Δ' = Δ - τΔ, with the graded flip when the spec is graded.
CoalgebraSpec antisymmetrize(const CoalgebraSpec& spec);

/// Kantor double C ⊕ C̄: originals even, barred copies odd. Needs an
/// ungraded differential spec; output is graded with no coderivation.
CoalgebraSpec kantor(const CoalgebraSpec& spec);

/// Rule whose factor `position` has been replaced by its image under the
/// rule `d` (an arity-1 rule), with optional bar flag on the new factor.
Rule compose_factor(const Rule& rule, int position, const Rule& d, bool bar_result = false);

/// A graded algebra A = ⊕_{n ≥ m} A_n with finite-dimensional components,
/// given by structure-constant callbacks.
struct GradedAlgebraSpec {
    using Coords = std::vector<std::pair<int, Scalar>>;

    std::string name;
    long min_degree = 0;
    /// Family name for each basis slot; the largest dimension used.
    std::vector<std::string> slot_names;
    std::function<int(long degree)> dimension;
    /// Product of basis (i, a) and (j, b), as coordinates in degree i + j.
    std::function<Coords(long i, int a, long j, int b)> multiply;
    /// Optional derivation of the given degree.
    std::optional<long> derivation_degree;
    std::function<Coords(long i, int a)> derivation;
};

/// Graded dual up to degree `horizon`: label index = degree - min_degree.
/// Δ is the transpose of multiplication, d the transpose of the derivation;
/// d of a label whose preimage degree exceeds the horizon points outside the
/// declared range and raises RangeError when used.
CoalgebraSpec graded_dual(const GradedAlgebraSpec& a, long horizon);

/// F[x] with ∂ = d/dx, graded by exponent.
GradedAlgebraSpec polynomial_algebra_with_derivative();
/// F[x]/(x^k) graded by exponent, no derivation.
GradedAlgebraSpec truncated_polynomial_algebra(int k);
/// One-dimensional algebra F·u with u·u = u in degree 0.
GradedAlgebraSpec idempotent_line();

struct BuiltinInfo {
    std::string name;
    std::string description;
    std::string lineage; // how the example is obtained from the others
};

const std::vector<BuiltinInfo>& builtin_catalog();

/// example1 … example9. Throws PreconditionError for unknown names.
CoalgebraSpec builtin(std::string_view name);
/// "fx-diff-algebra", "truncated-fx-3", "idempotent-line".
GradedAlgebraSpec builtin_algebra(std::string_view name);
const std::vector<BuiltinInfo>& builtin_algebra_catalog();

/// Compares Δ (and d, when either has one) on every label up to
/// range.max_index of `a`. Families must agree.
CheckReport equivalent_on(const CoalgebraSpec& a, const CoalgebraSpec& b, CheckRange range);

} // namespace coalg
