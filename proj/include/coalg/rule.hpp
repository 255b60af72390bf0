#pragma once

#include "coalg/index_poly.hpp"
#include "coalg/label.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

/// Condition on the term variables: expr >= 0, or expr ≡ residue (mod modulus).
struct Guard {
    enum class Kind { NonNegative, Congruent };

    Kind kind = Kind::NonNegative;
    AffineIndex expr;
    long modulus = 1;
    long residue = 0;

    static Guard at_least(AffineIndex e, long bound) { return {Kind::NonNegative, e + (-bound), 1, 0}; }
    static Guard at_most(AffineIndex e, long bound) { return {Kind::NonNegative, e * -1 + bound, 1, 0}; }
    static Guard congruent(AffineIndex e, long modulus, long residue);

    bool holds(std::span<const long> values) const;
    Guard compose(std::span<const AffineIndex> images) const;
    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const Guard&, const Guard&) = default;
};

/// Summation variable ranging over lo..hi inclusive; bounds may use n and
/// earlier summation variables.
struct SumRange {
    std::string var;
    AffineIndex lo;
    AffineIndex hi;

    friend bool operator==(const SumRange&, const SumRange&) = default;
};

struct FactorExpr {
    FamilyKey family;
    AffineIndex index;

    friend bool operator==(const FactorExpr&, const FactorExpr&) = default;
};

/// One summand of a rule: Σ_{sums} coeff(n, i, ...) · F_1[idx_1] ⊗ ... ⊗ F_k[idx_k],
/// restricted to variable values satisfying every guard.
struct RuleTerm {
    std::vector<SumRange> sums;
    std::vector<Guard> guards;
    IndexPoly coeff = IndexPoly(Scalar(1));
    std::vector<FactorExpr> factors;

    /// "n" followed by the summation variable names.
    std::vector<std::string> var_names() const;
    std::size_t num_vars() const { return 1 + sums.size(); }

    friend bool operator==(const RuleTerm&, const RuleTerm&) = default;
};

struct FamilyRule {
    FamilyKey family;
    std::vector<RuleTerm> terms;
};

/// Per-family affine-index rule producing arity-`arity` tensors. Families
/// without an entry map to zero.
struct Rule {
    int arity = 2;
    std::vector<FamilyRule> families;

    const FamilyRule* find(const FamilyKey& key) const;
    FamilyRule& entry(const FamilyKey& key);
};

/// Calls emit(coeff, indices) for every nonzero instance of every term of
/// `rule` applied to the label with index n of `family`. `indices[k]` is the
/// index of factor k.
template <class Emit>
void expand_rule(const Rule& rule, const FamilyKey& family, long n, Emit&& emit);

namespace detail {

template <class Emit>
void expand_term(const RuleTerm& term, std::vector<long>& vals, std::size_t depth,
                 const std::vector<std::vector<const Guard*>>& guards_at, std::vector<long>& idx, Emit& emit)
{
    for (const Guard* g : guards_at[depth])
        if (!g->holds(vals))
            return;
    if (depth == term.sums.size()) {
        Scalar c = term.coeff.eval(vals);
        if (sgn(c) == 0)
            return;
        for (std::size_t f = 0; f < term.factors.size(); ++f)
            idx[f] = term.factors[f].index.eval(vals);
        emit(c, std::as_const(idx));
        return;
    }
    const SumRange& s = term.sums[depth];
    long lo = s.lo.eval(vals), hi = s.hi.eval(vals);
    for (long v = lo; v <= hi; ++v) {
        vals[depth + 1] = v;
        expand_term(term, vals, depth + 1, guards_at, idx, emit);
    }
}

} // namespace detail

/// Expands a single term at input index n.
template <class Emit>
void expand_term(const RuleTerm& term, long n, Emit&& emit)
{
    std::vector<long> vals(term.num_vars(), 0);
    vals[0] = n;
    // A guard is tested as soon as its highest variable is bound.
    std::vector<std::vector<const Guard*>> guards_at(term.num_vars());
    for (const Guard& g : term.guards)
        guards_at[static_cast<std::size_t>(std::max(0, g.expr.highest_var()))].push_back(&g);
    std::vector<long> idx(term.factors.size());
    detail::expand_term(term, vals, 0, guards_at, idx, emit);
}

template <class Emit>
void expand_rule(const Rule& rule, const FamilyKey& family, long n, Emit&& emit)
{
    const FamilyRule* fr = rule.find(family);
    if (!fr)
        return;
    for (const RuleTerm& term : fr->terms)
        expand_term(term, n, emit);
}

} // namespace coalg
