#pragma once

#include "coalg/check_report.hpp"
#include "coalg/exactlin.hpp"
#include "coalg/rule.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coalg {

struct FamilyDecl {
    FamilyKey key;
    int parity = 0;
    long lo = 0;
    std::optional<long> hi; // nullopt: infinite family [lo, ∞)

    bool contains(long index) const { return index >= lo && (!hi || index <= *hi); }
    bool singleton() const { return hi && *hi == lo; }
};

/// Index window for range checks: every label whose index is at most
/// max_index (clamped to each family's declaration).
struct CheckRange {
    long max_index = 0;
};

/// Immutable description of a (differential, possibly graded) coalgebra on a
/// countable basis. The comultiplication and the optional coderivation are
/// affine-index rules; the shift bound s promises that every produced factor
/// index is at most n + s and that every produced term has index sum at
/// least n - s.
class CoalgebraSpec {
public:
    CoalgebraSpec(std::string name, std::vector<FamilyDecl> families, Rule delta,
                  std::optional<Rule> coderivation, long shift_bound, bool graded);

    const std::string& name() const noexcept { return name_; }
    const std::vector<FamilyDecl>& families() const noexcept { return families_; }
    const Rule& delta_rule() const noexcept { return delta_; }
    const std::optional<Rule>& coderivation_rule() const noexcept { return coderivation_; }
    long shift_bound() const noexcept { return shift_bound_; }
    bool graded() const noexcept { return graded_; }
    bool differential() const noexcept { return coderivation_.has_value(); }

    /// Throws RangeError for unknown families.
    const FamilyDecl& family(const FamilyKey& key) const;
    const FamilyDecl* find_family(const FamilyKey& key) const;

    /// Builds a validated label (parity filled in from the declaration).
    Label label(const FamilyKey& key, long index) const;
    Label label(std::string_view family, long index, bool bar = false) const;

    /// Every label with index ≤ max_index, in canonical order. Throws
    /// RangeError when no family reaches max_index.
    std::vector<Label> labels_up_to(long max_index) const;

    /// Largest declared index, nullopt when some family is infinite.
    std::optional<long> max_declared_index() const;

    CoalgebraSpec renamed(std::string name) const;
    CoalgebraSpec with_shift_bound(long s) const;
    CoalgebraSpec without_coderivation() const;
    CoalgebraSpec with_coderivation(Rule d) const;
    CoalgebraSpec with_grading(bool graded) const;

    /// Display forms that drop the index of singleton families ("e", "~e").
    std::string format(const Label& l) const;
    std::string format(const FormalVector& v) const;
    std::string format(const FormalTensor& t) const;

private:
    void validate() const;

    std::string name_;
    std::vector<FamilyDecl> families_;
    Rule delta_;
    std::optional<Rule> coderivation_;
    long shift_bound_;
    bool graded_;
};

/// Δ(l), exact and canonical. Throws RangeError when l or a produced index is
/// outside the declared family ranges.
FormalTensor delta(const CoalgebraSpec& spec, const Label& l);
FormalTensor delta_linear(const CoalgebraSpec& spec, const FormalVector& v);

/// d(l) and its linear extension. Throws PreconditionError when the spec has
/// no coderivation.
FormalVector apply_d(const CoalgebraSpec& spec, const Label& l);
FormalVector apply_d(const CoalgebraSpec& spec, const FormalVector& v);

/// Applies Δ to factor `position` (0-based) of every term; arity grows by one.
/// With `koszul`, each produced pair c1⊗c2 carries (-1)^{|c1||c2|}.
FormalTensor apply_delta_at(const CoalgebraSpec& spec, const FormalTensor& t, int position,
                            bool koszul = false);
/// Applies d^power to factor `position` (0-based) of every term.
FormalTensor apply_d_at(const CoalgebraSpec& spec, const FormalTensor& t, int position, int power = 1);

/// Residual Δ(d(b)) - (d⊗id + id⊗d)Δ(b) per label; pass iff all vanish.
CheckReport coderivation_check(const CoalgebraSpec& spec, CheckRange range);

/// Residual Δ(b) - τΔ(b) per label (τ graded when requested).
CheckReport cocommutativity_check(const CoalgebraSpec& spec, CheckRange range, bool graded);

/// Checks the declared shift bound on every label in range, for Δ and d.
CheckReport validate_shift_bound(const CoalgebraSpec& spec, CheckRange range);

/// Applies `residual` to every label in range and collects nonzero results.
template <class Residual>
CheckReport run_label_check(const CoalgebraSpec& spec, std::string name, CheckRange range, Residual&& residual)
{
    CheckReport report = CheckReport::started(std::move(name), spec, range.max_index);
    for (const Label& l : spec.labels_up_to(range.max_index)) {
        FormalTensor r = residual(l);
        ++report.labels_checked;
        if (!r.is_zero())
            report.add_witness(Witness{spec.format(l), spec.format(r), {}});
    }
    report.finish();
    return report;
}

} // namespace coalg
