#include "coalg/coalgebra.hpp"

#include <algorithm>
#include <set>

namespace coalg {

CoalgebraSpec::CoalgebraSpec(std::string name, std::vector<FamilyDecl> families, Rule delta,
                             std::optional<Rule> coderivation, long shift_bound, bool graded)
    : name_(std::move(name)), families_(std::move(families)), delta_(std::move(delta)),
      coderivation_(std::move(coderivation)), shift_bound_(shift_bound), graded_(graded)
{
    std::sort(families_.begin(), families_.end(),
              [](const FamilyDecl& a, const FamilyDecl& b) { return a.key < b.key; });
    validate();
}

void CoalgebraSpec::validate() const
{
    std::set<FamilyKey> seen;
    for (const auto& f : families_) {
        if (!seen.insert(f.key).second)
            throw PreconditionError("duplicate family '" + to_string(f.key) + "'");
        if (f.parity != 0 && f.parity != 1)
            throw PreconditionError("family '" + to_string(f.key) + "' has parity other than 0/1");
        if (f.lo < 0 || (f.hi && *f.hi < f.lo))
            throw PreconditionError("family '" + to_string(f.key) + "' has an invalid range");
    }
    if (shift_bound_ < 0)
        throw PreconditionError("shift bound must be non-negative");
    auto check_rule = [&](const Rule& r, int arity, const char* what) {
        if (r.arity != arity)
            throw PreconditionError(std::string(what) + " rule must have arity " + std::to_string(arity));
        for (const auto& fr : r.families) {
            if (!find_family(fr.family))
                throw PreconditionError(std::string(what) + " rule for undeclared family '" +
                                        to_string(fr.family) + "'");
            for (const auto& term : fr.terms) {
                if (static_cast<int>(term.factors.size()) != arity)
                    throw PreconditionError(std::string(what) + " term for '" + to_string(fr.family) +
                                            "' has the wrong number of factors");
                for (const auto& fac : term.factors)
                    if (!find_family(fac.family))
                        throw PreconditionError(std::string(what) + " term refers to undeclared family '" +
                                                to_string(fac.family) + "'");
            }
        }
    };
    check_rule(delta_, 2, "delta");
    if (coderivation_)
        check_rule(*coderivation_, 1, "coderivation");
}

const FamilyDecl* CoalgebraSpec::find_family(const FamilyKey& key) const
{
    for (const auto& f : families_)
        if (f.key == key)
            return &f;
    return nullptr;
}

const FamilyDecl& CoalgebraSpec::family(const FamilyKey& key) const
{
    if (const FamilyDecl* f = find_family(key))
        return *f;
    throw RangeError("unknown family '" + to_string(key) + "' in spec '" + name_ + "'");
}

Label CoalgebraSpec::label(const FamilyKey& key, long index) const
{
    const FamilyDecl& f = family(key);
    if (!f.contains(index))
        throw RangeError("label " + to_string(key) + ":" + std::to_string(index) + " is outside the range of family '" +
                         to_string(key) + "'");
    return Label(key, index, f.parity);
}

Label CoalgebraSpec::label(std::string_view family, long index, bool bar) const
{
    return label(FamilyKey{Symbol(family), bar}, index);
}

std::optional<long> CoalgebraSpec::max_declared_index() const
{
    long m = 0;
    for (const auto& f : families_) {
        if (!f.hi)
            return std::nullopt;
        m = std::max(m, *f.hi);
    }
    return m;
}

std::vector<Label> CoalgebraSpec::labels_up_to(long max_index) const
{
    if (auto m = max_declared_index(); m && max_index > *m)
        throw RangeError("range " + std::to_string(max_index) + " exceeds the declared families of '" + name_ +
                         "' (largest index " + std::to_string(*m) + ")");
    std::vector<Label> out;
    for (const auto& f : families_) {
        long hi = f.hi ? std::min(*f.hi, max_index) : max_index;
        for (long i = f.lo; i <= hi; ++i)
            out.emplace_back(f.key, i, f.parity);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CoalgebraSpec CoalgebraSpec::renamed(std::string name) const
{
    CoalgebraSpec s = *this;
    s.name_ = std::move(name);
    return s;
}

CoalgebraSpec CoalgebraSpec::with_shift_bound(long s) const
{
    return CoalgebraSpec(name_, families_, delta_, coderivation_, s, graded_);
}

CoalgebraSpec CoalgebraSpec::without_coderivation() const
{
    return CoalgebraSpec(name_, families_, delta_, std::nullopt, shift_bound_, graded_);
}

CoalgebraSpec CoalgebraSpec::with_coderivation(Rule d) const
{
    return CoalgebraSpec(name_, families_, delta_, std::move(d), shift_bound_, graded_);
}

CoalgebraSpec CoalgebraSpec::with_grading(bool graded) const
{
    return CoalgebraSpec(name_, families_, delta_, coderivation_, shift_bound_, graded);
}

std::string CoalgebraSpec::format(const Label& l) const
{
    const FamilyDecl* f = find_family(l.family);
    if (f && f->singleton())
        return to_string(l.family);
    return to_string(l);
}

namespace {

template <class Key, class Fmt>
std::string format_terms(const Combination<Key>& c, Fmt fmt)
{
    if (c.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : c) {
        Scalar mag = abs(coeff);
        out += first ? (sgn(coeff) < 0 ? "-" : "") : (sgn(coeff) < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            out += to_string(mag) + "*";
        out += fmt(key);
    }
    return out;
}

} // namespace

std::string CoalgebraSpec::format(const FormalVector& v) const
{
    return format_terms(v, [&](const Label& l) { return format(l); });
}

std::string CoalgebraSpec::format(const FormalTensor& t) const
{
    return format_terms(t.body(), [&](const TensorKey& key) {
        std::string s;
        for (std::size_t i = 0; i < key.size(); ++i)
            s += (i ? "⊗" : "") + format(key[i]);
        return s;
    });
}

namespace {

void require_in_range(const CoalgebraSpec& spec, const Label& l)
{
    if (!spec.family(l.family).contains(l.index))
        throw RangeError("label " + to_string(l) + " is outside the range of its family");
}

} // namespace

FormalTensor delta(const CoalgebraSpec& spec, const Label& l)
{
    require_in_range(spec, l);
    const FamilyRule* fr = spec.delta_rule().find(l.family);
    if (!fr)
        return FormalTensor(2);
    std::vector<FormalTensor::Term> raw;
    for (const RuleTerm& term : fr->terms) {
        const FamilyDecl* targets[2] = {&spec.family(term.factors[0].family), &spec.family(term.factors[1].family)};
        expand_term(term, l.index, [&](const Scalar& c, const std::vector<long>& idx) {
            TensorKey key;
            key.reserve(2);
            for (std::size_t f = 0; f < 2; ++f) {
                if (!targets[f]->contains(idx[f]))
                    throw RangeError("delta(" + spec.format(l) + ") produces " + to_string(targets[f]->key) + ":" +
                                     std::to_string(idx[f]) + ", outside the declared range of that family");
                key.emplace_back(targets[f]->key, idx[f], targets[f]->parity);
            }
            raw.emplace_back(std::move(key), c);
        });
    }
    return FormalTensor::from_terms(2, std::move(raw));
}

FormalTensor delta_linear(const CoalgebraSpec& spec, const FormalVector& v)
{
    TermCollector<TensorKey> acc;
    for (const auto& [l, c] : v)
        acc.add(delta(spec, l).body(), c);
    return FormalTensor(2, acc.finish());
}

FormalVector apply_d(const CoalgebraSpec& spec, const Label& l)
{
    if (!spec.differential())
        throw PreconditionError("spec '" + spec.name() + "' has no coderivation");
    const Rule& rule = *spec.coderivation_rule();
    require_in_range(spec, l);
    const FamilyRule* fr = rule.find(l.family);
    if (!fr)
        return {};
    std::vector<FormalVector::Term> raw;
    for (const RuleTerm& term : fr->terms) {
        const FamilyDecl& target = spec.family(term.factors.at(0).family);
        expand_term(term, l.index, [&](const Scalar& c, const std::vector<long>& idx) {
            if (!target.contains(idx[0]))
                throw RangeError("d(" + spec.format(l) + ") produces " + to_string(target.key) + ":" +
                                 std::to_string(idx[0]) + ", outside the declared range of that family");
            raw.emplace_back(Label(target.key, idx[0], target.parity), c);
        });
    }
    return FormalVector::from_terms(std::move(raw));
}

FormalVector apply_d(const CoalgebraSpec& spec, const FormalVector& v)
{
    TermCollector<Label> acc;
    for (const auto& [l, c] : v)
        acc.add(apply_d(spec, l), c);
    return acc.finish();
}

FormalTensor apply_delta_at(const CoalgebraSpec& spec, const FormalTensor& t, int position, bool koszul)
{
    if (position < 0 || position >= t.arity())
        throw PreconditionError("delta position out of range");
    const auto p = static_cast<std::size_t>(position);
    std::vector<FormalTensor::Term> raw;
    for (const auto& [key, c] : t.terms()) {
        FormalTensor d = delta(spec, key[p]);
        for (const auto& [dk, dc] : d.terms()) {
            TensorKey k;
            k.reserve(key.size() + 1);
            k.insert(k.end(), key.begin(), key.begin() + position);
            k.insert(k.end(), dk.begin(), dk.end());
            k.insert(k.end(), key.begin() + position + 1, key.end());
            Scalar coeff = c * dc;
            if (koszul && koszul_sign(dk[0], dk[1]) < 0)
                coeff = -coeff;
            raw.emplace_back(std::move(k), std::move(coeff));
        }
    }
    return FormalTensor::from_terms(t.arity() + 1, std::move(raw));
}

FormalTensor apply_d_at(const CoalgebraSpec& spec, const FormalTensor& t, int position, int power)
{
    if (position < 0 || position >= t.arity())
        throw PreconditionError("derivation position out of range");
    const auto p = static_cast<std::size_t>(position);
    std::vector<FormalTensor::Term> raw;
    for (const auto& [key, c] : t.terms()) {
        FormalVector img = FormalVector::basis(key[p]);
        for (int j = 0; j < power && !img.is_zero(); ++j)
            img = apply_d(spec, img);
        for (const auto& [l, lc] : img) {
            TensorKey k = key;
            k[p] = l;
            raw.emplace_back(std::move(k), c * lc);
        }
    }
    return FormalTensor::from_terms(t.arity(), std::move(raw));
}

CheckReport CheckReport::started(std::string check, const CoalgebraSpec& spec, long max_index)
{
    CheckReport r;
    r.check = std::move(check);
    r.max_index = max_index;
    for (const auto& f : spec.families()) {
        long hi = f.hi ? std::min(*f.hi, max_index) : max_index;
        if (hi >= f.lo)
            r.intervals.push_back(FamilyInterval{to_string(f.key), f.lo, hi});
    }
    return r;
}

CheckReport coderivation_check(const CoalgebraSpec& spec, CheckRange range)
{
    if (!spec.differential())
        throw PreconditionError("coderivation check needs a differential spec");
    return run_label_check(spec, "coderivation", range, [&](const Label& b) {
        FormalTensor lhs = delta_linear(spec, apply_d(spec, b));
        FormalTensor db = delta(spec, b);
        return lhs - (apply_d_at(spec, db, 0) + apply_d_at(spec, db, 1));
    });
}

CheckReport cocommutativity_check(const CoalgebraSpec& spec, CheckRange range, bool graded)
{
    return run_label_check(spec, graded ? "supercocommutativity" : "cocommutativity", range, [&](const Label& b) {
        FormalTensor db = delta(spec, b);
        return db - flip(db, 1, graded);
    });
}

CheckReport validate_shift_bound(const CoalgebraSpec& spec, CheckRange range)
{
    const long s = spec.shift_bound();
    CheckReport report = CheckReport::started("shift-bound", spec, range.max_index);
    report.note = "declared s = " + std::to_string(s);
    for (const Label& b : spec.labels_up_to(range.max_index)) {
        ++report.labels_checked;
        const long n = b.index;
        std::vector<std::string> problems;
        const FormalTensor db = delta(spec, b);
        for (const auto& [key, c] : db.terms()) {
            long sum = 0;
            for (const Label& f : key) {
                sum += f.index;
                if (f.index > n + s)
                    problems.push_back("Δ term " + spec.format(FormalTensor::basis(key, c)) + " has index " +
                                       std::to_string(f.index) + " > n + s");
            }
            if (sum < n - s)
                problems.push_back("Δ term " + spec.format(FormalTensor::basis(key, c)) + " has index sum " +
                                   std::to_string(sum) + " < n - s");
        }
        if (spec.differential())
            for (const auto& [l, c] : apply_d(spec, b)) {
                if (l.index > n + s || l.index < n - s)
                    problems.push_back("d term " + spec.format(l) + " is more than s away from n");
            }
        if (!problems.empty()) {
            std::string joined;
            for (const auto& p : problems)
                joined += (joined.empty() ? "" : "; ") + p;
            report.add_witness(Witness{spec.format(b), "", joined});
        }
    }
    report.finish();
    return report;
}

} // namespace coalg
