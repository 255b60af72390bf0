#include "coalg/closure.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace coalg {

namespace {

// Vectors that v forces into any subcoalgebra containing it.
std::vector<FormalVector> consequences(const CoalgebraSpec& spec, const FormalVector& v)
{
    std::vector<FormalVector> out;
    for (auto& [a, b] : extract_components(delta_linear(spec, v), Side::Left)) {
        out.push_back(std::move(a));
        out.push_back(std::move(b));
    }
    if (spec.differential()) {
        FormalVector dv = apply_d(spec, v);
        if (!dv.is_zero())
            out.push_back(std::move(dv));
    }
    return out;
}

long top_index(const FormalVector& v)
{
    long m = -1;
    for (const auto& [l, c] : v)
        m = std::max(m, l.index);
    return m;
}

} // namespace

Subspace bimodule_step(const CoalgebraSpec& spec, const Subspace& s)
{
    Subspace out = s;
    for (const FormalVector& v : s.vectors())
        for (const FormalVector& w : consequences(spec, v))
            out.insert(w);
    return out;
}

ClosureTrace generated_subcoalgebra(const CoalgebraSpec& spec, const std::vector<FormalVector>& generators,
                                    Budget budget)
{
    if (budget.max_steps == 0 || budget.max_dim == 0)
        throw PreconditionError("closure budget must be positive");
    ClosureTrace trace;
    for (const FormalVector& g : generators) {
        for (const auto& [l, c] : g)
            if (!spec.family(l.family).contains(l.index))
                throw RangeError("generator label " + spec.format(l) + " is outside its family");
        trace.subspace.insert(g);
    }
    trace.dimensions.push_back(trace.subspace.dimension());
    while (trace.steps() < budget.max_steps) {
        Subspace next = bimodule_step(spec, trace.subspace);
        std::vector<Label> old = trace.subspace.pivots(), now = next.pivots(), fresh;
        std::set_difference(now.begin(), now.end(), old.begin(), old.end(), std::back_inserter(fresh));
        trace.added.push_back(std::move(fresh));
        trace.dimensions.push_back(next.dimension());
        const bool fixed = next.dimension() == trace.subspace.dimension();
        trace.subspace = std::move(next);
        if (fixed) {
            trace.verdict = ClosureTrace::Verdict::Closed;
            return trace;
        }
        if (trace.subspace.dimension() > budget.max_dim)
            break;
    }
    trace.verdict = ClosureTrace::Verdict::BudgetExceeded;
    return trace;
}

LocalFiniteness local_finiteness_probe(const CoalgebraSpec& spec, const std::vector<FormalVector>& generators,
                                       Budget budget)
{
    LocalFiniteness r;
    r.trace = generated_subcoalgebra(spec, generators, budget);
    r.finite = r.trace.closed();
    r.dimension = r.trace.dimension();
    return r;
}

CheckReport simplicity_probe(const CoalgebraSpec& spec, long horizon, int trials, std::uint64_t seed)
{
    const long window = horizon - spec.shift_bound();
    if (window < 0)
        throw PreconditionError("horizon " + std::to_string(horizon) + " leaves no verified window for shift bound " +
                                std::to_string(spec.shift_bound()));
    if (trials < 0)
        throw PreconditionError("trial count must be non-negative");
    for (const FamilyDecl& f : spec.families())
        if (f.hi && *f.hi < horizon && !f.singleton())
            throw PreconditionError("family " + to_string(f.key) + " ends below the horizon");

    const std::vector<Label> tracked = spec.labels_up_to(horizon);
    std::vector<Label> target;
    for (const Label& l : tracked)
        if (l.index <= window)
            target.push_back(l);

    std::vector<FormalVector> starts;
    for (const Label& l : tracked)
        starts.push_back(FormalVector::basis(l));
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        TermCollector<Label> c;
        const int terms = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < terms; ++k) {
            long num = static_cast<long>(rng() % 7) - 3;
            c.add(tracked[rng() % tracked.size()], Scalar(num == 0 ? 1 : num));
        }
        FormalVector v = c.finish();
        starts.push_back(v.is_zero() ? FormalVector::basis(tracked.front()) : v);
    }

    CheckReport report = CheckReport::started("simplicity", spec, window);
    report.note = "closures tracked on labels with index ≤ " + std::to_string(horizon) + "; verified window index ≤ " +
                  std::to_string(window) + "; " + std::to_string(trials) + " random starts, seed " +
                  std::to_string(seed) + "; evidence at truncation, not a proof";
    for (const FormalVector& start : starts) {
        // Worklist closure; every inserted vector is a consequence of the start vector.
        Subspace s;
        std::vector<FormalVector> work{start};
        s.insert(start);
        while (!work.empty()) {
            FormalVector v = std::move(work.back());
            work.pop_back();
            for (FormalVector& w : consequences(spec, v))
                if (top_index(w) <= horizon && s.insert(w))
                    work.push_back(std::move(w));
        }
        ++report.labels_checked;
        std::vector<std::string> missing;
        for (const Label& l : target)
            if (!s.contains_label(l))
                missing.push_back(spec.format(l));
        if (!missing.empty()) {
            std::string list;
            for (std::size_t i = 0; i < missing.size() && i < 6; ++i)
                list += (i ? ", " : "") + missing[i];
            if (missing.size() > 6)
                list += ", …";
            report.add_witness(Witness{spec.format(start),
                                       "closure has dimension " + std::to_string(s.dimension()) + " and misses " +
                                           std::to_string(missing.size()) + " window labels: " + list,
                                       "proper subcoalgebra candidate"});
        }
    }
    report.finish();
    return report;
}

std::string format_trace(const CoalgebraSpec& spec, const ClosureTrace& trace)
{
    std::string out = trace.closed() ? "closed at dimension " + std::to_string(trace.dimension())
                                     : "budget exceeded after " + std::to_string(trace.steps()) + " steps";
    out += "; dimensions";
    for (std::size_t i = 0; i < trace.dimensions.size(); ++i)
        out += (i ? "," : " ") + std::to_string(trace.dimensions[i]);
    for (std::size_t k = 0; k < trace.added.size() && k < 8; ++k) {
        out += "\n  step " + std::to_string(k + 1) + ":";
        for (const Label& l : trace.added[k])
            out += " " + spec.format(l);
    }
    if (trace.added.size() > 8)
        out += "\n  …";
    return out;
}

} // namespace coalg
