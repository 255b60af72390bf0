#pragma once

#include "coalg/coalgebra.hpp"
#include "coalg/exactlin.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coalg {

using Subspace = EchelonBasis;

struct Budget {
    std::size_t max_steps = 64;
    std::size_t max_dim = 4096;
};

struct ClosureTrace {
    enum class Verdict { Closed, BudgetExceeded };

    /// dimensions[k] is the dimension after k steps; dimensions[0] is the generators' span.
    std::vector<std::size_t> dimensions;
    /// added[k] lists the pivot labels that step k + 1 introduced.
    std::vector<std::vector<Label>> added;
    Verdict verdict = Verdict::BudgetExceeded;
    Subspace subspace;

    std::size_t steps() const noexcept { return added.size(); }
    std::size_t dimension() const noexcept { return subspace.dimension(); }
    bool closed() const noexcept { return verdict == Verdict::Closed; }
};

/// One round of the bimodule action: for every basis vector v, the components
/// of Δ(v) on both sides (and d(v) for differential specs) join the span.
Subspace bimodule_step(const CoalgebraSpec& spec, const Subspace& s);

/// Iterates bimodule_step from span(generators) to a fixed point or until the
/// budget runs out.
ClosureTrace generated_subcoalgebra(const CoalgebraSpec& spec, const std::vector<FormalVector>& generators,
                                    Budget budget = {});

/// FiniteDimensional when the closure reaches a fixed point; otherwise the
/// trace is evidence of divergence, not a proof.
struct LocalFiniteness {
    bool finite = false;
    std::size_t dimension = 0;
    ClosureTrace trace;
};

LocalFiniteness local_finiteness_probe(const CoalgebraSpec& spec, const std::vector<FormalVector>& generators,
                                       Budget budget = {});

/// Closes every basis label with index ≤ horizon and `trials` random vectors
/// supported there, discarding derived vectors that reach above the horizon,
/// so every tracked vector genuinely lies in the generated subcoalgebra. A
/// run passes when its closure contains every label of the verified window
/// (index ≤ horizon - s).
CheckReport simplicity_probe(const CoalgebraSpec& spec, long horizon, int trials, std::uint64_t seed);

std::string format_trace(const CoalgebraSpec& spec, const ClosureTrace& trace);

} // namespace coalg
