#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coalg {

class CoalgebraSpec;

/// A label on which a check failed, with its exact nonzero residual.
struct Witness {
    std::string label;
    std::string residual;
    std::string note;
};

struct FamilyInterval {
    std::string family;
    long lo = 0;
    long hi = 0;
};

/// Outcome of a range check. Verdicts are "verified up to N" statements over
/// the recorded intervals; failures always carry at least one witness.
struct CheckReport {
    static constexpr std::size_t max_witnesses = 8;

    std::string check;
    bool passed = true;
    long max_index = 0;
    std::vector<FamilyInterval> intervals;
    std::size_t labels_checked = 0;
    std::size_t failures = 0;
    std::vector<Witness> witnesses; // at most max_witnesses are kept
    std::string note;

    /// Fresh passing report whose intervals are the spec's families clamped to max_index.
    static CheckReport started(std::string check, const CoalgebraSpec& spec, long max_index);

    void add_witness(Witness w)
    {
        passed = false;
        ++failures;
        if (witnesses.size() < max_witnesses)
            witnesses.push_back(std::move(w));
    }
    void finish() { passed = failures == 0; }
};

} // namespace coalg
