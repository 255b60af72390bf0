#pragma once

#include "coalg/coalgebra.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using namespace coalg;

inline Label L(const CoalgebraSpec& s, const char* fam, long i = 0, bool bar = false) { return s.label(fam, i, bar); }
inline Label Lb(const CoalgebraSpec& s, const char* fam, long i = 0) { return s.label(fam, i, true); }

inline FormalVector V(std::initializer_list<std::pair<Scalar, Label>> terms)
{
    TermCollector<Label> c;
    for (const auto& [coeff, l] : terms)
        c.add(l, coeff);
    return c.finish();
}

inline FormalTensor T(std::initializer_list<std::pair<Scalar, TensorKey>> terms)
{
    std::vector<FormalTensor::Term> raw;
    int arity = 0;
    for (const auto& [coeff, key] : terms) {
        arity = static_cast<int>(key.size());
        raw.emplace_back(key, coeff);
    }
    return FormalTensor::from_terms(arity ? arity : 2, std::move(raw));
}

} // namespace testing
