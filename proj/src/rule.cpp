#include "coalg/rule.hpp"

#include "coalg/error.hpp"

#include <algorithm>

namespace coalg {

Guard Guard::congruent(AffineIndex e, long modulus, long residue)
{
    if (modulus < 1)
        throw PreconditionError("guard modulus must be positive");
    long r = ((residue % modulus) + modulus) % modulus;
    return {Kind::Congruent, std::move(e), modulus, r};
}

bool Guard::holds(std::span<const long> values) const
{
    long v = expr.eval(values);
    if (kind == Kind::NonNegative)
        return v >= 0;
    return ((v % modulus) + modulus) % modulus == residue;
}

Guard Guard::compose(std::span<const AffineIndex> images) const
{
    Guard g = *this;
    g.expr = expr.compose(images);
    return g;
}

std::string Guard::to_string(std::span<const std::string> names) const
{
    if (kind == Kind::NonNegative)
        return expr.to_string(names) + " >= 0";
    return expr.to_string(names) + " % " + std::to_string(modulus) + " == " + std::to_string(residue);
}

std::vector<std::string> RuleTerm::var_names() const
{
    std::vector<std::string> names{"n"};
    for (const auto& s : sums)
        names.push_back(s.var);
    return names;
}

const FamilyRule* Rule::find(const FamilyKey& key) const
{
    auto it = std::find_if(families.begin(), families.end(), [&](const FamilyRule& r) { return r.family == key; });
    return it == families.end() ? nullptr : &*it;
}

FamilyRule& Rule::entry(const FamilyKey& key)
{
    auto it = std::find_if(families.begin(), families.end(), [&](const FamilyRule& r) { return r.family == key; });
    if (it != families.end())
        return *it;
    families.push_back(FamilyRule{key, {}});
    return families.back();
}

} // namespace coalg
