#include "coalg/exactlin.hpp"

#include <algorithm>
#include <map>

namespace coalg {

FormalTensor add(const FormalTensor& a, const FormalTensor& b)
{
    if (a.arity() != b.arity())
        throw PreconditionError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()));
    return FormalTensor(a.arity(), a.body() + b.body());
}

FormalTensor scale(const FormalTensor& a, const Scalar& s) { return FormalTensor(a.arity(), a.body() * s); }

FormalTensor operator+(const FormalTensor& a, const FormalTensor& b) { return add(a, b); }
FormalTensor operator-(const FormalTensor& a, const FormalTensor& b) { return add(a, scale(b, -1)); }
FormalTensor operator*(const Scalar& s, const FormalTensor& a) { return scale(a, s); }

FormalTensor tensor(const FormalTensor& a, const FormalTensor& b)
{
    std::vector<FormalTensor::Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            TensorKey key;
            key.reserve(ka.size() + kb.size());
            key.insert(key.end(), ka.begin(), ka.end());
            key.insert(key.end(), kb.begin(), kb.end());
            raw.emplace_back(std::move(key), ca * cb);
        }
    return FormalTensor::from_terms(a.arity() + b.arity(), std::move(raw));
}

FormalTensor flip(const FormalTensor& t, int position, bool graded)
{
    if (position < 1 || position + 1 > t.arity())
        throw PreconditionError("flip position " + std::to_string(position) + " out of range for arity " +
                                std::to_string(t.arity()));
    const auto i = static_cast<std::size_t>(position - 1);
    std::vector<FormalTensor::Term> raw;
    raw.reserve(t.size());
    for (const auto& [key, c] : t.terms()) {
        TensorKey k = key;
        std::swap(k[i], k[i + 1]);
        Scalar coeff = c;
        if (graded && koszul_sign(key[i], key[i + 1]) < 0)
            coeff = -coeff;
        raw.emplace_back(std::move(k), std::move(coeff));
    }
    return FormalTensor::from_terms(t.arity(), std::move(raw));
}

std::vector<std::pair<FormalVector, FormalVector>> extract_components(const FormalTensor& t, Side side)
{
    if (t.arity() != 2)
        throw PreconditionError("extract_components needs an arity-2 tensor");
    const std::size_t chosen = side == Side::Left ? 0 : 1;
    const std::size_t other = 1 - chosen;

    // t = Σ_l l ⊗ r_l grouped by the chosen-side label l.
    std::map<Label, TermCollector<Label>> groups;
    for (const auto& [key, c] : t.terms())
        groups[key[chosen]].add(key[other], c);
    std::vector<std::pair<Label, FormalVector>> rows;
    for (auto& [l, coll] : groups)
        rows.emplace_back(l, coll.finish());

    // Echelon basis of span{r_l}; then r_l = Σ_j c_lj w_j and
    // t = Σ_j (Σ_l c_lj l) ⊗ w_j with both sides independent.
    EchelonBasis span;
    for (const auto& [l, r] : rows)
        span.insert(r);
    const auto& ws = span.vectors();
    std::vector<TermCollector<Label>> firsts(ws.size());
    for (const auto& [l, r] : rows) {
        auto coords = span.coordinates(r);
        for (std::size_t j = 0; j < ws.size(); ++j)
            firsts[j].add(l, (*coords)[j]);
    }
    std::vector<std::pair<FormalVector, FormalVector>> out;
    out.reserve(ws.size());
    for (std::size_t j = 0; j < ws.size(); ++j) {
        FormalVector a = firsts[j].finish();
        if (side == Side::Left)
            out.emplace_back(std::move(a), ws[j]);
        else
            out.emplace_back(ws[j], std::move(a));
    }
    return out;
}

FormalVector EchelonBasis::reduce(const FormalVector& v) const
{
    FormalVector r = v;
    for (const auto& row : rows_) {
        Scalar c = r.coefficient(row.terms().front().first);
        if (sgn(c) != 0)
            r -= row * c;
    }
    return r;
}

bool EchelonBasis::insert(const FormalVector& v)
{
    FormalVector r = reduce(v);
    if (r.is_zero())
        return false;
    Scalar lead = r.terms().front().second;
    r = r * Scalar(1 / lead);
    const Label& pivot = r.terms().front().first;
    for (auto& row : rows_) {
        Scalar c = row.coefficient(pivot);
        if (sgn(c) != 0)
            row -= r * c;
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot, [](const FormalVector& row, const Label& p) {
        return row.terms().front().first < p;
    });
    rows_.insert(pos, std::move(r));
    return true;
}

std::optional<std::vector<Scalar>> EchelonBasis::coordinates(const FormalVector& v) const
{
    std::vector<Scalar> coords;
    coords.reserve(rows_.size());
    FormalVector r = v;
    for (const auto& row : rows_) {
        Scalar c = v.coefficient(row.terms().front().first);
        if (sgn(c) != 0)
            r -= row * c;
        coords.push_back(std::move(c));
    }
    if (!r.is_zero())
        return std::nullopt;
    return coords;
}

std::vector<Label> EchelonBasis::pivots() const
{
    std::vector<Label> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_)
        out.push_back(row.terms().front().first);
    return out;
}

std::optional<std::vector<Scalar>> membership(const FormalVector& v, std::span<const FormalVector> basis)
{
    // Reduced echelon rows that remember which combination of the input
    // family they equal.
    struct Row {
        FormalVector vec;
        std::vector<Scalar> combo;
    };
    const std::size_t m = basis.size();
    std::vector<Row> rows;
    auto reduce = [&](Row r) {
        for (const auto& row : rows) {
            Scalar c = r.vec.coefficient(row.vec.terms().front().first);
            if (sgn(c) == 0)
                continue;
            r.vec -= row.vec * c;
            for (std::size_t k = 0; k < m; ++k)
                r.combo[k] -= c * row.combo[k];
        }
        return r;
    };
    for (std::size_t k = 0; k < m; ++k) {
        Row r{basis[k], std::vector<Scalar>(m)};
        r.combo[k] = 1;
        r = reduce(std::move(r));
        if (r.vec.is_zero())
            throw PreconditionError("membership basis is linearly dependent");
        Scalar inv = 1 / r.vec.terms().front().second;
        r.vec = r.vec * inv;
        for (auto& x : r.combo)
            x *= inv;
        const Label pivot = r.vec.terms().front().first;
        for (auto& row : rows) {
            Scalar c = row.vec.coefficient(pivot);
            if (sgn(c) == 0)
                continue;
            row.vec -= r.vec * c;
            for (std::size_t j = 0; j < m; ++j)
                row.combo[j] -= c * r.combo[j];
        }
        rows.push_back(std::move(r));
    }
    Row target = reduce(Row{v, std::vector<Scalar>(m)});
    if (!target.vec.is_zero())
        return std::nullopt;
    // v - Σ c_i row_i = 0 was tracked as combo = -Σ c_i combo_i.
    std::vector<Scalar> coords(m);
    for (std::size_t k = 0; k < m; ++k)
        coords[k] = -target.combo[k];
    return coords;
}

bool linearly_independent(std::span<const FormalVector> vectors)
{
    EchelonBasis b;
    for (const auto& v : vectors)
        if (!b.insert(v))
            return false;
    return true;
}

} // namespace coalg
