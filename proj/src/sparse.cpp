#include "coalg/sparse.hpp"

namespace coalg {

FormalTensor::FormalTensor(int arity, Combination<TensorKey> body) : arity_(arity), body_(std::move(body))
{
    check_arity(arity);
    for (const auto& [key, c] : body_)
        if (static_cast<int>(key.size()) != arity)
            throw PreconditionError("tensor term has wrong arity");
}

FormalTensor FormalTensor::from_terms(int arity, std::vector<Term> raw)
{
    return FormalTensor(arity, Combination<TensorKey>::from_terms(std::move(raw)));
}

FormalTensor FormalTensor::basis(TensorKey key, Scalar coeff)
{
    int arity = static_cast<int>(key.size());
    return FormalTensor(arity, Combination<TensorKey>::basis(std::move(key), std::move(coeff)));
}

FormalTensor FormalTensor::from_vector(const FormalVector& v)
{
    std::vector<Term> raw;
    raw.reserve(v.size());
    for (const auto& [l, c] : v)
        raw.emplace_back(TensorKey{l}, c);
    // Already sorted: single-label keys compare like their labels.
    return from_terms(1, std::move(raw));
}

FormalVector FormalTensor::to_vector() const
{
    if (arity_ != 1)
        throw PreconditionError("only arity-1 tensors convert to vectors");
    std::vector<FormalVector::Term> raw;
    raw.reserve(size());
    for (const auto& [key, c] : terms())
        raw.emplace_back(key[0], c);
    return FormalVector::from_terms(std::move(raw));
}

namespace {

template <class Key, class Fmt>
std::string format_combination(const Combination<Key>& c, Fmt fmt)
{
    if (c.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : c) {
        Scalar mag = abs(coeff);
        if (first)
            out += sgn(coeff) < 0 ? "-" : "";
        else
            out += sgn(coeff) < 0 ? " - " : " + ";
        if (mag != 1)
            out += to_string(mag) + "*";
        out += fmt(key);
        first = false;
    }
    return out;
}

} // namespace

std::string to_string(const TensorKey& key)
{
    std::string out;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (i)
            out += "⊗";
        out += to_string(key[i]);
    }
    return out;
}

std::string to_string(const FormalVector& v)
{
    return format_combination(v, [](const Label& l) { return to_string(l); });
}

std::string to_string(const FormalTensor& t)
{
    return format_combination(t.body(), [](const TensorKey& k) { return to_string(k); });
}

} // namespace coalg
