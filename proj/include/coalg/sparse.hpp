#pragma once

#include "coalg/error.hpp"
#include "coalg/label.hpp"
#include "coalg/scalar.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace coalg {

/// Finite rational linear combination of keys in canonical form: sorted by
/// key, duplicates merged, no zero coefficients. The zero combination is the
/// empty term list.
template <class Key>
class Combination {
public:
    using Term = std::pair<Key, Scalar>;

    Combination() = default;

    /// Canonicalizes an arbitrary (unsorted, possibly repeated) term list.
    static Combination from_terms(std::vector<Term> raw)
    {
        std::stable_sort(raw.begin(), raw.end(),
                         [](const Term& a, const Term& b) { return a.first < b.first; });
        Combination out;
        out.terms_.reserve(raw.size());
        for (auto& t : raw) {
            if (!out.terms_.empty() && out.terms_.back().first == t.first)
                out.terms_.back().second += t.second;
            else {
                if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0)
                    out.terms_.pop_back();
                out.terms_.push_back(std::move(t));
            }
        }
        if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0)
            out.terms_.pop_back();
        return out;
    }

    static Combination basis(Key key, Scalar coeff = 1)
    {
        Combination out;
        if (sgn(coeff) != 0)
            out.terms_.emplace_back(std::move(key), std::move(coeff));
        return out;
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// Coefficient of `key`, zero when absent.
    Scalar coefficient(const Key& key) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const Term& t, const Key& k) { return t.first < k; });
        if (it != terms_.end() && it->first == key)
            return it->second;
        return 0;
    }

    friend Combination operator+(const Combination& a, const Combination& b)
    {
        return merge(a, b, Scalar(1));
    }
    friend Combination operator-(const Combination& a, const Combination& b)
    {
        return merge(a, b, Scalar(-1));
    }
    friend Combination operator-(const Combination& a) { return a * Scalar(-1); }
    friend Combination operator*(const Combination& a, const Scalar& s)
    {
        Combination out;
        if (sgn(s) == 0)
            return out;
        out.terms_.reserve(a.terms_.size());
        for (const auto& [k, c] : a.terms_)
            out.terms_.emplace_back(k, c * s);
        return out;
    }
    friend Combination operator*(const Scalar& s, const Combination& a) { return a * s; }

    Combination& operator+=(const Combination& other) { return *this = *this + other; }
    Combination& operator-=(const Combination& other) { return *this = *this - other; }

    friend bool operator==(const Combination& a, const Combination& b)
    {
        return a.terms_ == b.terms_;
    }

private:
    static Combination merge(const Combination& a, const Combination& b, const Scalar& sb)
    {
        Combination out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
                out.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->first < i->first) {
                out.terms_.emplace_back(j->first, j->second * sb);
                ++j;
            } else {
                Scalar c = i->second + j->second * sb;
                if (sgn(c) != 0)
                    out.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<Term> terms_;
};

/// Element of the space C: finite combination of basis labels.
using FormalVector = Combination<Label>;

using TensorKey = std::vector<Label>;

/// Element of C^{⊗k}. Zero tensors of every arity are the empty term list
/// tagged with the arity.
class FormalTensor {
public:
    using Term = Combination<TensorKey>::Term;

    explicit FormalTensor(int arity = 1) : arity_(arity) { check_arity(arity); }
    FormalTensor(int arity, Combination<TensorKey> body);
    static FormalTensor from_terms(int arity, std::vector<Term> raw);
    static FormalTensor basis(TensorKey key, Scalar coeff = 1);

    /// Lossless arity-1 conversions.
    static FormalTensor from_vector(const FormalVector& v);
    FormalVector to_vector() const;

    int arity() const noexcept { return arity_; }
    const Combination<TensorKey>& body() const noexcept { return body_; }
    const std::vector<Term>& terms() const noexcept { return body_.terms(); }
    bool is_zero() const noexcept { return body_.is_zero(); }
    std::size_t size() const noexcept { return body_.size(); }
    Scalar coefficient(const TensorKey& key) const { return body_.coefficient(key); }

    friend bool operator==(const FormalTensor& a, const FormalTensor& b)
    {
        return a.arity_ == b.arity_ && a.body_ == b.body_;
    }

private:
    static void check_arity(int arity)
    {
        if (arity < 1)
            throw PreconditionError("tensor arity must be at least 1");
    }

    int arity_;
    Combination<TensorKey> body_;
};

/// Collects terms in any order and canonicalizes once.
template <class Key>
class TermCollector {
public:
    void add(Key key, Scalar coeff)
    {
        if (sgn(coeff) != 0)
            raw_.emplace_back(std::move(key), std::move(coeff));
    }
    void add(const Combination<Key>& c, const Scalar& scale = 1)
    {
        for (const auto& [k, v] : c)
            add(k, v * scale);
    }
    Combination<Key> finish() { return Combination<Key>::from_terms(std::move(raw_)); }

private:
    std::vector<typename Combination<Key>::Term> raw_;
};

std::string to_string(const FormalVector& v);
std::string to_string(const FormalTensor& t);
std::string to_string(const TensorKey& key);

} // namespace coalg
