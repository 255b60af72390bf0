#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace coalg {

/// Interned family name. Equality is pointer equality; ordering is by the
/// name itself so that canonical term order does not depend on intern order.
class Symbol {
public:
    Symbol() : name_(&empty()) {}
    explicit Symbol(std::string_view name);

    const std::string& str() const noexcept { return *name_; }

    friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept
    {
        if (a.name_ == b.name_)
            return std::strong_ordering::equal;
        int c = a.name_->compare(*b.name_);
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::size_t hash() const noexcept { return std::hash<const void*>{}(name_); }

private:
    static const std::string& empty();
    const std::string* name_;
};

/// Identifies a family of basis vectors: a name plus the bar flag used for
/// the odd copies produced by the Kantor construction.
struct FamilyKey {
    Symbol name;
    bool bar = false;

    friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
    friend std::strong_ordering operator<=>(const FamilyKey& a, const FamilyKey& b) noexcept
    {
        if (auto c = a.name <=> b.name; c != 0)
            return c;
        return a.bar <=> b.bar;
    }
};

std::string to_string(const FamilyKey& key);

/// One basis vector of a countable basis. Identity is (family, bar, index);
/// parity is carried along and is a function of the family.
struct Label {
    FamilyKey family;
    long index = 0;
    int parity = 0;

    Label() = default;
    Label(FamilyKey f, long i, int p = 0) : family(f), index(i), parity(p) {}

    friend bool operator==(const Label& a, const Label& b) noexcept
    {
        return a.family == b.family && a.index == b.index;
    }
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept
    {
        if (auto c = a.family <=> b.family; c != 0)
            return c;
        return a.index <=> b.index;
    }
};

/// "f_3", "~f_3" for barred families.
std::string to_string(const Label& label);

} // namespace coalg
