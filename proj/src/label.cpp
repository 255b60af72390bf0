#include "coalg/label.hpp"

#include <mutex>
#include <unordered_set>

namespace coalg {

namespace {

// Node-based set: element addresses stay valid for the program lifetime, so
// readers never need the lock.
struct InternTable {
    std::mutex mutex;
    std::unordered_set<std::string> names;
};

InternTable& table()
{
    static InternTable t;
    return t;
}

} // namespace

const std::string& Symbol::empty()
{
    static const std::string e;
    return e;
}

Symbol::Symbol(std::string_view name)
{
    auto& t = table();
    std::lock_guard lock(t.mutex);
    name_ = &*t.names.emplace(name).first;
}

std::string to_string(const FamilyKey& key) { return (key.bar ? "~" : "") + key.name.str(); }

std::string to_string(const Label& label)
{
    return to_string(label.family) + "_" + std::to_string(label.index);
}

} // namespace coalg
