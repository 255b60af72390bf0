#include "coalg/scalar.hpp"

#include "coalg/error.hpp"

#include <cctype>

namespace coalg {

Scalar make_scalar(long numerator, long denominator)
{
    if (denominator == 0)
        throw PreconditionError("zero denominator");
    Scalar q(numerator, denominator);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(std::string_view text)
{
    std::string s(text);
    auto valid = [&] {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool digits = false, slash = false, after_slash = false;
        for (; i < s.size(); ++i) {
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                (slash ? after_slash : digits) = true;
            } else if (s[i] == '/' && !slash && digits) {
                slash = true;
            } else {
                return false;
            }
        }
        return digits && (!slash || after_slash);
    };
    if (!valid())
        throw ParseError("not a rational number: '" + s + "'", "");
    if (s[0] == '+')
        s.erase(0, 1);
    Scalar q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("not a rational number: '" + s + "'", "");
    if (sgn(q.get_den()) == 0)
        throw ParseError("zero denominator in '" + s + "'", "");
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

} // namespace coalg
