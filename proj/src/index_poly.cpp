#include "coalg/index_poly.hpp"

#include "coalg/error.hpp"

#include <algorithm>
#include <cctype>

namespace coalg {

AffineIndex::AffineIndex(long constant, std::vector<long> coeffs) : constant_(constant), coeffs_(std::move(coeffs))
{
    trim();
}

AffineIndex AffineIndex::variable(std::size_t k, long coeff)
{
    std::vector<long> c(k + 1, 0);
    c[k] = coeff;
    return AffineIndex(0, std::move(c));
}

void AffineIndex::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

long AffineIndex::eval(std::span<const long> values) const
{
    long r = constant_;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) {
            if (k >= values.size())
                throw PreconditionError("affine index refers to an unbound variable");
            r += coeffs_[k] * values[k];
        }
    return r;
}

AffineIndex AffineIndex::compose(std::span<const AffineIndex> images) const
{
    AffineIndex r(constant_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) {
            if (k >= images.size())
                throw PreconditionError("affine composition is missing an image");
            r = r + images[k] * coeffs_[k];
        }
    return r;
}

AffineIndex AffineIndex::operator+(const AffineIndex& o) const
{
    std::vector<long> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = coeff(k) + o.coeff(k);
    return AffineIndex(constant_ + o.constant_, std::move(c));
}

AffineIndex AffineIndex::operator-(const AffineIndex& o) const { return *this + o * -1; }

AffineIndex AffineIndex::operator*(long s) const
{
    std::vector<long> c = coeffs_;
    for (auto& x : c)
        x *= s;
    return AffineIndex(constant_ * s, std::move(c));
}

std::string AffineIndex::to_string(std::span<const std::string> names) const
{
    return IndexPoly::from_affine(*this).to_string(names);
}

IndexPoly::IndexPoly(const Scalar& c)
{
    if (sgn(c) != 0)
        terms_.emplace(Exponents{}, c);
}

IndexPoly IndexPoly::from_affine(const AffineIndex& a)
{
    IndexPoly p(Scalar(a.constant()));
    for (std::size_t k = 0; k < a.num_vars(); ++k)
        if (a.coeff(k) != 0)
            p = p + variable(k) * IndexPoly(Scalar(a.coeff(k)));
    return p;
}

IndexPoly IndexPoly::variable(std::size_t k)
{
    IndexPoly p;
    Exponents e(k + 1, 0);
    e[k] = 1;
    p.terms_.emplace(std::move(e), Scalar(1));
    return p;
}

void IndexPoly::add_term(Exponents e, const Scalar& c)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted)
        it->second += c;
    if (sgn(it->second) == 0)
        terms_.erase(it);
}

int IndexPoly::highest_var() const noexcept
{
    int h = -1;
    for (const auto& [e, c] : terms_)
        h = std::max(h, static_cast<int>(e.size()) - 1);
    return h;
}

int IndexPoly::degree() const noexcept
{
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e)
            s += x;
        d = std::max(d, s);
    }
    return d;
}

Scalar IndexPoly::eval(std::span<const long> values) const
{
    Scalar r = 0;
    for (const auto& [e, c] : terms_) {
        Scalar m = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            if (k >= values.size())
                throw PreconditionError("polynomial refers to an unbound variable");
            mpz_class base(values[k]);
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e[k]));
            m *= p;
        }
        r += m;
    }
    return r;
}

IndexPoly IndexPoly::compose(std::span<const AffineIndex> images) const
{
    IndexPoly r;
    for (const auto& [e, c] : terms_) {
        IndexPoly m(c);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            if (k >= images.size())
                throw PreconditionError("polynomial composition is missing an image");
            m = m * from_affine(images[k]).pow(static_cast<unsigned>(e[k]));
        }
        r = r + m;
    }
    return r;
}

bool IndexPoly::as_affine(AffineIndex& out) const
{
    long constant = 0;
    std::vector<long> coeffs;
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p())
            return false;
        int deg = 0;
        std::size_t var = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) {
                deg += e[k];
                var = k;
            }
        long v = c.get_num().get_si();
        if (deg == 0)
            constant = v;
        else if (deg == 1) {
            if (coeffs.size() <= var)
                coeffs.resize(var + 1, 0);
            coeffs[var] = v;
        } else
            return false;
    }
    out = AffineIndex(constant, std::move(coeffs));
    return true;
}

IndexPoly IndexPoly::operator+(const IndexPoly& o) const
{
    IndexPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

IndexPoly IndexPoly::operator-(const IndexPoly& o) const { return *this + (-o); }

IndexPoly IndexPoly::operator-() const
{
    IndexPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

IndexPoly IndexPoly::operator*(const IndexPoly& o) const
{
    IndexPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = (k < ea.size() ? ea[k] : 0) + (k < eb.size() ? eb[k] : 0);
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

IndexPoly IndexPoly::pow(unsigned k) const
{
    IndexPoly r(Scalar(1));
    for (unsigned j = 0; j < k; ++j)
        r = r * *this;
    return r;
}

std::string IndexPoly::to_string(std::span<const std::string> names) const
{
    if (terms_.empty())
        return "0";
    // Highest total degree first, then by exponent vector descending.
    std::vector<std::pair<Exponents, Scalar>> order(terms_.begin(), terms_.end());
    auto total = [](const Exponents& e) {
        int s = 0;
        for (int x : e)
            s += x;
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        int da = total(a.first), db = total(b.first);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : order) {
        Scalar mag = abs(c);
        out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        first = false;
        std::string vars;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            if (!vars.empty())
                vars += "*";
            vars += k < names.size() ? names[k] : "v" + std::to_string(k);
            if (e[k] > 1)
                vars += "^" + std::to_string(e[k]);
        }
        if (vars.empty())
            out += coalg::to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += coalg::to_string(mag) + "*" + vars;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    IndexPoly parse()
    {
        IndexPoly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " in expression '" + std::string(text_) + "'",
                         "column " + std::to_string(pos_ + 1));
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    IndexPoly expr()
    {
        IndexPoly r;
        char c = peek();
        bool negate = false;
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        r = term();
        if (negate)
            r = -r;
        for (;;) {
            c = peek();
            if (c == '+') {
                ++pos_;
                r = r + term();
            } else if (c == '-') {
                ++pos_;
                r = r - term();
            } else
                return r;
        }
    }

    bool starts_atom(char c) const
    {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    IndexPoly term()
    {
        IndexPoly r = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * power();
            } else if (c == '/') {
                ++pos_;
                skip_ws();
                Scalar d = number();
                if (sgn(d) == 0)
                    fail("division by zero");
                r = r * IndexPoly(Scalar(1 / d));
            } else if (starts_atom(c)) {
                r = r * power();
            } else
                return r;
        }
    }

    IndexPoly power()
    {
        IndexPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            Scalar e = number();
            if (e.get_den() != 1 || sgn(e) < 0 || e > 64)
                fail("exponent must be a small non-negative integer");
            base = base.pow(static_cast<unsigned>(e.get_num().get_ui()));
        }
        return base;
    }

    Scalar number()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return Scalar(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }

    IndexPoly atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            IndexPoly r = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return IndexPoly(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string_view id = text_.substr(start, pos_ - start);
            for (std::size_t k = 0; k < names_.size(); ++k)
                if (names_[k] == id)
                    return IndexPoly::variable(k);
            pos_ = start;
            fail("unknown variable '" + std::string(id) + "'");
        }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of expression");
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

} // namespace

IndexPoly parse_index_poly(std::string_view text, std::span<const std::string> names)
{
    return PolyParser(text, names).parse();
}

AffineIndex parse_affine_index(std::string_view text, std::span<const std::string> names)
{
    AffineIndex a;
    if (!parse_index_poly(text, names).as_affine(a))
        throw ParseError("index expression '" + std::string(text) + "' is not integer affine", "");
    return a;
}

} // namespace coalg
