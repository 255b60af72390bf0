#pragma once

#include "coalg/scalar.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coalg {

/// Integer affine form c + Σ a_k v_k over the variables of a rule term.
/// Variable 0 is always the input index n; later variables are summation
/// indices.
class AffineIndex {
public:
    AffineIndex() = default;
    explicit AffineIndex(long constant) : constant_(constant) {}
    AffineIndex(long constant, std::vector<long> coeffs);

    static AffineIndex variable(std::size_t k, long coeff = 1);

    long constant() const noexcept { return constant_; }
    long coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    std::size_t num_vars() const noexcept { return coeffs_.size(); }
    /// Highest variable with a nonzero coefficient, or -1 for constants.
    int highest_var() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    long eval(std::span<const long> values) const;

    /// Substitutes variable k by images[k].
    AffineIndex compose(std::span<const AffineIndex> images) const;

    AffineIndex operator+(const AffineIndex& o) const;
    AffineIndex operator-(const AffineIndex& o) const;
    AffineIndex operator*(long s) const;
    AffineIndex operator+(long c) const { return *this + AffineIndex(c); }

    friend bool operator==(const AffineIndex&, const AffineIndex&) = default;

    std::string to_string(std::span<const std::string> names) const;

private:
    void trim();

    long constant_ = 0;
    std::vector<long> coeffs_;
};

/// Polynomial with rational coefficients in the rule variables (n, i, ...).
/// Used for coefficient expressions such as (n - i + 1).
class IndexPoly {
public:
    using Exponents = std::vector<int>;

    IndexPoly() = default;
    IndexPoly(const Scalar& c); // NOLINT: constants convert implicitly
    static IndexPoly from_affine(const AffineIndex& a);
    static IndexPoly variable(std::size_t k);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, Scalar>& terms() const noexcept { return terms_; }
    int highest_var() const noexcept;
    int degree() const noexcept;

    Scalar eval(std::span<const long> values) const;
    IndexPoly compose(std::span<const AffineIndex> images) const;

    /// Returns the polynomial as an affine form when it is affine with
    /// integer coefficients.
    bool as_affine(AffineIndex& out) const;

    IndexPoly operator+(const IndexPoly& o) const;
    IndexPoly operator-(const IndexPoly& o) const;
    IndexPoly operator*(const IndexPoly& o) const;
    IndexPoly operator-() const;
    IndexPoly pow(unsigned k) const;

    friend bool operator==(const IndexPoly&, const IndexPoly&) = default;

    std::string to_string(std::span<const std::string> names) const;

private:
    void add_term(Exponents e, const Scalar& c);

    std::map<Exponents, Scalar> terms_;
};

/// Parses arithmetic over rationals and the given variable names:
/// "n - i + 1", "(n+1-2*i)", "1/2 n^2". Throws ParseError.
IndexPoly parse_index_poly(std::string_view text, std::span<const std::string> names);

/// As parse_index_poly, then requires an integer affine result.
AffineIndex parse_affine_index(std::string_view text, std::span<const std::string> names);

} // namespace coalg
