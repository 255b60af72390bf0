#pragma once

#include "coalg/coalgebra.hpp"
#include "coalg/identities.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace coalg {

/// Finitely supported element Σ c_l ξ_l of the dual space, stored as the
/// coefficient vector of the coordinate functionals.
using Functional = FormalVector;

/// Parity of a functional: 0, 1, or -1 when mixed (or zero).
int functional_parity(const Functional& f);

std::string format_functional(const CoalgebraSpec& spec, const Functional& f);

/// Transposes Δ and d over a window of labels that grows on demand. Every
/// label added to the window is checked against the declared shift bound;
/// a violation raises PreconditionError, since products would then not be
/// computable from a finite window.
class DualAlgebra {
public:
    explicit DualAlgebra(const CoalgebraSpec& spec);

    const CoalgebraSpec& spec() const noexcept { return spec_; }

    /// (fg)(b) = Σ f(b1) g(b2) over Δ(b) = Σ b1⊗b2.
    Functional product(const Functional& f, const Functional& g);
    /// (d*f)(b) = f(d b). Throws PreconditionError when the spec is not differential.
    Functional derivation(const Functional& f, int power = 1);

    /// Largest label index currently transposed.
    long window() const noexcept { return window_; }

private:
    struct Entry {
        Label target;
        Scalar coeff;
    };
    struct PairHash {
        std::size_t operator()(const std::pair<Label, Label>& p) const noexcept;
    };
    struct LabelHash {
        std::size_t operator()(const Label& l) const noexcept;
    };

    void ensure_window(long w);
    void add_label(const Label& b);

    CoalgebraSpec spec_;
    long window_ = -1;
    std::unordered_map<std::pair<Label, Label>, std::vector<Entry>, PairHash> delta_t_;
    std::unordered_map<Label, std::vector<Entry>, LabelHash> d_t_;
};

Functional dual_product(const CoalgebraSpec& spec, const Functional& f, const Functional& g);
Functional dual_derivation(const CoalgebraSpec& spec, const Functional& f);

/// Evaluates p on every tuple of coordinate functionals with indices ≤ n
/// (restricted to the slot parities of the signature; odd slots permuted
/// past each other contribute Koszul signs when p is checked graded) and
/// passes iff every value is the zero functional. Values are exact: their
/// support is computed in full, not sampled on a window.
CheckReport bruteforce_identity(const CoalgebraSpec& spec, const NAPoly& p, long n);

/// Element of the Grassmann envelope: Σ ξ_mask ⊗ f_mask where mask is a
/// squarefree monomial in the generators and f_mask a functional of the same
/// parity.
class GrassmannElement {
public:
    using Mask = std::uint32_t;

    GrassmannElement() = default;
    /// Throws PreconditionError unless the functional and monomial parities agree.
    void add(Mask monomial, const Functional& f);

    const std::map<Mask, Functional>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-(const GrassmannElement& o) const;

    /// Envelope product: dual product on the functionals, Grassmann product
    /// (with its anticommutation sign) on the monomials.
    static GrassmannElement multiply(DualAlgebra& alg, const GrassmannElement& a, const GrassmannElement& b);

    std::string to_string(const CoalgebraSpec& spec) const;

private:
    std::map<Mask, Functional> terms_;
};

/// Sign of ξ_a ξ_b = ±ξ_{a|b}, or 0 when a and b share a generator.
int grassmann_sign(GrassmannElement::Mask a, GrassmannElement::Mask b);

struct GrassmannOptions {
    int generators = 3;
    int samples = 50;
    std::uint64_t seed = 1;
    long max_index = 6;   // sampled coordinate functionals have index ≤ max_index
    int terms_per_element = 3;
};

/// Samples random elements x, y of the envelope and checks xy = yx and
/// (x²y)x = x²(yx) exactly.
CheckReport grassmann_envelope_check(const CoalgebraSpec& spec, const GrassmannOptions& opts);

/// The same spec read as a graded coalgebra with every family even.
CoalgebraSpec as_graded_even(const CoalgebraSpec& spec);

} // namespace coalg
