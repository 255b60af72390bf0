#include "coalg/dual.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace coalg {

int functional_parity(const Functional& f)
{
    int p = -1;
    for (const auto& [l, c] : f) {
        if (p == -1)
            p = l.parity;
        else if (p != l.parity)
            return -1;
    }
    return p;
}

std::string format_functional(const CoalgebraSpec& spec, const Functional& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [l, c] : f) {
        Scalar mag = abs(c);
        out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            out += to_string(mag) + "*";
        out += "ξ[" + spec.format(l) + "]";
    }
    return out;
}

std::size_t DualAlgebra::LabelHash::operator()(const Label& l) const noexcept
{
    return l.family.name.hash() * 31 + std::hash<long>{}(l.index) * 2 + (l.family.bar ? 1 : 0);
}

std::size_t DualAlgebra::PairHash::operator()(const std::pair<Label, Label>& p) const noexcept
{
    LabelHash h;
    return h(p.first) * 1000003u ^ h(p.second);
}

DualAlgebra::DualAlgebra(const CoalgebraSpec& spec) : spec_(spec) {}

void DualAlgebra::add_label(const Label& b)
{
    const long s = spec_.shift_bound();
    const long n = b.index;
    auto violation = [&](const std::string& what) {
        throw PreconditionError("shift bound s = " + std::to_string(s) + " of '" + spec_.name() +
                                "' does not hold at " + spec_.format(b) + ": " + what +
                                "; dual products are not computable from a finite window");
    };
    FormalTensor db = delta(spec_, b);
    for (const auto& [key, c] : db.terms()) {
        if (key[0].index > n + s || key[1].index > n + s)
            violation("Δ produces an index above n + s");
        if (key[0].index + key[1].index < n - s)
            violation("Δ produces an index sum below n - s");
        delta_t_[{key[0], key[1]}].push_back(Entry{b, c});
    }
    if (spec_.differential())
        for (const auto& [l, c] : apply_d(spec_, b)) {
            if (l.index > n + s || l.index < n - s)
                violation("d moves an index by more than s");
            d_t_[l].push_back(Entry{b, c});
        }
}

void DualAlgebra::ensure_window(long w)
{
    if (w <= window_)
        return;
    for (const FamilyDecl& f : spec_.families()) {
        long lo = std::max(f.lo, window_ + 1);
        long hi = f.hi ? std::min(*f.hi, w) : w;
        for (long i = lo; i <= hi; ++i)
            add_label(Label(f.key, i, f.parity));
    }
    window_ = w;
}

namespace {

long max_index(const Functional& f)
{
    long m = -1;
    for (const auto& [l, c] : f)
        m = std::max(m, l.index);
    return m;
}

} // namespace

Functional DualAlgebra::product(const Functional& f, const Functional& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    // Δ(b_k) ∋ b_i⊗b_j forces i + j ≥ k - s.
    ensure_window(max_index(f) + max_index(g) + spec_.shift_bound());
    TermCollector<Label> out;
    for (const auto& [li, ci] : f)
        for (const auto& [lj, cj] : g) {
            auto it = delta_t_.find({li, lj});
            if (it == delta_t_.end())
                continue;
            Scalar c = ci * cj;
            for (const Entry& e : it->second)
                out.add(e.target, c * e.coeff);
        }
    return out.finish();
}

Functional DualAlgebra::derivation(const Functional& f, int power)
{
    if (!spec_.differential())
        throw PreconditionError("spec '" + spec_.name() + "' has no coderivation");
    Functional cur = f;
    for (int k = 0; k < power && !cur.is_zero(); ++k) {
        // d(b_k) ∋ b_i forces k ≤ i + s.
        ensure_window(max_index(cur) + spec_.shift_bound());
        TermCollector<Label> out;
        for (const auto& [l, c] : cur) {
            auto it = d_t_.find(l);
            if (it == d_t_.end())
                continue;
            for (const Entry& e : it->second)
                out.add(e.target, c * e.coeff);
        }
        cur = out.finish();
    }
    return cur;
}

Functional dual_product(const CoalgebraSpec& spec, const Functional& f, const Functional& g)
{
    DualAlgebra a(spec);
    return a.product(f, g);
}

Functional dual_derivation(const CoalgebraSpec& spec, const Functional& f)
{
    DualAlgebra a(spec);
    return a.derivation(f);
}

// ---- brute force ----

namespace {

struct Evaluator {
    DualAlgebra& alg;
    std::map<std::pair<const NANode*, std::vector<Label>>, Functional> memo;

    // `slots` holds the label assigned to every slot (1-based via slot - 1).
    Functional eval(const NATree& t, const std::vector<Label>& slots)
    {
        if (t->is_leaf()) {
            Functional f = FormalVector::basis(slots[static_cast<std::size_t>(t->slot - 1)]);
            return t->derivative ? alg.derivation(f, t->derivative) : f;
        }
        std::vector<Label> key;
        for (int s : leaf_order(t))
            key.push_back(slots[static_cast<std::size_t>(s - 1)]);
        auto k = std::make_pair(t.get(), std::move(key));
        if (auto it = memo.find(k); it != memo.end())
            return it->second;
        Functional v = alg.product(eval(t->left, slots), eval(t->right, slots));
        memo.emplace(std::move(k), v);
        return v;
    }
};

int koszul_permutation_sign(const std::vector<int>& order, const std::vector<Label>& slots)
{
    int sign = 1;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b] && slots[static_cast<std::size_t>(order[a] - 1)].parity &&
                slots[static_cast<std::size_t>(order[b] - 1)].parity)
                sign = -sign;
    return sign;
}

} // namespace

CheckReport bruteforce_identity(const CoalgebraSpec& spec, const NAPoly& p, long n)
{
    if (p.arity() > 4)
        throw PreconditionError("brute-force evaluation supports arity ≤ 4");
    if (!p.multilinear())
        throw PreconditionError("identity is not multilinear: " + to_string(p));
    if (auto m = spec.max_declared_index())
        n = std::min(n, *m);
    const bool graded = options_for(spec, p).graded;

    std::vector<Label> all = spec.labels_up_to(n);
    std::vector<std::vector<Label>> choices;
    for (SlotParity sp : p.signature()) {
        std::vector<Label> c;
        for (const Label& l : all)
            if (sp == SlotParity::Any || l.parity == (sp == SlotParity::Odd ? 1 : 0))
                c.push_back(l);
        choices.push_back(std::move(c));
    }

    DualAlgebra alg(spec);
    Evaluator ev{alg, {}};
    std::vector<std::vector<int>> orders;
    for (const auto& [c, t] : p.terms())
        orders.push_back(leaf_order(t));

    CheckReport report = CheckReport::started("bruteforce " + to_string(p), spec, n);
    report.note = "dual evaluation on coordinate functionals";
    for (const auto& c : choices)
        if (c.empty()) {
            report.finish();
            return report;
        }
    const std::size_t k = choices.size();
    std::vector<std::size_t> pos(k, 0);
    std::vector<Label> slots(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i)
            slots[i] = choices[i][pos[i]];
        TermCollector<Label> value;
        for (std::size_t t = 0; t < p.terms().size(); ++t) {
            const auto& [c, tree] = p.terms()[t];
            Scalar coeff = c;
            if (graded && koszul_permutation_sign(orders[t], slots) < 0)
                coeff = -coeff;
            value.add(ev.eval(tree, slots), coeff);
        }
        Functional v = value.finish();
        ++report.labels_checked;
        if (!v.is_zero()) {
            std::string args;
            for (std::size_t i = 0; i < k; ++i)
                args += (i ? ", " : "") + std::string("ξ[") + spec.format(slots[i]) + "]";
            report.add_witness(Witness{"(" + args + ")", format_functional(spec, v), {}});
        }
        std::size_t i = k;
        while (i > 0 && ++pos[i - 1] == choices[i - 1].size())
            pos[--i] = 0;
        if (i == 0)
            break;
    }
    report.finish();
    return report;
}

// ---- Grassmann envelope ----

int grassmann_sign(GrassmannElement::Mask a, GrassmannElement::Mask b)
{
    if (a & b)
        return 0;
    // Moving each generator of b left past the larger generators of a.
    int swaps = 0;
    for (GrassmannElement::Mask bb = b; bb; bb &= bb - 1) {
        GrassmannElement::Mask low = bb & (~bb + 1);
        swaps += std::popcount(a & ~(low - 1) & ~low);
    }
    return swaps % 2 ? -1 : 1;
}

void GrassmannElement::add(Mask monomial, const Functional& f)
{
    if (f.is_zero())
        return;
    int fp = functional_parity(f);
    if (fp != static_cast<int>(std::popcount(monomial) % 2))
        throw PreconditionError("Grassmann envelope pairs even functionals with even monomials and odd with odd");
    Functional sum = terms_[monomial] + f;
    if (sum.is_zero())
        terms_.erase(monomial);
    else
        terms_[monomial] = std::move(sum);
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const
{
    GrassmannElement r = *this;
    for (const auto& [m, f] : o.terms_)
        r.add(m, f);
    return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const
{
    GrassmannElement r = *this;
    for (const auto& [m, f] : o.terms_)
        r.add(m, f * Scalar(-1));
    return r;
}

GrassmannElement GrassmannElement::multiply(DualAlgebra& alg, const GrassmannElement& a, const GrassmannElement& b)
{
    std::map<Mask, TermCollector<Label>> acc;
    for (const auto& [ma, fa] : a.terms_)
        for (const auto& [mb, fb] : b.terms_) {
            int s = grassmann_sign(ma, mb);
            if (s == 0)
                continue;
            acc[ma | mb].add(alg.product(fa, fb), Scalar(s));
        }
    GrassmannElement r;
    for (auto& [m, c] : acc) {
        Functional f = c.finish();
        if (!f.is_zero())
            r.terms_[m] = std::move(f);
    }
    return r;
}

std::string GrassmannElement::to_string(const CoalgebraSpec& spec) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [m, f] : terms_) {
        if (!out.empty())
            out += " + ";
        std::string mono;
        for (int g = 0; g < 32; ++g)
            if (m & (Mask(1) << g))
                mono += "γ" + std::to_string(g + 1);
        out += (mono.empty() ? "1" : mono) + "⊗(" + format_functional(spec, f) + ")";
    }
    return out;
}

CoalgebraSpec as_graded_even(const CoalgebraSpec& spec)
{
    std::vector<FamilyDecl> fams = spec.families();
    for (auto& f : fams)
        f.parity = 0;
    return CoalgebraSpec(spec.name() + " (graded, all even)", fams, spec.delta_rule(), spec.coderivation_rule(),
                         spec.shift_bound(), true);
}

CheckReport grassmann_envelope_check(const CoalgebraSpec& spec, const GrassmannOptions& opts)
{
    if (!spec.graded())
        throw PreconditionError("the Grassmann envelope check needs a graded spec");
    if (opts.generators < 3 || opts.generators > 16)
        throw PreconditionError("the Grassmann envelope check needs between 3 and 16 generators");
    if (opts.samples < 1 || opts.terms_per_element < 1)
        throw PreconditionError("sample and term counts must be positive");

    using Mask = GrassmannElement::Mask;
    std::vector<Mask> masks[2];
    for (Mask m = 0; m < (Mask(1) << opts.generators); ++m)
        masks[std::popcount(m) % 2].push_back(m);
    std::vector<Label> labels = spec.labels_up_to(opts.max_index);

    std::mt19937_64 rng(opts.seed);
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    auto random_element = [&] {
        GrassmannElement x;
        for (int t = 0; t < opts.terms_per_element; ++t) {
            const Label& l = labels[pick(labels.size())];
            const auto& ms = masks[l.parity];
            Mask m = ms[pick(ms.size())];
            long num = static_cast<long>(pick(5)) - 2;
            if (num == 0)
                num = 3;
            x.add(m, FormalVector::basis(l, Scalar(num)));
        }
        return x;
    };

    DualAlgebra alg(spec);
    CheckReport report = CheckReport::started("grassmann-envelope", spec, opts.max_index);
    report.note = std::to_string(opts.generators) + " generators, " + std::to_string(opts.samples) +
                  " samples, seed " + std::to_string(opts.seed);
    for (int s = 0; s < opts.samples; ++s) {
        GrassmannElement x = random_element(), y = random_element();
        ++report.labels_checked;
        auto mul = [&](const GrassmannElement& a, const GrassmannElement& b) {
            return GrassmannElement::multiply(alg, a, b);
        };
        GrassmannElement comm = mul(x, y) - mul(y, x);
        std::string where = "sample " + std::to_string(s + 1) + ": x = " + x.to_string(spec) + ", y = " +
                            y.to_string(spec);
        if (!comm.is_zero()) {
            report.add_witness(Witness{where, comm.to_string(spec), "xy - yx"});
            continue;
        }
        GrassmannElement x2 = mul(x, x);
        GrassmannElement jordan = mul(mul(x2, y), x) - mul(x2, mul(y, x));
        if (!jordan.is_zero())
            report.add_witness(Witness{where, jordan.to_string(spec), "(x²y)x - x²(yx)"});
    }
    report.finish();
    return report;
}

} // namespace coalg
