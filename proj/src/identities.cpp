#include "coalg/identities.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace coalg {

NATree na_leaf(int slot, int derivative)
{
    if (slot < 1)
        throw PreconditionError("variable slots start at 1");
    if (derivative < 0)
        throw PreconditionError("negative derivative order");
    auto n = std::make_shared<NANode>();
    n->slot = slot;
    n->derivative = derivative;
    return n;
}

NATree na_product(NATree left, NATree right)
{
    auto n = std::make_shared<NANode>();
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

namespace {

void collect_leaves(const NATree& t, std::vector<int>& out)
{
    if (t->is_leaf()) {
        out.push_back(t->slot);
        return;
    }
    collect_leaves(t->left, out);
    collect_leaves(t->right, out);
}

void render(const NATree& t, std::ostream& os, bool top)
{
    if (t->is_leaf()) {
        os << 'x' << t->slot << std::string(static_cast<std::size_t>(t->derivative), '\'');
        return;
    }
    if (!top)
        os << '(';
    render(t->left, os, false);
    os << ' ';
    render(t->right, os, false);
    if (!top)
        os << ')';
}

NATree map_leaves(const NATree& t, const std::vector<int>& mapping)
{
    if (t->is_leaf()) {
        auto s = static_cast<std::size_t>(t->slot - 1);
        if (s >= mapping.size())
            throw PreconditionError("slot mapping too short");
        return na_leaf(mapping[s], t->derivative);
    }
    return na_product(map_leaves(t->left, mapping), map_leaves(t->right, mapping));
}

int max_slot(const NATree& t)
{
    if (t->is_leaf())
        return t->slot;
    return std::max(max_slot(t->left), max_slot(t->right));
}

} // namespace

std::vector<int> leaf_order(const NATree& t)
{
    std::vector<int> out;
    collect_leaves(t, out);
    return out;
}

std::size_t leaf_count(const NATree& t)
{
    return t->is_leaf() ? 1 : leaf_count(t->left) + leaf_count(t->right);
}

std::string to_string(const NATree& t)
{
    std::ostringstream os;
    render(t, os, true);
    return os.str();
}

NAPoly::NAPoly(std::vector<Term> terms, SignMode signs) : terms_(std::move(terms)), signs_(signs)
{
    canonicalize();
}

void NAPoly::canonicalize()
{
    std::map<std::string, Term> merged;
    for (auto& [c, t] : terms_) {
        if (!t)
            throw PreconditionError("null monomial");
        auto [it, fresh] = merged.try_emplace(to_string(t), c, t);
        if (!fresh)
            it->second.first += c;
    }
    terms_.clear();
    arity_ = 0;
    for (auto& [key, term] : merged)
        if (sgn(term.first) != 0) {
            arity_ = std::max(arity_, max_slot(term.second));
            terms_.push_back(std::move(term));
        }
    signature_.resize(static_cast<std::size_t>(arity_), SlotParity::Any);
}

bool NAPoly::multilinear() const
{
    for (const auto& [c, t] : terms_) {
        std::vector<int> order = leaf_order(t);
        std::sort(order.begin(), order.end());
        if (static_cast<int>(order.size()) != arity_)
            return false;
        for (int i = 0; i < arity_; ++i)
            if (order[static_cast<std::size_t>(i)] != i + 1)
                return false;
    }
    return true;
}

NAPoly NAPoly::with_signature(std::string_view sig) const { return with_signature(parse_signature(sig)); }

NAPoly NAPoly::with_signature(std::vector<SlotParity> sig) const
{
    if (static_cast<int>(sig.size()) != arity_)
        throw PreconditionError("signature has " + std::to_string(sig.size()) + " slots, identity has " +
                                std::to_string(arity_));
    NAPoly out = *this;
    out.signature_ = std::move(sig);
    return out;
}

NAPoly NAPoly::with_sign_mode(SignMode m) const
{
    NAPoly out = *this;
    out.signs_ = m;
    return out;
}

NAPoly NAPoly::relabel(const std::vector<int>& mapping) const
{
    std::vector<int> sorted = mapping;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw PreconditionError("relabel needs a permutation of the slots");
    NAPoly out = substitute_slots(*this, mapping);
    std::vector<SlotParity> sig(signature_.size(), SlotParity::Any);
    for (std::size_t k = 0; k < signature_.size() && k < mapping.size(); ++k)
        sig[static_cast<std::size_t>(mapping[k] - 1)] = signature_[k];
    out.signature_ = std::move(sig);
    out.signs_ = signs_;
    return out;
}

namespace {

SignMode combine_modes(SignMode a, SignMode b) { return a != SignMode::Auto ? a : b; }

NAPoly combine(const NAPoly& a, const NAPoly& b, const Scalar& sb)
{
    std::vector<NAPoly::Term> terms = a.terms();
    for (const auto& [c, t] : b.terms())
        terms.emplace_back(c * sb, t);
    return NAPoly(std::move(terms), combine_modes(a.sign_mode(), b.sign_mode()));
}

} // namespace

NAPoly operator+(const NAPoly& a, const NAPoly& b) { return combine(a, b, 1); }
NAPoly operator-(const NAPoly& a, const NAPoly& b) { return combine(a, b, -1); }

NAPoly operator*(const Scalar& s, const NAPoly& a)
{
    std::vector<NAPoly::Term> terms;
    for (const auto& [c, t] : a.terms())
        terms.emplace_back(c * s, t);
    NAPoly out(std::move(terms), a.sign_mode());
    if (out.arity() == a.arity())
        out.signature_ = a.signature_;
    return out;
}

NAPoly product(const NAPoly& a, const NAPoly& b)
{
    std::vector<NAPoly::Term> terms;
    for (const auto& [ca, ta] : a.terms())
        for (const auto& [cb, tb] : b.terms())
            terms.emplace_back(ca * cb, na_product(ta, tb));
    return NAPoly(std::move(terms), combine_modes(a.sign_mode(), b.sign_mode()));
}

bool operator==(const NAPoly& a, const NAPoly& b)
{
    if (a.terms_.size() != b.terms_.size() || a.signature_ != b.signature_)
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].first != b.terms_[i].first || to_string(a.terms_[i].second) != to_string(b.terms_[i].second))
            return false;
    return true;
}

std::string to_string(const NAPoly& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, t] : p.terms()) {
        Scalar mag = abs(c);
        if (sgn(c) < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        if (mag != 1)
            os << to_string(mag) << ' ';
        bool bare = t->is_leaf() || mag == 1;
        if (!bare)
            os << '(';
        render(t, os, true);
        if (!bare)
            os << ')';
        first = false;
    }
    return os.str();
}

std::string signature_string(const std::vector<SlotParity>& sig)
{
    std::string out;
    for (SlotParity s : sig)
        out += s == SlotParity::Even ? 'e' : s == SlotParity::Odd ? 'o' : '*';
    return out;
}

std::vector<SlotParity> parse_signature(std::string_view sig)
{
    std::vector<SlotParity> out;
    for (std::size_t i = 0; i < sig.size(); ++i) {
        char ch = sig[i];
        if (ch == 'e' || ch == '0')
            out.push_back(SlotParity::Even);
        else if (ch == 'o' || ch == '1')
            out.push_back(SlotParity::Odd);
        else if (ch == '*')
            out.push_back(SlotParity::Any);
        else
            throw ParseError(std::string("signature character '") + ch + "' is not e, o, or *",
                             "column " + std::to_string(i + 1));
    }
    return out;
}

NAPoly na_var(int slot, int derivative) { return NAPoly({{Scalar(1), na_leaf(slot, derivative)}}); }
NAPoly commutator(const NAPoly& a, const NAPoly& b) { return product(a, b) - product(b, a); }
NAPoly associator(const NAPoly& a, const NAPoly& b, const NAPoly& c)
{
    return product(product(a, b), c) - product(a, product(b, c));
}

namespace {

NATree derive_tree_at(const NATree& t, std::size_t& target)
{
    if (t->is_leaf()) {
        if (target-- == 0)
            return na_leaf(t->slot, t->derivative + 1);
        return t;
    }
    NATree l = derive_tree_at(t->left, target);
    NATree r = derive_tree_at(t->right, target);
    return na_product(l, r);
}

/// Leibniz rule: the dual derivation applied to a product of leaves.
NAPoly derive(const NAPoly& p)
{
    std::vector<NAPoly::Term> terms;
    for (const auto& [c, t] : p.terms()) {
        std::size_t leaves = leaf_count(t);
        for (std::size_t k = 0; k < leaves; ++k) {
            std::size_t target = k;
            terms.emplace_back(c, derive_tree_at(t, target));
        }
    }
    return NAPoly(std::move(terms), p.sign_mode());
}

} // namespace

// ---- coidentity maps ----

CoidentityMap::CoidentityMap(int arity, std::vector<Branch> branches, TranslateOptions options)
    : arity_(arity), options_(options)
{
    auto key = [](const std::vector<CoOp>& ops) {
        std::vector<std::tuple<int, int, int>> k;
        for (const CoOp& op : ops)
            k.emplace_back(static_cast<int>(op.kind), op.position, op.amount);
        return k;
    };
    std::map<std::vector<std::tuple<int, int, int>>, Branch> merged;
    for (auto& b : branches) {
        auto [it, fresh] = merged.try_emplace(key(b.second), b);
        if (!fresh)
            it->second.first += b.first;
    }
    for (auto& [k, b] : merged)
        if (sgn(b.first) != 0)
            branches_.push_back(std::move(b));
}

namespace {

bool same_op(const CoOp& a, const CoOp& b)
{
    return a.kind == b.kind && a.position == b.position && a.amount == b.amount;
}

FormalTensor project_at(const FormalTensor& t, int position, int parity)
{
    std::vector<FormalTensor::Term> raw;
    for (const auto& term : t.terms())
        if (term.first[static_cast<std::size_t>(position)].parity == parity)
            raw.push_back(term);
    return FormalTensor::from_terms(t.arity(), std::move(raw));
}

} // namespace

FormalTensor CoidentityMap::apply(const CoalgebraSpec& spec, const Label& b) const
{
    auto step = [&](const FormalTensor& t, const CoOp& op) {
        if (t.is_zero())
            return t;
        switch (op.kind) {
        case CoOp::Kind::Delta:
            return apply_delta_at(spec, t, op.position, options_.koszul_pairing);
        case CoOp::Kind::Derive:
            return apply_d_at(spec, t, op.position, op.amount);
        case CoOp::Kind::Flip:
            return flip(t, op.position + 1, options_.graded);
        case CoOp::Kind::Project:
            return project_at(t, op.position, op.amount);
        }
        return t;
    };
    // Branches are sorted by op sequence; intermediate results along the
    // previous branch are reused for the shared prefix.
    std::vector<FormalTensor> stack{FormalTensor::basis({b})};
    const std::vector<CoOp>* prev = nullptr;
    std::vector<FormalTensor::Term> acc;
    for (const auto& [c, ops] : branches_) {
        std::size_t common = 0;
        if (prev)
            while (common < ops.size() && common < prev->size() && same_op(ops[common], (*prev)[common]))
                ++common;
        stack.resize(common + 1);
        for (std::size_t k = common; k < ops.size(); ++k)
            stack.push_back(step(stack.back(), ops[k]));
        prev = &ops;
        const FormalTensor& t = stack.back();
        if (t.is_zero())
            continue;
        if (t.arity() != arity_)
            throw PreconditionError("coidentity branch has the wrong arity");
        for (const auto& [k, v] : t.terms())
            acc.emplace_back(k, v * c);
    }
    return FormalTensor::from_terms(arity_, std::move(acc));
}

namespace {

std::string op_string(const CoOp& op, int arity)
{
    std::string core;
    int width = 1;
    switch (op.kind) {
    case CoOp::Kind::Delta:
        core = "Δ";
        break;
    case CoOp::Kind::Derive:
        core = op.amount == 1 ? "d" : "d^" + std::to_string(op.amount);
        break;
    case CoOp::Kind::Flip:
        core = "τ";
        width = 2;
        break;
    case CoOp::Kind::Project:
        core = op.amount ? "π₁" : "π₀";
        break;
    }
    if (arity == width)
        return core;
    std::string out = "(";
    for (int i = 0; i < op.position; ++i)
        out += "id⊗";
    out += core;
    for (int i = op.position + width; i < arity; ++i)
        out += "⊗id";
    return out + ")";
}

} // namespace

std::string CoidentityMap::to_string() const
{
    if (branches_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, ops] : branches_) {
        std::vector<std::string> parts;
        int arity = 1;
        for (const CoOp& op : ops) {
            parts.push_back(op_string(op, arity));
            if (op.kind == CoOp::Kind::Delta)
                ++arity;
        }
        std::string body;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            body += *it;
        if (body.empty())
            body = "id";
        Scalar mag = abs(c);
        if (sgn(c) < 0)
            out += first ? "-" : " - ";
        else if (!first)
            out += " + ";
        if (mag != 1)
            out += coalg::to_string(mag) + "·";
        out += body;
        first = false;
    }
    return out;
}

namespace {

// Later ops only touch positions right of a finished leaf, so its parity
// projection can be applied as soon as the leaf is emitted.
void emit_tree(const NATree& t, int position, const std::vector<SlotParity>& sig, std::vector<CoOp>& ops)
{
    if (t->is_leaf()) {
        if (t->derivative > 0)
            ops.push_back({CoOp::Kind::Derive, position, t->derivative});
        SlotParity want = sig[static_cast<std::size_t>(t->slot - 1)];
        if (want != SlotParity::Any)
            ops.push_back({CoOp::Kind::Project, position, want == SlotParity::Odd ? 1 : 0});
        return;
    }
    ops.push_back({CoOp::Kind::Delta, position, 1});
    emit_tree(t->left, position, sig, ops);
    emit_tree(t->right, position + static_cast<int>(leaf_count(t->left)), sig, ops);
}

} // namespace

CoidentityMap translate(const NAPoly& p, TranslateOptions options)
{
    if (!p.multilinear())
        throw PreconditionError("identity is not multilinear: " + to_string(p));
    std::vector<CoidentityMap::Branch> branches;
    for (const auto& [c, t] : p.terms()) {
        std::vector<CoOp> ops;
        emit_tree(t, 0, p.signature(), ops);
        // Bubble sort the leaf order back to slot order with adjacent flips.
        std::vector<int> order = leaf_order(t);
        for (std::size_t pass = 0; pass < order.size(); ++pass)
            for (std::size_t i = 0; i + 1 < order.size(); ++i)
                if (order[i] > order[i + 1]) {
                    std::swap(order[i], order[i + 1]);
                    ops.push_back({CoOp::Kind::Flip, static_cast<int>(i), 1});
                }
        branches.emplace_back(c, std::move(ops));
    }
    return CoidentityMap(p.arity(), std::move(branches), options);
}

TranslateOptions options_for(const CoalgebraSpec& spec, const NAPoly& p, bool koszul_pairing)
{
    TranslateOptions o;
    o.graded = p.sign_mode() == SignMode::Graded || (p.sign_mode() == SignMode::Auto && spec.graded());
    o.koszul_pairing = koszul_pairing;
    return o;
}

CheckReport check_identity(const CoalgebraSpec& spec, const NAPoly& p, CheckRange range, bool koszul_pairing,
                           std::string name)
{
    CoidentityMap phi = translate(p, options_for(spec, p, koszul_pairing));
    if (name.empty())
        name = to_string(p);
    return run_label_check(spec, std::move(name), range, [&](const Label& b) { return phi.apply(spec, b); });
}

// ---- linearization ----

namespace {

void assign_fresh(const NATree& t, const std::vector<std::vector<int>>& slots_for, std::vector<std::size_t>& used,
                  const std::vector<int>& rename, std::vector<int>& out)
{
    if (t->is_leaf()) {
        auto v = static_cast<std::size_t>(rename[static_cast<std::size_t>(t->slot)]);
        out.push_back(slots_for[v][used[v]++]);
        return;
    }
    assign_fresh(t->left, slots_for, used, rename, out);
    assign_fresh(t->right, slots_for, used, rename, out);
}

NATree rebuild(const NATree& t, const std::vector<int>& leaf_slots, std::size_t& next)
{
    if (t->is_leaf())
        return na_leaf(leaf_slots[next++], t->derivative);
    NATree l = rebuild(t->left, leaf_slots, next);
    NATree r = rebuild(t->right, leaf_slots, next);
    return na_product(l, r);
}

} // namespace

NAPoly linearize(const NAPoly& p)
{
    for (SlotParity s : p.signature())
        if (s != SlotParity::Any)
            throw PreconditionError("linearize needs an ungraded identity; super-linearization is not supported");
    if (p.sign_mode() == SignMode::Graded)
        throw PreconditionError("linearize needs an ungraded identity; super-linearization is not supported");
    if (p.is_zero())
        return p;

    // Renumber variables by first appearance across the terms.
    std::vector<int> rename(static_cast<std::size_t>(p.arity()) + 1, -1);
    int vars = 0;
    for (const auto& [c, t] : p.terms())
        for (int s : leaf_order(t))
            if (rename[static_cast<std::size_t>(s)] < 0)
                rename[static_cast<std::size_t>(s)] = vars++;

    std::vector<int> degree;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        std::vector<int> deg(static_cast<std::size_t>(vars), 0);
        for (int s : leaf_order(p.terms()[i].second))
            ++deg[static_cast<std::size_t>(rename[static_cast<std::size_t>(s)])];
        if (i == 0)
            degree = deg;
        else if (deg != degree)
            throw PreconditionError("linearize needs a homogeneous identity: " + to_string(p));
    }

    std::vector<std::vector<int>> slots_for(static_cast<std::size_t>(vars));
    int next_slot = 1;
    for (std::size_t v = 0; v < slots_for.size(); ++v)
        for (int k = 0; k < degree[v]; ++k)
            slots_for[v].push_back(next_slot++);

    std::vector<NAPoly::Term> out;
    for (const auto& [c, t] : p.terms()) {
        // Base assignment: occurrences of each variable get its fresh slots in order;
        // then sum over every permutation of each variable's fresh slots.
        std::vector<std::vector<int>> perm = slots_for;
        for (;;) {
            std::vector<std::size_t> used(perm.size(), 0);
            std::vector<int> leaf_slots;
            assign_fresh(t, perm, used, rename, leaf_slots);
            std::size_t pos = 0;
            out.emplace_back(c, rebuild(t, leaf_slots, pos));
            std::size_t v = 0;
            while (v < perm.size() && !std::next_permutation(perm[v].begin(), perm[v].end()))
                ++v;
            if (v == perm.size())
                break;
        }
    }
    return NAPoly(std::move(out), p.sign_mode());
}

NAPoly substitute_slots(const NAPoly& p, const std::vector<int>& mapping)
{
    std::vector<NAPoly::Term> terms;
    for (const auto& [c, t] : p.terms())
        terms.emplace_back(c, map_leaves(t, mapping));
    return NAPoly(std::move(terms), p.sign_mode());
}

// ---- parser ----

namespace {

class IdentityParser {
public:
    explicit IdentityParser(std::string_view text) : s_(text) {}

    NAPoly parse()
    {
        skip();
        if (pos_ == s_.size())
            fail("empty identity");
        NAPoly p = sum();
        skip();
        if (pos_ != s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        if (p.is_zero())
            fail("identity is identically zero", 0);
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at)
    {
        throw ParseError(msg, "column " + std::to_string(at + 1));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c)
    {
        if (!peek(c))
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    NAPoly sum()
    {
        Scalar sign = 1;
        if (peek('+'))
            ++pos_;
        else if (peek('-')) {
            ++pos_;
            sign = -1;
        }
        NAPoly acc = sign * term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else
                return acc;
        }
    }

    bool at_factor()
    {
        skip();
        return pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '(' || s_[pos_] == '[');
    }

    NAPoly term()
    {
        skip();
        Scalar coeff = 1;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = number();
            if (peek('*'))
                ++pos_;
        }
        if (!at_factor())
            fail("expected a variable, '(' or '['");
        std::size_t start = pos_;
        NAPoly p = factor();
        if (peek('*')) {
            ++pos_;
            if (!at_factor())
                fail("expected a factor after '*'");
        }
        if (at_factor()) {
            p = product(p, factor());
            if (peek('*') || at_factor())
                fail("products of more than two factors need parentheses", start);
        }
        return coeff * p;
    }

    Scalar number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t den = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (den == pos_)
                fail("expected a denominator");
        }
        try {
            return parse_scalar(s_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            fail(e.what(), start);
        }
    }

    NAPoly primes(NAPoly p)
    {
        while (pos_ < s_.size() && s_[pos_] == '\'') {
            ++pos_;
            p = derive(p);
        }
        return p;
    }

    NAPoly factor()
    {
        skip();
        char c = s_[pos_];
        if (c == 'x') {
            std::size_t start = pos_++;
            if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '9')
                fail("variables are x1 .. x9", start);
            int slot = s_[pos_++] - '0';
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("variables are x1 .. x9", start);
            int d = 0;
            while (pos_ < s_.size() && s_[pos_] == '\'') {
                ++pos_;
                ++d;
            }
            return na_var(slot, d);
        }
        if (c == '[') {
            ++pos_;
            NAPoly a = sum();
            expect(',');
            NAPoly b = sum();
            expect(']');
            return primes(commutator(a, b));
        }
        ++pos_; // '('
        NAPoly a = sum();
        if (peek(',')) {
            ++pos_;
            NAPoly b = sum();
            expect(',');
            NAPoly d = sum();
            expect(')');
            return primes(associator(a, b, d));
        }
        expect(')');
        return primes(a);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

NAPoly parse_identity(std::string_view text) { return IdentityParser(text).parse(); }

// ---- catalog ----

namespace {

std::vector<CatalogEntry> make_catalog()
{
    auto entry = [](std::string name, std::string description, NAPoly p) {
        return CatalogEntry{std::move(name), std::move(description), std::move(p)};
    };
    std::vector<CatalogEntry> c;
    c.push_back(entry("associativity", "(xy)z = x(yz)", parse_identity("(x1 x2) x3 - x1 (x2 x3)")));
    c.push_back(entry("commutativity", "xy = yx, factors swapped without Koszul signs",
                      parse_identity("x1 x2 - x2 x1").with_sign_mode(SignMode::Plain)));
    c.push_back(entry("supercommutativity", "xy = (-1)^{|x||y|} yx",
                      parse_identity("x1 x2 - x2 x1").with_sign_mode(SignMode::Graded)));
    c.push_back(entry("anticommutativity", "xy = -yx", parse_identity("x1 x2 + x2 x1")));
    c.push_back(entry("jacobi", "(xy)z + (yz)x + (zx)y = 0", parse_identity("(x1 x2) x3 + (x2 x3) x1 + (x3 x1) x2")));
    c.push_back(entry("left-symmetry", "(x,y,z) = (y,x,z)", parse_identity("(x1,x2,x3) - (x2,x1,x3)")));
    c.push_back(entry("novikov-right-commutativity", "(xy)z = (xz)y", parse_identity("(x1 x2) x3 - (x1 x3) x2")));
    c.push_back(entry("right-alternativity-linearized", "(y,x,x) = 0, linearized",
                      parse_identity("(x1,x2,x3) + (x1,x3,x2)")));
    c.push_back(entry("moufang-linearized", "((xy)z)y = x((yz)y), linearized",
                      linearize(parse_identity("((x1 x2) x3) x2 - x1 ((x2 x3) x2)"))));
    c.push_back(entry("jordan-linearized", "(x^2 y)x = x^2 (yx), linearized",
                      linearize(parse_identity("((x1 x1) x2) x1 - (x1 x1) (x2 x1)"))));
    c.push_back(entry("left-nilpotent-3", "(xy)z = 0", parse_identity("(x1 x2) x3")));
    c.push_back(entry("metabelian", "[[x,y],[z,t]] = 0", parse_identity("[[x1,x2],[x3,x4]]")));
    c.push_back(entry("square-zero-products", "(xy)(zt) = 0", parse_identity("(x1 x2) (x3 x4)")));
    c.push_back(entry("left-nilpotent-4", "((xy)z)t = 0", parse_identity("((x1 x2) x3) x4")));
    c.push_back(entry("derivative-products", "x'y' = 0", parse_identity("x1' x2'")));
    return c;
}

} // namespace

const std::vector<CatalogEntry>& builtin_identities()
{
    static const std::vector<CatalogEntry> catalog = make_catalog();
    return catalog;
}

const CatalogEntry& lookup_identity(std::string_view name)
{
    for (const CatalogEntry& e : builtin_identities())
        if (e.name == name)
            return e;
    throw PreconditionError("unknown identity '" + std::string(name) + "'");
}

} // namespace coalg
