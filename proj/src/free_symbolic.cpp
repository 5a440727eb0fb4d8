#include "homsuper/free_symbolic.hpp"

#include "homsuper/registry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace homsuper::free {

// ---------------------------------------------------------------------------
// FreeTerm

namespace {

std::string alpha_suffix(unsigned k) { return k == 0 ? std::string() : "^" + std::to_string(k); }

std::string alpha_prefix(unsigned k) {
    if (k == 0)
        return {};
    return k == 1 ? "a" : "a" + std::to_string(k);
}

} // namespace

FreeTerm FreeTerm::generator(unsigned gen, unsigned alpha) {
    if (gen >= max_generators)
        throw Error("free generator index out of range");
    auto n = std::make_shared<Node>();
    n->leaf = true;
    n->gen = gen;
    n->alpha = alpha;
    n->size = 1;
    n->mask = std::uint32_t{1} << gen;
    n->key = "g" + std::to_string(gen) + alpha_suffix(alpha);
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::product(const FreeTerm& left, const FreeTerm& right, unsigned alpha) {
    auto n = std::make_shared<Node>();
    n->leaf = false;
    n->alpha = alpha;
    n->left = std::make_unique<FreeTerm>(left);
    n->right = std::make_unique<FreeTerm>(right);
    n->size = left.size() + right.size();
    n->mask = left.parity_mask() ^ right.parity_mask();
    n->key = "(" + left.key() + "*" + right.key() + ")" + alpha_suffix(alpha);
    return FreeTerm(std::move(n));
}

FreeTerm FreeTerm::with_alpha(unsigned k) const {
    if (k == 0)
        return *this;
    if (is_leaf())
        return generator(gen(), alpha() + k);
    return product(left(), right(), alpha() + k);
}

bool FreeTerm::alpha_on_leaves_only() const {
    if (is_leaf())
        return true;
    return alpha() == 0 && left().alpha_on_leaves_only() && right().alpha_on_leaves_only();
}

unsigned FreeTerm::min_leaf_alpha() const {
    if (is_leaf())
        return alpha();
    return alpha() + std::min(left().min_leaf_alpha(), right().min_leaf_alpha());
}

FreeTerm FreeTerm::shift_leaves(int delta) const {
    if (is_leaf()) {
        const int k = static_cast<int>(alpha()) + delta;
        if (k < 0)
            throw std::logic_error("negative alpha exponent");
        return generator(gen(), static_cast<unsigned>(k));
    }
    if (alpha() != 0)
        throw std::logic_error("shift_leaves on a term with alpha over a product");
    return product(left().shift_leaves(delta), right().shift_leaves(delta));
}

std::string FreeTerm::to_string(const std::vector<std::string>& names) const {
    if (is_leaf()) {
        const std::string& name = gen() < names.size() ? names[gen()] : "g" + std::to_string(gen());
        return alpha() == 0 ? name : alpha_prefix(alpha()) + "(" + name + ")";
    }
    auto side = [&](const FreeTerm& t) {
        const std::string s = t.to_string(names);
        return t.is_leaf() || t.alpha() != 0 ? s : "(" + s + ")";
    };
    const std::string body = side(left()) + "*" + side(right());
    return alpha() == 0 ? body : alpha_prefix(alpha()) + "(" + body + ")";
}

// ---------------------------------------------------------------------------
// ParityAssignment

std::uint32_t ParityAssignment::odd_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < parities.size(); ++i)
        if (parities[i] == Parity::Odd)
            m |= std::uint32_t{1} << i;
    return m;
}

Parity ParityAssignment::parity_of(const FreeTerm& t) const {
    return (std::popcount(t.parity_mask() & odd_mask()) & 1) ? Parity::Odd : Parity::Even;
}

std::string ParityAssignment::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i)
            out += " ";
        out += "|" + generators[i] + "|=" + (i < parities.size() && parities[i] == Parity::Odd ? "1" : "0");
    }
    return out;
}

// ---------------------------------------------------------------------------
// FreeExpr

void FreeExpr::add(const FreeTerm& t, const Scalar& c) {
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

FreeExpr& FreeExpr::operator+=(const FreeExpr& other) {
    for (const auto& [t, c] : other.terms_)
        add(t, c);
    return *this;
}

FreeExpr& FreeExpr::operator-=(const FreeExpr& other) {
    for (const auto& [t, c] : other.terms_)
        add(t, -c);
    return *this;
}

FreeExpr& FreeExpr::operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_)
        coeff *= c;
    return *this;
}

bool FreeExpr::operator==(const FreeExpr& other) const {
    if (terms_.size() != other.terms_.size())
        return false;
    return std::equal(terms_.begin(), terms_.end(), other.terms_.begin(), [](const auto& a, const auto& b) {
        return a.first.key() == b.first.key() && a.second == b.second;
    });
}

std::string FreeExpr::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        const bool negative = sgn(c) < 0;
        const Scalar magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (magnitude != 1)
            out += homsuper::to_string(magnitude) + " ";
        out += t.to_string(names);
        first = false;
    }
    return out;
}

FreeExpr multiply(const FreeExpr& a, const FreeExpr& b) {
    FreeExpr out;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            out.add(FreeTerm::product(ta, tb), ca * cb);
    return out;
}

FreeExpr supercommute(const FreeExpr& a, const FreeExpr& b, const ParityAssignment& parities) {
    FreeExpr out;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            const Scalar c = ca * cb;
            out.add(FreeTerm::product(ta, tb), c);
            const int sign = koszul_sign(parities.parity_of(ta) * parities.parity_of(tb));
            out.add(FreeTerm::product(tb, ta), -sign * c);
        }
    return out;
}

FreeExpr apply_alpha(const FreeExpr& e, unsigned k) {
    if (k == 0)
        return e;
    FreeExpr out;
    for (const auto& [t, c] : e.terms())
        out.add(t.with_alpha(k), c);
    return out;
}

// ---------------------------------------------------------------------------
// Template expansion

namespace {

class Expander {
public:
    Expander(const std::vector<std::string>& vars, const ParityAssignment& parities, const Interpretation& interp)
        : vars_(vars), parities_(parities), interp_(interp) {}

    FreeExpr run(const Expr& e, const std::vector<unsigned>& env) {
        return std::visit([&](const auto& n) { return visit(n, env); }, e.node);
    }

private:
    unsigned index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw Error("unassigned generator '" + name + "'");
        return static_cast<unsigned>(it - vars_.begin());
    }

    Parity parity_sum(const ParitySum& ps, const std::vector<unsigned>& env) const {
        Parity p = Parity::Even;
        for (const auto& v : ps.vars)
            p = p + parities_.parities[env[index_of(v)]];
        return p;
    }

    int sign_of(const SignFactor& s, const std::vector<unsigned>& env) const {
        return koszul_sign(parity_sum(s.left, env) * parity_sum(s.right, env));
    }

    FreeExpr star(const FreeExpr& a, const FreeExpr& b) const {
        return interp_.star == Interpretation::Binary::Product ? multiply(a, b) : supercommute(a, b, parities_);
    }

    FreeExpr visit(const ZeroNode&, const std::vector<unsigned>&) { return {}; }
    FreeExpr visit(const VariableNode& v, const std::vector<unsigned>& env) {
        return FreeExpr(FreeTerm::generator(env[index_of(v.name)]));
    }
    FreeExpr visit(const AlphaNode& a, const std::vector<unsigned>& env) {
        return apply_alpha(run(*a.operand, env), a.power);
    }
    FreeExpr visit(const ProductNode& p, const std::vector<unsigned>& env) {
        FreeExpr l = run(*p.left, env);
        FreeExpr r = run(*p.right, env);
        if (p.slot == OpSlot::Bracket)
            return supercommute(l, r, parities_);
        return star(l, r);
    }
    FreeExpr visit(const TernaryNode& t, const std::vector<unsigned>& env) {
        const FreeExpr a = run(*t.a, env);
        const FreeExpr b = run(*t.b, env);
        const FreeExpr c = run(*t.c, env);
        switch (interp_.brace) {
        case Interpretation::Ternary::HomAssociator:
            return multiply(multiply(a, b), apply_alpha(c, 1)) - multiply(apply_alpha(a, 1), multiply(b, c));
        case Interpretation::Ternary::LeibnizYamaguti: {
            FreeExpr out = multiply(multiply(a, b), apply_alpha(c, 1));
            return out *= Scalar(-1);
        }
        case Interpretation::Ternary::None:
            break;
        }
        throw Error("missing op-slot '{,,}' in this interpretation");
    }
    FreeExpr visit(const ScaleNode& s, const std::vector<unsigned>& env) {
        FreeExpr out = run(*s.operand, env);
        return out *= s.factor;
    }
    FreeExpr visit(const SignNode& s, const std::vector<unsigned>& env) {
        FreeExpr out = run(*s.operand, env);
        if (sign_of(s.sign, env) < 0)
            out *= Scalar(-1);
        return out;
    }
    FreeExpr visit(const SumNode& s, const std::vector<unsigned>& env) {
        FreeExpr out;
        for (const auto& t : s.terms) {
            if (t.negated)
                out -= run(*t.expr, env);
            else
                out += run(*t.expr, env);
        }
        return out;
    }
    FreeExpr visit(const CyclicNode& c, const std::vector<unsigned>& env) {
        const unsigned x = index_of(c.vars[0]), y = index_of(c.vars[1]), z = index_of(c.vars[2]);
        const unsigned src[3] = {env[x], env[y], env[z]};
        FreeExpr out;
        std::vector<unsigned> permuted = env;
        for (int shift = 0; shift < 3; ++shift) {
            permuted[x] = src[shift % 3];
            permuted[y] = src[(shift + 1) % 3];
            permuted[z] = src[(shift + 2) % 3];
            int sign = 1;
            for (const auto& s : c.leading)
                sign *= sign_of(s, permuted);
            FreeExpr body = run(*c.body, permuted);
            if (sign < 0)
                out -= body;
            else
                out += body;
        }
        return out;
    }

    const std::vector<std::string>& vars_;
    const ParityAssignment& parities_;
    const Interpretation& interp_;
};

} // namespace

FreeExpr expand_template(const Identity& identity, const ParityAssignment& parities,
                         const Interpretation& interpretation) {
    const auto vars = identity_variables(identity);
    if (vars.size() > max_generators)
        throw Error("identity has " + std::to_string(vars.size()) + " variables; at most " +
                    std::to_string(max_generators) + " free generators are supported");
    if (parities.parities.size() < vars.size())
        throw Error("unassigned generator '" + vars[parities.parities.size()] + "'");
    std::vector<unsigned> env(vars.size());
    for (unsigned i = 0; i < env.size(); ++i)
        env[i] = i;
    Expander ex(vars, parities, interpretation);
    return ex.run(*identity.lhs, env) - ex.run(*identity.rhs, env);
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

FreeTerm push_alpha(const FreeTerm& t, unsigned extra, RuleCounts* counts) {
    const unsigned k = t.alpha() + extra;
    if (t.is_leaf())
        return FreeTerm::generator(t.gen(), k);
    if (k > 0 && counts)
        ++counts->alpha_distribution;
    return FreeTerm::product(push_alpha(t.left(), k, counts), push_alpha(t.right(), k, counts));
}

class Normalizer {
public:
    Normalizer(const ParityAssignment& parities, RuleCounts* counts, const NormalizeLimits& limits)
        : parities_(parities), counts_(counts), limits_(limits) {}

    FreeExpr term(const FreeTerm& t) {
        if (t.is_leaf())
            return FreeExpr(t);
        if (auto it = memo_.find(t); it != memo_.end())
            return it->second;
        const FreeExpr l = term(t.left());
        const FreeExpr r = term(t.right());
        FreeExpr out;
        for (const auto& [lt, lc] : l.terms())
            for (const auto& [rt, rc] : r.terms()) {
                FreeExpr piece = reduce(lt, rt);
                piece *= lc * rc;
                out += piece;
            }
        for (const auto& [nt, c] : out.terms())
            if (parities_.parity_of(nt) != parities_.parity_of(t))
                throw std::logic_error("rewrite changed the parity of a term");
        memo_.emplace(t, out);
        return out;
    }

private:
    // Product of two normal forms; only the root can be a redex.
    FreeExpr reduce(const FreeTerm& l, const FreeTerm& r) {
        if (l.is_leaf() || r.min_leaf_alpha() == 0)
            return FreeExpr(FreeTerm::product(l, r));
        if (++steps_ > limits_.max_steps)
            throw std::logic_error("leibniz_normalize exceeded its step bound");
        if (counts_)
            ++counts_->leibniz_rewrite;
        const FreeTerm& p = l.left();
        const FreeTerm& q = l.right();
        const FreeTerm stripped = r.shift_leaves(-1);
        const int sign = koszul_sign(parities_.parity_of(p) * parities_.parity_of(q));
        FreeExpr out = term(FreeTerm::product(p.shift_leaves(1), FreeTerm::product(q, stripped)));
        FreeExpr second = term(FreeTerm::product(q.shift_leaves(1), FreeTerm::product(p, stripped)));
        second *= Scalar(-sign);
        out += second;
        return out;
    }

    const ParityAssignment& parities_;
    RuleCounts* counts_;
    NormalizeLimits limits_;
    std::size_t steps_ = 0;
    std::map<FreeTerm, FreeExpr, TermOrder> memo_;
};

} // namespace

FreeExpr alpha_distribute(const FreeExpr& e, RuleCounts* counts) {
    FreeExpr out;
    for (const auto& [t, c] : e.terms())
        out.add(push_alpha(t, 0, counts), c);
    return out;
}

FreeExpr leibniz_normalize(const FreeExpr& e, const ParityAssignment& parities, RuleCounts* counts,
                           const NormalizeLimits& limits) {
    Normalizer norm(parities, counts, limits);
    FreeExpr out;
    for (const auto& [t, c] : e.terms()) {
        if (!t.alpha_on_leaves_only())
            throw Error("leibniz_normalize needs an alpha-distributed expression");
        FreeExpr nf = norm.term(t);
        nf *= c;
        out += nf;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Proof replay

namespace {

using Binary = Interpretation::Binary;
using Ternary = Interpretation::Ternary;

constexpr Interpretation plain{Binary::Product, Ternary::None};
constexpr Interpretation akivis{Binary::Supercommutator, Ternary::HomAssociator};
constexpr Interpretation yamaguti{Binary::Supercommutator, Ternary::LeibnizYamaguti};

std::vector<ProofTarget> make_targets() {
    std::vector<ProofTarget> t;
    t.push_back({"llsi", "the rewrite rule itself", {{"LLSI", plain}}, true});
    t.push_back({"akivis-free",
                 "supercommutator and Hom-associator of any algebra satisfy the Hom-super Akivis identity",
                 {{"SKEW_SUPER", akivis}, {"AKIVIS", akivis}},
                 false});
    t.push_back({"eq12", "Akivis identity in Leibniz form", {{"AKIVIS_LEIBNIZ_FORM", plain}}, true});
    t.push_back({"prop32-i", "(x*y + s(x,y) y*x)*a(z) = 0", {{"PROP32_I", plain}}, true});
    t.push_back({"prop32-ii", "a(x)*[y,z] = [x*y,a(z)] + s(x,y) [a(y),x*z]", {{"PROP32_II", plain}}, true});
    t.push_back({"ternary-equiv",
                 "three expressions of the Leibniz-Yamaguti ternary product agree",
                 {{"TERNARY_EQUIV_ASSOC", plain}, {"TERNARY_EQUIV_HALF", plain}},
                 true});
    for (int i = 1; i <= 8; ++i) {
        const std::string id = "SHLY" + std::to_string(i);
        t.push_back({"shly" + std::to_string(i), id + " for the bracket and {x,y,z} = -(x*y)*a(z)",
                     {{id, yamaguti}}, true});
    }
    return t;
}

} // namespace

const std::vector<ProofTarget>& proof_targets() {
    static const std::vector<ProofTarget> targets = make_targets();
    return targets;
}

const ProofTarget& find_proof_target(std::string_view name) {
    for (const auto& t : proof_targets())
        if (t.name == name)
            return t;
    throw Error("unknown proof target '" + std::string(name) + "'");
}

namespace {

void prove_into(ProofReport& report, const Identity& identity, const std::string& name,
                const Interpretation& interpretation, bool assume_leibniz) {
    const auto vars = identity_variables(identity);
    if (vars.size() > max_generators)
        throw Error("identity " + name + " needs more than " + std::to_string(max_generators) + " generators");
    const std::size_t g = vars.size();
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << g); ++bits) {
        ParityCertificate cert;
        cert.identity = name;
        cert.parities.generators = vars;
        // First generator is the most significant bit.
        for (std::size_t i = 0; i < g; ++i)
            cert.parities.parities.push_back((bits >> (g - 1 - i)) & 1u ? Parity::Odd : Parity::Even);
        const FreeExpr expanded = expand_template(identity, cert.parities, interpretation);
        cert.expanded_terms = expanded.size();
        FreeExpr residual = alpha_distribute(expanded, &cert.rules);
        if (assume_leibniz)
            residual = leibniz_normalize(residual, cert.parities, &cert.rules);
        cert.zero = residual.is_zero();
        cert.residual = std::move(residual);
        report.rules += cert.rules;
        report.certificates.push_back(std::move(cert));
    }
}

void finish(ProofReport& report) {
    const bool all_zero = std::all_of(report.certificates.begin(), report.certificates.end(),
                                      [](const ParityCertificate& c) { return c.zero; });
    report.verdict = all_zero ? ProofVerdict::Proved : ProofVerdict::Inconclusive;
}

} // namespace

ProofReport prove_identity_free(std::string_view target) {
    const ProofTarget& t = find_proof_target(target);
    ProofReport report;
    report.target = t.name;
    for (const auto& ob : t.obligations)
        prove_into(report, builtin_identity(ob.identity), ob.identity, ob.interpretation, t.assumes_leibniz);
    finish(report);
    return report;
}

ProofReport prove_identity_free(const Identity& identity, std::string name, const Interpretation& interpretation,
                                bool assume_leibniz) {
    ProofReport report;
    report.target = name;
    prove_into(report, identity, name, interpretation, assume_leibniz);
    finish(report);
    return report;
}

} // namespace homsuper::free
