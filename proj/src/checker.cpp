#include "homsuper/checker.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <thread>

namespace homsuper {

unsigned default_worker_count() {
    if (const char* env = std::getenv("HOMSUPER_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(std::min(v, 64L));
    }
    return 1;
}

BilinearOp supercommutator_op(const BilinearOp& product, bool graded) {
    const auto& s = product.space();
    const std::size_t n = s.dim();
    BilinearOp out(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int sign = graded ? koszul_sign(s.parity(i) * s.parity(j)) : 1;
            for (std::size_t k = 0; k < n; ++k)
                out.set(i, j, k, product.at(i, j, k) - sign * product.at(j, i, k));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Compilation

struct CompiledIdentity::Node {
    enum class Kind { Zero, Var, Alpha, Star, Bracket, Brace, Scale, Sign, Sum, Cyclic } kind = Kind::Zero;
    int var = -1;
    unsigned power = 0;
    Scalar factor;
    // A sign factor is (mask_left, mask_right): the exponent is
    // parity(sum of vars in left) * parity(sum of vars in right).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> signs;
    std::vector<int> children;
    std::vector<bool> negated;
    std::array<int, 3> cyc{-1, -1, -1};
};

namespace {

using Node = CompiledIdentity::Node;

Node make_node(Node::Kind kind) {
    Node n;
    n.kind = kind;
    return n;
}

class Compiler {
public:
    Compiler(std::vector<Node>& nodes, const std::vector<std::string>& vars) : nodes_(nodes), vars_(vars) {}

    unsigned max_power = 0;
    bool bracket = false;
    bool ternary = false;
    bool signs = false;

    int compile(const Expr& e) {
        return std::visit([&](const auto& n) { return emit(n); }, e.node);
    }

private:
    int var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw Error("unbound variable '" + name + "'");
        return static_cast<int>(it - vars_.begin());
    }

    std::uint64_t mask(const ParitySum& ps) const {
        std::uint64_t m = 0;
        for (const auto& v : ps.vars)
            m ^= std::uint64_t{1} << var_index(v);
        return m;
    }

    int push(Node n) {
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size() - 1);
    }

    int emit(const ZeroNode&) { return push(make_node(Node::Kind::Zero)); }
    int emit(const VariableNode& v) {
        Node n = make_node(Node::Kind::Var);
        n.var = var_index(v.name);
        return push(std::move(n));
    }
    int emit(const AlphaNode& a) {
        Node n = make_node(Node::Kind::Alpha);
        n.power = a.power;
        max_power = std::max(max_power, a.power);
        n.children = {compile(*a.operand)};
        return push(std::move(n));
    }
    int emit(const ProductNode& p) {
        Node n = make_node(p.slot == OpSlot::Star ? Node::Kind::Star : Node::Kind::Bracket);
        bracket = bracket || p.slot == OpSlot::Bracket;
        n.children = {compile(*p.left), compile(*p.right)};
        return push(std::move(n));
    }
    int emit(const TernaryNode& t) {
        Node n = make_node(Node::Kind::Brace);
        ternary = true;
        n.children = {compile(*t.a), compile(*t.b), compile(*t.c)};
        return push(std::move(n));
    }
    int emit(const ScaleNode& s) {
        Node n = make_node(Node::Kind::Scale);
        n.factor = s.factor;
        n.children = {compile(*s.operand)};
        return push(std::move(n));
    }
    int emit(const SignNode& s) {
        Node n = make_node(Node::Kind::Sign);
        signs = true;
        n.signs = {{mask(s.sign.left), mask(s.sign.right)}};
        n.children = {compile(*s.operand)};
        return push(std::move(n));
    }
    int emit(const SumNode& s) {
        Node n = make_node(Node::Kind::Sum);
        for (const auto& t : s.terms) {
            n.children.push_back(compile(*t.expr));
            n.negated.push_back(t.negated);
        }
        return push(std::move(n));
    }
    int emit(const CyclicNode& c) {
        Node n = make_node(Node::Kind::Cyclic);
        for (int i = 0; i < 3; ++i)
            n.cyc[i] = var_index(c.vars[i]);
        for (const auto& s : c.leading)
            n.signs.emplace_back(mask(s.left), mask(s.right));
        signs = signs || !c.leading.empty();
        n.children = {compile(*c.body)};
        return push(std::move(n));
    }

    std::vector<Node>& nodes_;
    const std::vector<std::string>& vars_;
};

// Per-check evaluation state: the algebra's operations with alpha powers and
// the bracket precomputed.
struct Context {
    const HomSuperalgebra& algebra;
    bool ungraded;
    std::vector<EvenMap> alpha_powers;
    std::optional<BilinearOp> bracket;

    Context(const HomSuperalgebra& a, unsigned max_power, bool need_bracket, bool ungraded_)
        : algebra(a), ungraded(ungraded_) {
        alpha_powers.push_back(EvenMap::identity(a.space()));
        for (unsigned k = 1; k <= max_power; ++k)
            alpha_powers.push_back(compose(a.alpha(), alpha_powers.back()));
        if (need_bracket)
            bracket = supercommutator_op(a.product(), !ungraded);
    }

    Parity parity_of_mask(std::uint64_t mask, std::span<const std::size_t> binding) const {
        if (ungraded)
            return Parity::Even;
        Parity p = Parity::Even;
        for (std::size_t v = 0; mask != 0; ++v, mask >>= 1)
            if (mask & 1u)
                p = p + algebra.space().parity(binding[v]);
        return p;
    }

    int sign_value(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& factors,
                   std::span<const std::size_t> binding) const {
        Parity exponent = Parity::Even;
        for (const auto& [l, r] : factors)
            exponent = exponent + parity_of_mask(l, binding) * parity_of_mask(r, binding);
        return koszul_sign(exponent);
    }
};

Vector eval_node(const std::vector<Node>& nodes, int id, const Context& ctx, std::span<const std::size_t> binding) {
    const Node& n = nodes[static_cast<std::size_t>(id)];
    const std::size_t dim = ctx.algebra.space().dim();
    switch (n.kind) {
    case Node::Kind::Zero:
        return Vector(dim);
    case Node::Kind::Var:
        return Vector::basis(dim, binding[static_cast<std::size_t>(n.var)]);
    case Node::Kind::Alpha:
        return ctx.alpha_powers[n.power].apply(eval_node(nodes, n.children[0], ctx, binding));
    case Node::Kind::Star:
        return ctx.algebra.product().eval(eval_node(nodes, n.children[0], ctx, binding),
                                          eval_node(nodes, n.children[1], ctx, binding));
    case Node::Kind::Bracket:
        return ctx.bracket->eval(eval_node(nodes, n.children[0], ctx, binding),
                                 eval_node(nodes, n.children[1], ctx, binding));
    case Node::Kind::Brace:
        return ctx.algebra.ternary()->eval(eval_node(nodes, n.children[0], ctx, binding),
                                           eval_node(nodes, n.children[1], ctx, binding),
                                           eval_node(nodes, n.children[2], ctx, binding));
    case Node::Kind::Scale: {
        Vector v = eval_node(nodes, n.children[0], ctx, binding);
        return v *= n.factor;
    }
    case Node::Kind::Sign: {
        Vector v = eval_node(nodes, n.children[0], ctx, binding);
        if (ctx.sign_value(n.signs, binding) < 0)
            v *= Scalar(-1);
        return v;
    }
    case Node::Kind::Sum: {
        Vector acc(dim);
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            Vector v = eval_node(nodes, n.children[i], ctx, binding);
            if (n.negated[i])
                acc -= v;
            else
                acc += v;
        }
        return acc;
    }
    case Node::Kind::Cyclic: {
        Vector acc(dim);
        std::vector<std::size_t> permuted(binding.begin(), binding.end());
        const auto x = static_cast<std::size_t>(n.cyc[0]);
        const auto y = static_cast<std::size_t>(n.cyc[1]);
        const auto z = static_cast<std::size_t>(n.cyc[2]);
        for (int shift = 0; shift < 3; ++shift) {
            // shift 0: (x,y,z); 1: x:=y, y:=z, z:=x; 2: x:=z, y:=x, z:=y.
            const std::size_t src[3] = {binding[x], binding[y], binding[z]};
            permuted[x] = src[shift % 3];
            permuted[y] = src[(shift + 1) % 3];
            permuted[z] = src[(shift + 2) % 3];
            Vector v = eval_node(nodes, n.children[0], ctx, permuted);
            if (ctx.sign_value(n.signs, permuted) < 0)
                acc -= v;
            else
                acc += v;
        }
        return acc;
    }
    }
    return Vector(dim);
}

} // namespace

CompiledIdentity::CompiledIdentity(const Identity& identity, std::string name)
    : name_(std::move(name)), source_(identity), variables_(identity_variables(identity)),
      nodes_(std::make_unique<std::vector<Node>>()) {
    if (variables_.size() > 64)
        throw Error("identity has more than 64 variables");
    Compiler c(*nodes_, variables_);
    lhs_ = c.compile(*identity.lhs);
    rhs_ = c.compile(*identity.rhs);
    max_power_ = c.max_power;
    needs_bracket_ = c.bracket;
    needs_ternary_ = c.ternary;
    has_signs_ = c.signs;
}

CompiledIdentity::~CompiledIdentity() = default;
CompiledIdentity::CompiledIdentity(CompiledIdentity&&) noexcept = default;
CompiledIdentity& CompiledIdentity::operator=(CompiledIdentity&&) noexcept = default;

namespace {

void require_slots(bool needs_ternary, bool has_signs, const HomSuperalgebra& algebra, bool ungraded,
                   const std::string& name) {
    if (needs_ternary && !algebra.ternary())
        throw Error("missing op-slot '{,,}': the algebra has no ternary product" +
                    (name.empty() ? std::string() : " (identity " + name + ")"));
    if (ungraded && has_signs)
        throw Error("the sign-free path cannot evaluate Koszul signs" +
                    (name.empty() ? std::string() : " (identity " + name + ")"));
}

} // namespace

Vector CompiledIdentity::residual(const HomSuperalgebra& algebra, std::span<const std::size_t> tuple,
                                  bool ungraded) const {
    require_slots(needs_ternary_, has_signs_, algebra, ungraded, name_);
    if (tuple.size() != variables_.size())
        throw Error("expected " + std::to_string(variables_.size()) + " bound variables, got " +
                    std::to_string(tuple.size()));
    for (std::size_t b : tuple)
        if (b >= algebra.space().dim())
            throw DimensionError("basis index out of range");
    Context ctx(algebra, max_power_, needs_bracket_, ungraded);
    return eval_node(*nodes_, lhs_, ctx, tuple) - eval_node(*nodes_, rhs_, ctx, tuple);
}

Report CompiledIdentity::check(const HomSuperalgebra& algebra, const CheckOptions& options, bool ungraded) const {
    require_slots(needs_ternary_, has_signs_, algebra, ungraded, name_);
    const Context ctx(algebra, max_power_, needs_bracket_, ungraded);
    const std::size_t n = algebra.space().dim();
    const std::size_t k = variables_.size();

    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= n;

    // Tuples are enumerated lexicographically, first variable most significant.
    auto run_range = [&](std::size_t begin, std::size_t end) {
        Report part;
        part.name = name_;
        part.variables = variables_;
        std::vector<std::size_t> tuple(k);
        for (std::size_t index = begin; index < end; ++index) {
            std::size_t rest = index;
            for (std::size_t v = k; v-- > 0;) {
                tuple[v] = rest % n;
                rest /= n;
            }
            ++part.tuples_checked;
            Vector r = eval_node(*nodes_, lhs_, ctx, tuple) - eval_node(*nodes_, rhs_, ctx, tuple);
            if (!r.is_zero()) {
                part.record_failure({tuple, std::move(r)}, options.counterexample_cap);
                if (options.stop_at_first)
                    break;
            }
        }
        return part;
    };

    unsigned workers = options.workers ? options.workers : default_worker_count();
    if (options.stop_at_first || total < 64)
        workers = 1;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

    std::vector<Report> parts(workers);
    if (workers == 1) {
        parts[0] = run_range(0, total);
    } else {
        std::vector<std::jthread> threads;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = std::min(total, w * chunk);
            const std::size_t e = std::min(total, b + chunk);
            threads.emplace_back([&, w, b, e] { parts[w] = run_range(b, e); });
        }
    }
    Report merged = merge_reports(name_, std::move(parts), options.counterexample_cap);
    merged.variables = variables_;
    return merged;
}

Vector eval_identity_on_tuple(const Identity& identity, const HomSuperalgebra& algebra,
                              const std::map<std::string, std::size_t>& binding) {
    CompiledIdentity compiled(identity);
    std::vector<std::size_t> tuple;
    for (const auto& v : compiled.variables()) {
        auto it = binding.find(v);
        if (it == binding.end())
            throw Error("unbound variable '" + v + "'");
        tuple.push_back(it->second);
    }
    return compiled.residual(algebra, tuple);
}

Report check_identity(const Identity& identity, const HomSuperalgebra& algebra, const CheckOptions& options,
                      std::string name) {
    return CompiledIdentity(identity, std::move(name)).check(algebra, options);
}

Report check_identity_ungraded(const Identity& identity, const HomSuperalgebra& algebra, const CheckOptions& options,
                               std::string name) {
    return CompiledIdentity(identity, std::move(name)).check(algebra, options, true);
}

} // namespace homsuper
