#ifndef HOMSUPER_CHECKER_HPP
#define HOMSUPER_CHECKER_HPP

#include "homsuper/algebra.hpp"
#include "homsuper/identity.hpp"
#include "homsuper/report.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace homsuper {

struct CheckOptions {
    std::size_t counterexample_cap = default_counterexample_cap;
    unsigned workers = 0;  // 0: HOMSUPER_WORKERS from the environment, else 1
    bool stop_at_first = false;
};

/// Value of HOMSUPER_WORKERS, clamped to [1, 64]; 1 when unset or invalid.
unsigned default_worker_count();

/// Graded commutator x*y - (-1)^{|x||y|} y*x as structure constants. With
/// `graded == false` every element is treated as even (plain commutator).
BilinearOp supercommutator_op(const BilinearOp& product, bool graded = true);

/// An identity resolved against its own variable list, ready for repeated
/// evaluation. Immutable; safe to share between threads.
class CompiledIdentity {
public:
    explicit CompiledIdentity(const Identity& identity, std::string name = {});
    ~CompiledIdentity();
    CompiledIdentity(CompiledIdentity&&) noexcept;
    CompiledIdentity& operator=(CompiledIdentity&&) noexcept;

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const Identity& source() const noexcept { return source_; }

    /// lhs - rhs with variable i bound to basis element tuple[i].
    /// `ungraded` evaluates with every element treated as even and rejects
    /// identities containing Koszul signs.
    Vector residual(const HomSuperalgebra& algebra, std::span<const std::size_t> tuple, bool ungraded = false) const;

    Report check(const HomSuperalgebra& algebra, const CheckOptions& options = {}, bool ungraded = false) const;

    struct Node;

private:
    std::string name_;
    Identity source_;
    std::vector<std::string> variables_;
    std::unique_ptr<std::vector<Node>> nodes_;
    int lhs_ = -1;
    int rhs_ = -1;
    unsigned max_power_ = 0;
    bool needs_bracket_ = false;
    bool needs_ternary_ = false;
    bool has_signs_ = false;
};

/// Residual of the identity on an explicit binding of variable names to
/// 0-based basis indices. Throws Error for an unbound variable or an op-slot
/// the algebra does not provide.
Vector eval_identity_on_tuple(const Identity& identity, const HomSuperalgebra& algebra,
                              const std::map<std::string, std::size_t>& binding);

/// Exhaustive check over all n^k homogeneous basis tuples.
Report check_identity(const Identity& identity, const HomSuperalgebra& algebra, const CheckOptions& options = {},
                      std::string name = {});

/// Same, through the sign-free path: every element is treated as even and
/// identities with Koszul signs are refused.
Report check_identity_ungraded(const Identity& identity, const HomSuperalgebra& algebra,
                               const CheckOptions& options = {}, std::string name = {});

} // namespace homsuper

#endif
