#ifndef HOMSUPER_FREE_SYMBOLIC_HPP
#define HOMSUPER_FREE_SYMBOLIC_HPP

// Symbolic side of the workbench: identities are expanded over free
// generators of chosen parity, alpha is pushed onto the leaves, and the left
// Hom-Leibniz law is applied as the rewrite
//
//     (P*Q)*alpha(R)  ->  alpha(P)*(Q*R) - (-1)^{|P||Q|} alpha(Q)*(P*R).
//
// A zero normal form certifies the identity in every multiplicative left
// Hom-Leibniz superalgebra. A nonzero one proves nothing.

#include "homsuper/identity.hpp"
#include "homsuper/kernel.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace homsuper::free {

inline constexpr std::size_t max_generators = 6;

/// Binary tree over generators 0..5. Leaves and inner nodes carry an
/// alpha exponent; after alpha_distribute only leaves do.
class FreeTerm {
public:
    static FreeTerm generator(unsigned gen, unsigned alpha = 0);
    static FreeTerm product(const FreeTerm& left, const FreeTerm& right, unsigned alpha = 0);

    bool is_leaf() const noexcept { return node_->leaf; }
    unsigned gen() const noexcept { return node_->gen; }
    unsigned alpha() const noexcept { return node_->alpha; }
    const FreeTerm& left() const { return *node_->left; }
    const FreeTerm& right() const { return *node_->right; }
    /// Number of leaves.
    std::size_t size() const noexcept { return node_->size; }
    /// Xor of 1 << gen over the leaves; the parity of the term is the parity
    /// of the odd generators in this mask.
    std::uint32_t parity_mask() const noexcept { return node_->mask; }
    /// Canonical serialisation used for ordering.
    const std::string& key() const noexcept { return node_->key; }

    /// alpha^k applied at the root.
    FreeTerm with_alpha(unsigned k) const;
    /// True if alpha sits only on leaves.
    bool alpha_on_leaves_only() const;
    /// Smallest leaf exponent (the term is alpha^m(t) for m up to this, once
    /// alpha is on leaves only).
    unsigned min_leaf_alpha() const;
    /// Adds `delta` (may be negative) to every leaf exponent. Requires
    /// alpha on leaves only and no exponent going below zero.
    FreeTerm shift_leaves(int delta) const;

    std::string to_string(const std::vector<std::string>& names) const;

    bool operator==(const FreeTerm& other) const { return node_ == other.node_ || node_->key == other.node_->key; }

private:
    struct Node {
        bool leaf = true;
        unsigned gen = 0;
        unsigned alpha = 0;
        std::unique_ptr<FreeTerm> left;
        std::unique_ptr<FreeTerm> right;
        std::size_t size = 1;
        std::uint32_t mask = 0;
        std::string key;
    };
    explicit FreeTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Order: tree size, then key.
struct TermOrder {
    bool operator()(const FreeTerm& a, const FreeTerm& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.key() < b.key();
    }
};

/// Parities of the generators, by index.
struct ParityAssignment {
    std::vector<std::string> generators;
    std::vector<Parity> parities;

    std::uint32_t odd_mask() const;
    Parity parity_of(const FreeTerm& t) const;
    std::string to_string() const;
};

/// Formal Q-linear combination of FreeTerms; no zero coefficients.
class FreeExpr {
public:
    using Terms = std::map<FreeTerm, Scalar, TermOrder>;

    FreeExpr() = default;
    explicit FreeExpr(const FreeTerm& t, Scalar c = 1) { add(t, std::move(c)); }

    void add(const FreeTerm& t, const Scalar& c);
    FreeExpr& operator+=(const FreeExpr& other);
    FreeExpr& operator-=(const FreeExpr& other);
    FreeExpr& operator*=(const Scalar& c);
    friend FreeExpr operator+(FreeExpr a, const FreeExpr& b) { return a += b; }
    friend FreeExpr operator-(FreeExpr a, const FreeExpr& b) { return a -= b; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }

    std::string to_string(const std::vector<std::string>& names) const;

    bool operator==(const FreeExpr& other) const;

private:
    Terms terms_;
};

/// Bilinear free product.
FreeExpr multiply(const FreeExpr& a, const FreeExpr& b);
/// Graded commutator a*b - (-1)^{|a||b|} b*a, termwise.
FreeExpr supercommute(const FreeExpr& a, const FreeExpr& b, const ParityAssignment& parities);
/// alpha^k at the root of every term (not distributed).
FreeExpr apply_alpha(const FreeExpr& e, unsigned k);

/// What the op-slots of an identity mean over the free algebra. "[,]" is
/// always the supercommutator of the free product.
struct Interpretation {
    enum class Binary { Product, Supercommutator };
    enum class Ternary { None, HomAssociator, LeibnizYamaguti };
    Binary star = Binary::Product;
    Ternary brace = Ternary::None;
};

/// Residual lhs - rhs over the free algebra on the identity's variables,
/// with signs evaluated under `parities` and cyclic sums expanded. Alpha is
/// left where the identity puts it.
FreeExpr expand_template(const Identity& identity, const ParityAssignment& parities,
                         const Interpretation& interpretation = {});

struct RuleCounts {
    std::size_t alpha_distribution = 0;
    std::size_t leibniz_rewrite = 0;

    RuleCounts& operator+=(const RuleCounts& o) {
        alpha_distribution += o.alpha_distribution;
        leibniz_rewrite += o.leibniz_rewrite;
        return *this;
    }
};

/// alpha(a*b) -> alpha(a)*alpha(b) until alpha sits on leaves only.
FreeExpr alpha_distribute(const FreeExpr& e, RuleCounts* counts = nullptr);

struct NormalizeLimits {
    /// Upper bound on rewrite steps for a whole call; exceeding it is a
    /// logic_error (it would mean the termination measure is broken).
    std::size_t max_steps = 50'000'000;
};

/// Normal form under the oriented left Hom-Leibniz rule. Input must be
/// alpha-distributed.
FreeExpr leibniz_normalize(const FreeExpr& e, const ParityAssignment& parities, RuleCounts* counts = nullptr,
                           const NormalizeLimits& limits = {});

// ---------------------------------------------------------------------------
// Proof replay

struct ProofObligation {
    std::string identity;  // built-in name
    Interpretation interpretation;
};

struct ProofTarget {
    std::string name;
    std::string description;
    std::vector<ProofObligation> obligations;
    bool assumes_leibniz = true;
};

const std::vector<ProofTarget>& proof_targets();
const ProofTarget& find_proof_target(std::string_view name);

struct ParityCertificate {
    std::string identity;
    ParityAssignment parities;
    bool zero = false;
    FreeExpr residual;  // surviving normal-form terms when not zero
    std::size_t expanded_terms = 0;
    RuleCounts rules;
};

enum class ProofVerdict { Proved, Inconclusive };

struct ProofReport {
    std::string target;
    ProofVerdict verdict = ProofVerdict::Inconclusive;
    std::vector<ParityCertificate> certificates;
    RuleCounts rules;

    bool proved() const noexcept { return verdict == ProofVerdict::Proved; }
};

/// Runs every obligation of the target under all 2^g parity assignments.
ProofReport prove_identity_free(std::string_view target);

/// Same for an arbitrary identity (all parity assignments).
ProofReport prove_identity_free(const Identity& identity, std::string name, const Interpretation& interpretation,
                                bool assume_leibniz);

} // namespace homsuper::free

#endif
