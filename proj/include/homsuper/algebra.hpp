#ifndef HOMSUPER_ALGEBRA_HPP
#define HOMSUPER_ALGEBRA_HPP

#include "homsuper/kernel.hpp"
#include "homsuper/report.hpp"

#include <optional>
#include <string>

namespace homsuper {

enum class Multiplicativity { Unchecked, Yes, No };

/// A graded space with a binary product, an optional ternary product and an
/// even twisting map.
class HomSuperalgebra {
public:
    HomSuperalgebra() = default;
    HomSuperalgebra(BilinearOp product, EvenMap alpha, std::optional<TernaryOp> ternary = std::nullopt);

    const SuperSpace& space() const noexcept { return product_.space(); }
    const BilinearOp& product() const noexcept { return product_; }
    const std::optional<TernaryOp>& ternary() const noexcept { return ternary_; }
    const EvenMap& alpha() const noexcept { return alpha_; }

    Multiplicativity multiplicative() const noexcept { return multiplicative_; }
    void set_multiplicative(Multiplicativity m) noexcept { multiplicative_ = m; }

    /// Structural equality; the cached multiplicativity flag is ignored.
    bool operator==(const HomSuperalgebra& other) const {
        return product_ == other.product_ && ternary_ == other.ternary_ && alpha_ == other.alpha_;
    }

private:
    BilinearOp product_;
    std::optional<TernaryOp> ternary_;
    EvenMap alpha_;
    Multiplicativity multiplicative_ = Multiplicativity::Unchecked;
};

/// Every structure constant violating the parity rule, listed by 0-based
/// index tuple (i, j, k) or (i, j, k, l).
Report check_grading(const BilinearOp& op);
Report check_grading(const TernaryOp& op);

/// alpha(b_i * b_j) == alpha(b_i) * alpha(b_j) on all basis pairs, and the
/// ternary analogue when a ternary product is present.
Report multiplicativity_report(const HomSuperalgebra& algebra, std::size_t cap = default_counterexample_cap);
/// As above and stores the verdict in the algebra's cached flag.
Report check_multiplicativity(HomSuperalgebra& algebra, std::size_t cap = default_counterexample_cap);

/// Cached flag if known, otherwise computed (without caching).
bool is_multiplicative(const HomSuperalgebra& algebra);

} // namespace homsuper

#endif
