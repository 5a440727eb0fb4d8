#ifndef HOMSUPER_CONSTRUCTIONS_HPP
#define HOMSUPER_CONSTRUCTIONS_HPP

#include "homsuper/algebra.hpp"
#include "homsuper/checker.hpp"

#include <vector>

namespace homsuper {

/// Binary plus ternary product over one space, with a twisting map.
struct BinaryTernaryAlgebra {
    BilinearOp binary;
    TernaryOp ternary;
    EvenMap alpha;
    /// Suites run on the result before it was returned.
    std::vector<Report> postconditions;

    const SuperSpace& space() const { return binary.space(); }
    /// The same data as a HomSuperalgebra, so identities can be checked on it
    /// with "*" bound to the binary product and "{,,}" to the ternary one.
    HomSuperalgebra view() const { return HomSuperalgebra(binary, alpha, ternary); }
};

/// [x,y] = x*y - (-1)^{|x||y|} y*x.
BilinearOp supercommutator(const HomSuperalgebra& algebra);
/// as(x,y,z) = (x*y)*alpha(z) - alpha(x)*(y*z).
TernaryOp hom_associator(const HomSuperalgebra& algebra);
/// J(x,y,z) = (x*y)*a(z) + (-1)^{|x|(|y|+|z|)} (y*z)*a(x) + (-1)^{|z|(|x|+|y|)} (z*x)*a(y).
TernaryOp hom_super_jacobian(const HomSuperalgebra& algebra);

/// Supercommutator and Hom-associator of a multiplicative algebra. The AKIVIS
/// suite is run as a postcondition; a failure there is a logic_error.
BinaryTernaryAlgebra build_hom_akivis(const HomSuperalgebra& algebra, const CheckOptions& options = {});

/// Supercommutator with ternary {x,y,z} = -(x*y)*alpha(z) on a multiplicative
/// left Hom-Leibniz superalgebra; SHLY1..SHLY8 are verified before returning.
BinaryTernaryAlgebra build_hom_ly(const HomSuperalgebra& algebra, const CheckOptions& options = {});

/// Cyclic criterion for Hom-super Lie admissibility of a left Hom-Leibniz
/// superalgebra, cross-checked against HOM_SUPER_JACOBI on the
/// supercommutator algebra.
Report check_lie_admissible(const HomSuperalgebra& algebra, const CheckOptions& options = {});

/// Three expressions of the Leibniz-Yamaguti ternary product agree.
Report check_ternary_equivalence(const HomSuperalgebra& algebra, const CheckOptions& options = {});

/// x . y := y * x.
HomSuperalgebra left_to_right(const HomSuperalgebra& algebra);

/// (A, *, id) with endomorphism beta  ->  (A, beta o *, beta).
HomSuperalgebra yau_twist(const HomSuperalgebra& algebra, const EvenMap& beta, const CheckOptions& options = {});

/// The algebra (A, [,], alpha).
HomSuperalgebra supercommutator_algebra(const HomSuperalgebra& algebra);

} // namespace homsuper

#endif
