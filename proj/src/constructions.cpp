#include "homsuper/constructions.hpp"

#include "homsuper/registry.hpp"

#include <stdexcept>

namespace homsuper {

namespace {

std::string describe_failure(const Report& r) {
    std::string out = r.name;
    if (!r.counterexamples.empty()) {
        out += " at (";
        const auto& t = r.counterexamples.front().tuple;
        for (std::size_t i = 0; i < t.size(); ++i)
            out += (i ? ",b" : "b") + std::to_string(t[i] + 1);
        out += ")";
    }
    return out;
}

void require_multiplicative(const HomSuperalgebra& algebra, const std::string& what) {
    if (algebra.multiplicative() == Multiplicativity::Yes)
        return;
    if (algebra.multiplicative() == Multiplicativity::No)
        throw PreconditionError(what + " requires a multiplicative algebra");
    const Report r = multiplicativity_report(algebra, 1);
    if (!r.passed)
        throw PreconditionError(what + " requires a multiplicative algebra; failed " + describe_failure(r));
}

void require_grading(const HomSuperalgebra& algebra, const std::string& what) {
    const Report r = check_grading(algebra.product());
    if (!r.passed)
        throw PreconditionError(what + " requires a parity-respecting product; failed " + describe_failure(r));
}

void require_leibniz(const HomSuperalgebra& algebra, const std::string& what) {
    CheckOptions first;
    first.stop_at_first = true;
    const Report r = compiled_builtin("LLSI").check(algebra, first);
    if (!r.passed)
        throw PreconditionError(what + " requires a left Hom-Leibniz superalgebra; failed " + describe_failure(r));
}

} // namespace

BilinearOp supercommutator(const HomSuperalgebra& algebra) { return supercommutator_op(algebra.product()); }

HomSuperalgebra supercommutator_algebra(const HomSuperalgebra& algebra) {
    return HomSuperalgebra(supercommutator(algebra), algebra.alpha());
}

TernaryOp hom_associator(const HomSuperalgebra& algebra) {
    const auto& s = algebra.space();
    const std::size_t n = s.dim();
    const auto& mul = algebra.product();
    TernaryOp out(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector ai = algebra.alpha().column(i);
                const Vector ak = algebra.alpha().column(k);
                const Vector v = mul.eval(mul.product_of_basis(i, j), ak) - mul.eval(ai, mul.product_of_basis(j, k));
                for (std::size_t l = 0; l < n; ++l)
                    out.set(i, j, k, l, v[l]);
            }
    return out;
}

TernaryOp hom_super_jacobian(const HomSuperalgebra& algebra) {
    const auto& s = algebra.space();
    const std::size_t n = s.dim();
    const auto& mul = algebra.product();
    const auto& alpha = algebra.alpha();
    TernaryOp out(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Parity px = s.parity(i), py = s.parity(j), pz = s.parity(k);
                Vector v = mul.eval(mul.product_of_basis(i, j), alpha.column(k));
                v.add_scaled(koszul_sign(px * (py + pz)), mul.eval(mul.product_of_basis(j, k), alpha.column(i)));
                v.add_scaled(koszul_sign(pz * (px + py)), mul.eval(mul.product_of_basis(k, i), alpha.column(j)));
                for (std::size_t l = 0; l < n; ++l)
                    out.set(i, j, k, l, v[l]);
            }
    return out;
}

BinaryTernaryAlgebra build_hom_akivis(const HomSuperalgebra& algebra, const CheckOptions& options) {
    require_grading(algebra, "the Hom-Akivis construction");
    require_multiplicative(algebra, "the Hom-Akivis construction");
    BinaryTernaryAlgebra out{supercommutator(algebra), hom_associator(algebra), algebra.alpha(), {}};
    out.postconditions = check_suite("akivis", out.view(), options);
    if (!all_passed(out.postconditions))
        throw std::logic_error("constructed Hom-Akivis superalgebra fails its own identities");
    return out;
}

BinaryTernaryAlgebra build_hom_ly(const HomSuperalgebra& algebra, const CheckOptions& options) {
    require_grading(algebra, "the Hom-Lie-Yamaguti construction");
    require_multiplicative(algebra, "the Hom-Lie-Yamaguti construction");
    require_leibniz(algebra, "the Hom-Lie-Yamaguti construction");

    const auto& s = algebra.space();
    const std::size_t n = s.dim();
    const auto& mul = algebra.product();
    TernaryOp ternary(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector v = mul.eval(mul.product_of_basis(i, j), algebra.alpha().column(k));
                for (std::size_t l = 0; l < n; ++l)
                    ternary.set(i, j, k, l, -v[l]);
            }
    BinaryTernaryAlgebra out{supercommutator(algebra), std::move(ternary), algebra.alpha(), {}};
    out.postconditions = check_suite("ly", out.view(), options);
    if (!all_passed(out.postconditions))
        throw std::logic_error("constructed Hom-Lie-Yamaguti superalgebra fails SHLY1-SHLY8");
    return out;
}

Report check_lie_admissible(const HomSuperalgebra& algebra, const CheckOptions& options) {
    require_grading(algebra, "the Lie admissibility criterion");
    require_leibniz(algebra, "the Lie admissibility criterion");
    Report criterion = compiled_builtin("LIE_ADMISSIBLE").check(algebra, options);
    const Report jacobi = compiled_builtin("HOM_SUPER_JACOBI").check(supercommutator_algebra(algebra), options);
    if (criterion.passed != jacobi.passed)
        throw std::logic_error("cyclic admissibility criterion disagrees with the Jacobi check of the bracket");
    return criterion;
}

Report check_ternary_equivalence(const HomSuperalgebra& algebra, const CheckOptions& options) {
    require_grading(algebra, "the ternary equivalence check");
    require_leibniz(algebra, "the ternary equivalence check");
    Report assoc = compiled_builtin("TERNARY_EQUIV_ASSOC").check(algebra, options);
    Report half = compiled_builtin("TERNARY_EQUIV_HALF").check(algebra, options);
    std::vector<Report> parts;
    parts.push_back(std::move(assoc));
    parts.push_back(std::move(half));
    Report merged = merge_reports("TERNARY_EQUIV", std::move(parts), options.counterexample_cap);
    merged.variables = {"x", "y", "z"};
    return merged;
}

HomSuperalgebra left_to_right(const HomSuperalgebra& algebra) {
    const auto& s = algebra.space();
    const std::size_t n = s.dim();
    BilinearOp transposed(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                transposed.set(i, j, k, algebra.product().at(j, i, k));
    HomSuperalgebra out(std::move(transposed), algebra.alpha(), algebra.ternary());
    out.set_multiplicative(algebra.multiplicative());
    return out;
}

HomSuperalgebra yau_twist(const HomSuperalgebra& algebra, const EvenMap& beta, const CheckOptions& options) {
    if (beta.space() != algebra.space())
        throw DimensionError("twisting map lives on a different space");
    if (!algebra.alpha().is_identity())
        throw PreconditionError("Yau twist needs an untwisted algebra (alpha = id)");
    require_grading(algebra, "the Yau twist");
    require_leibniz(algebra, "the Yau twist");
    {
        HomSuperalgebra endo(algebra.product(), beta);
        const Report r = multiplicativity_report(endo, 1);
        if (!r.passed)
            throw PreconditionError("twisting map is not an algebra endomorphism; failed " + describe_failure(r));
    }

    const auto& s = algebra.space();
    const std::size_t n = s.dim();
    BilinearOp twisted(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector v = beta.apply(algebra.product().product_of_basis(i, j));
            for (std::size_t k = 0; k < n; ++k)
                twisted.set(i, j, k, v[k]);
        }
    HomSuperalgebra out(std::move(twisted), beta);
    check_multiplicativity(out, options.counterexample_cap);
    if (out.multiplicative() != Multiplicativity::Yes || !compiled_builtin("LLSI").check(out, options).passed)
        throw std::logic_error("Yau twist did not produce a multiplicative Hom-Leibniz superalgebra");
    return out;
}

} // namespace homsuper
