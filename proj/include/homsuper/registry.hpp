#ifndef HOMSUPER_REGISTRY_HPP
#define HOMSUPER_REGISTRY_HPP

#include "homsuper/checker.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homsuper {

struct BuiltinIdentity {
    std::string name;
    std::string text;
    std::string summary;
    bool graded = true;  // false for the sign-free HLY1..HLY8 list
};

/// Every built-in law, in a fixed order.
std::span<const BuiltinIdentity> builtin_identities();

const BuiltinIdentity& find_builtin(std::string_view name);
Identity builtin_identity(std::string_view name);
/// Parsed and compiled once, shared.
const CompiledIdentity& compiled_builtin(std::string_view name);

/// Pseudo-identities handled by the kernel rather than the evaluator.
inline constexpr std::string_view grading_check = "GRADING";
inline constexpr std::string_view multiplicativity_check = "MULTIPLICATIVITY";

/// Members of a named suite, in report order. A built-in identity name is
/// also accepted as a one-member suite. Throws Error for unknown names.
///
///   leibniz  GRADING, MULTIPLICATIVITY, LLSI
///   lie      GRADING, MULTIPLICATIVITY, SKEW_SUPER, HOM_SUPER_JACOBI
///   akivis   GRADING, MULTIPLICATIVITY, SKEW_SUPER, AKIVIS
///   ly       GRADING, MULTIPLICATIVITY, SHLY1..SHLY8
///   hly      HLY1..HLY8 (sign-free path)
///   all      every graded built-in whose op-slots the algebra provides
std::vector<std::string> suite_members(std::string_view suite, const HomSuperalgebra* algebra = nullptr);
std::vector<std::string> suite_names();

Report run_check(std::string_view member, const HomSuperalgebra& algebra, const CheckOptions& options = {});
std::vector<Report> check_suite(std::string_view suite, const HomSuperalgebra& algebra,
                                const CheckOptions& options = {});

} // namespace homsuper

#endif
