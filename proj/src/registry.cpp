#include "homsuper/registry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace homsuper {

namespace {

// Cyclic sums carry the (-1)^{|x||z|} leading sign; with it the Jacobian
// side equals (-1)^{|x||z|} J_alpha(x,y,z), which is how the Akivis-type
// laws balance in the graded case.
const std::vector<BuiltinIdentity> registry = {
    {"LLSI", "a(x)*(y*z) = (x*y)*a(z) + s(x,y) a(y)*(x*z)", "left Hom-Leibniz superidentity"},
    {"RLSI", "(x*y)*a(z) = a(x)*(y*z) + s(y,z) (x*z)*a(y)", "right Hom-Leibniz superidentity"},
    {"ASSOC_FORM", "(x*y)*a(z) - a(x)*(y*z) = -s(x,y) a(y)*(x*z)", "left Leibniz law in Hom-associator form"},
    {"SKEW_SUPER", "x*y = -s(x,y) y*x", "skew-supersymmetry"},
    {"HOM_SUPER_JACOBI", "(x*y)*a(z) + s(x,(y+z)) (y*z)*a(x) + s(z,(x+y)) (z*x)*a(y) = 0",
     "Hom-super-Jacobi identity J_alpha = 0"},
    {"AKIVIS",
     "cyc[x,y,z; s(x,z)]((x*y)*a(z)) = cyc[x,y,z; s(x,z)]({x,y,z}) - cyc[x,y,z; s((y+z),x)]({y,x,z})",
     "Hom-super Akivis identity"},
    {"AKIVIS_LEIBNIZ_FORM", "cyc[x,y,z; s(x,z)]([[x,y],a(z)]) = cyc[x,y,z; s(x,z)]((x*y)*a(z))",
     "Akivis identity specialised to a Hom-Leibniz superalgebra"},
    {"PROP32_I", "(x*y + s(x,y) y*x)*a(z) = 0", "supersymmetric products annihilate from the left"},
    {"PROP32_II", "a(x)*[y,z] = [x*y,a(z)] + s(x,y) [a(y),x*z]", "left translations derive the bracket"},
    {"LIE_ADMISSIBLE", "cyc[x,y,z; s(x,z)]((x*y)*a(z)) = 0", "Hom-super Lie admissibility criterion"},
    {"TERNARY_EQUIV_ASSOC", "s(x,y) ((y*x)*a(z) - a(y)*(x*z)) - ((x*y)*a(z) - a(x)*(y*z)) = -(x*y)*a(z)",
     "signed associator difference equals -(x*y)*a(z)"},
    {"TERNARY_EQUIV_HALF", "-(x*y)*a(z) = -1/2 [x,y]*a(z)", "-(x*y)*a(z) equals -1/2 [x,y]*a(z)"},
    {"SHLY1", "a(x*y) = a(x)*a(y)", "multiplicativity of the binary product"},
    {"SHLY2", "a({x,y,z}) = {a(x),a(y),a(z)}", "multiplicativity of the ternary product"},
    {"SHLY3", "x*y = -s(x,y) y*x", "binary product is skew-supersymmetric"},
    {"SHLY4", "{x,y,z} = -s(x,y) {y,x,z}", "ternary product is skew-supersymmetric in its first pair"},
    {"SHLY5", "cyc[x,y,z; s(x,z)]((x*y)*a(z) + {x,y,z}) = 0", "cyclic binary-ternary compatibility"},
    {"SHLY6", "cyc[x,y,z; s(x,z)]({x*y,a(z),a(u)}) = 0", "cyclic sum of ternary with binary first slot"},
    {"SHLY7", "{a(x),a(y),u*v} = {x,y,u}*a2(v) + s(u,(x+y)) a2(u)*{x,y,v}", "ternary derivation of the binary"},
    {"SHLY8",
     "{a2(x),a2(y),{u,v,w}} = {{x,y,u},a2(v),a2(w)} + s(u,(x+y)) {a2(u),{x,y,v},a2(w)} + s((x+y),(u+v)) "
     "{a2(u),a2(v),{x,y,w}}",
     "ternary derivation of the ternary"},
    {"HLY1", "a(x*y) = a(x)*a(y)", "ungraded HLY1", false},
    {"HLY2", "a({x,y,z}) = {a(x),a(y),a(z)}", "ungraded HLY2", false},
    {"HLY3", "x*y = -y*x", "ungraded HLY3", false},
    {"HLY4", "{x,y,z} = -{y,x,z}", "ungraded HLY4", false},
    {"HLY5", "cyc[x,y,z]((x*y)*a(z) + {x,y,z}) = 0", "ungraded HLY5", false},
    {"HLY6", "cyc[x,y,z]({x*y,a(z),a(u)}) = 0", "ungraded HLY6", false},
    {"HLY7", "{a(x),a(y),u*v} = {x,y,u}*a2(v) + a2(u)*{x,y,v}", "ungraded HLY7", false},
    {"HLY8",
     "{a2(x),a2(y),{u,v,w}} = {{x,y,u},a2(v),a2(w)} + {a2(u),{x,y,v},a2(w)} + {a2(u),a2(v),{x,y,w}}",
     "ungraded HLY8", false},
};

const std::map<std::string, std::vector<std::string>, std::less<>> named_suites = {
    {"leibniz", {"GRADING", "MULTIPLICATIVITY", "LLSI"}},
    {"right-leibniz", {"GRADING", "MULTIPLICATIVITY", "RLSI"}},
    {"lie", {"GRADING", "MULTIPLICATIVITY", "SKEW_SUPER", "HOM_SUPER_JACOBI"}},
    {"akivis", {"GRADING", "MULTIPLICATIVITY", "SKEW_SUPER", "AKIVIS"}},
    {"eq12", {"AKIVIS_LEIBNIZ_FORM"}},
    {"prop32", {"PROP32_I", "PROP32_II"}},
    {"ternary-equiv", {"TERNARY_EQUIV_ASSOC", "TERNARY_EQUIV_HALF"}},
    {"ly",
     {"GRADING", "MULTIPLICATIVITY", "SHLY1", "SHLY2", "SHLY3", "SHLY4", "SHLY5", "SHLY6", "SHLY7", "SHLY8"}},
    {"hly", {"HLY1", "HLY2", "HLY3", "HLY4", "HLY5", "HLY6", "HLY7", "HLY8"}},
};

} // namespace

std::span<const BuiltinIdentity> builtin_identities() { return registry; }

const BuiltinIdentity& find_builtin(std::string_view name) {
    auto it = std::find_if(registry.begin(), registry.end(), [&](const auto& b) { return b.name == name; });
    if (it == registry.end())
        throw Error("unknown identity '" + std::string(name) + "'");
    return *it;
}

Identity builtin_identity(std::string_view name) { return parse_identity(find_builtin(name).text); }

const CompiledIdentity& compiled_builtin(std::string_view name) {
    static std::mutex mutex;
    static std::map<std::string, CompiledIdentity, std::less<>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(name);
    if (it == cache.end()) {
        const auto& b = find_builtin(name);
        it = cache.emplace(b.name, CompiledIdentity(parse_identity(b.text), b.name)).first;
    }
    return it->second;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : named_suites)
        names.push_back(k);
    names.push_back("all");
    return names;
}

std::vector<std::string> suite_members(std::string_view suite, const HomSuperalgebra* algebra) {
    if (auto it = named_suites.find(suite); it != named_suites.end())
        return it->second;
    if (suite == "all") {
        std::vector<std::string> out = {"GRADING", "MULTIPLICATIVITY"};
        for (const auto& b : registry) {
            if (!b.graded)
                continue;
            if (algebra && !algebra->ternary() && uses_slot(compiled_builtin(b.name).source(), OpSlot::Brace))
                continue;
            out.push_back(b.name);
        }
        return out;
    }
    if (suite == grading_check || suite == multiplicativity_check)
        return {std::string(suite)};
    auto it = std::find_if(registry.begin(), registry.end(), [&](const auto& b) { return b.name == suite; });
    if (it != registry.end())
        return {it->name};
    throw Error("unknown suite '" + std::string(suite) + "'");
}

Report run_check(std::string_view member, const HomSuperalgebra& algebra, const CheckOptions& options) {
    if (member == grading_check) {
        Report r = check_grading(algebra.product());
        if (const auto& t = algebra.ternary()) {
            Report rt = check_grading(*t);
            r.tuples_checked += rt.tuples_checked;
            for (auto& ce : rt.counterexamples)
                r.record_failure(std::move(ce), SIZE_MAX);
        }
        return r;
    }
    if (member == multiplicativity_check)
        return multiplicativity_report(algebra, options.counterexample_cap);
    const auto& b = find_builtin(member);
    return compiled_builtin(member).check(algebra, options, !b.graded);
}

std::vector<Report> check_suite(std::string_view suite, const HomSuperalgebra& algebra, const CheckOptions& options) {
    std::vector<Report> out;
    for (const auto& m : suite_members(suite, &algebra))
        out.push_back(run_check(m, algebra, options));
    return out;
}

} // namespace homsuper
