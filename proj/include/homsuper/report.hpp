#ifndef HOMSUPER_REPORT_HPP
#define HOMSUPER_REPORT_HPP

#include "homsuper/kernel.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace homsuper {

struct Counterexample {
    std::vector<std::size_t> tuple;  // 0-based basis indices, in variable order
    Vector residual;                 // empty for structural checks (grading)

    bool operator==(const Counterexample&) const = default;
};

/// Outcome of a check. `passed` is true iff no tuple failed; the
/// counterexample list is truncated to the configured cap but `failures`
/// counts every failing tuple.
struct Report {
    std::string name;
    bool passed = true;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> variables;
    std::size_t failures = 0;
    std::size_t tuples_checked = 0;

    void record_failure(Counterexample ce, std::size_t cap);
};

inline constexpr std::size_t default_counterexample_cap = 16;

/// Concatenates partial reports produced over disjoint tuple ranges. The
/// result is independent of how the range was partitioned.
Report merge_reports(std::string name, std::vector<Report> parts, std::size_t cap);

bool all_passed(const std::vector<Report>& reports);

} // namespace homsuper

#endif
