#ifndef HOMSUPER_COMMANDS_HPP
#define HOMSUPER_COMMANDS_HPP

// Batch commands behind the command-line tool. Each writes line-delimited
// records to `out`, diagnostics to `err`, and returns the exit status:
//   0  everything passed
//   1  an identity, precondition or proof failed (or a search ran out of budget)
//   2  usage, document or I/O error

#include "homsuper/checker.hpp"
#include "homsuper/document.hpp"

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace homsuper {

enum class ReportFormat { Json, Text };

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct VerifyOptions {
    std::string suite = "all";
    ReportFormat format = ReportFormat::Json;
    CheckOptions check;
};

int run_verify(const std::vector<std::filesystem::path>& paths, const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

enum class ConstructTarget { Akivis, LeibnizYamaguti };

struct ConstructOptions {
    ConstructTarget target = ConstructTarget::LeibnizYamaguti;
    ReportFormat format = ReportFormat::Json;
    CheckOptions check;
};

/// Builds the binary-ternary document. Postcondition verdicts go into its
/// metadata; for the Akivis target the Leibniz-only "eq12" suite of the
/// source algebra is recorded as well.
AlgebraDocument construct_document(const AlgebraDocument& source, const ConstructOptions& options);

int run_construct(const std::filesystem::path& input, const std::filesystem::path& output,
                  const ConstructOptions& options, std::ostream& out, std::ostream& err);

int run_prove(const std::string& target, const std::string& parities, ReportFormat format, std::ostream& out,
              std::ostream& err);

struct SearchSpec {
    std::size_t dim_even = 1;
    std::size_t dim_odd = 0;
    /// Sorted and deduplicated before use.
    std::vector<Scalar> coefficients = {Scalar(-1), Scalar(0), Scalar(1)};

    enum class Alpha { Identity, FixedDiagonal, DiagonalFamily };
    Alpha alpha = Alpha::Identity;
    std::vector<Scalar> alpha_diagonal;  // FixedDiagonal only

    std::string suite = "leibniz";
    std::size_t max_results = 1000;
    std::optional<std::chrono::milliseconds> budget;
    std::size_t space_limit = 10'000'000;
    unsigned workers = 0;  // 0: HOMSUPER_WORKERS
};

/// Sizes computed before enumeration starts.
struct SearchSpace {
    std::size_t positions = 0;       // parity-allowed structure constants
    std::size_t alpha_choices = 1;
    std::size_t candidates = 0;      // saturates at SIZE_MAX
};

SearchSpace search_space(const SearchSpec& spec);

struct SearchResult {
    std::vector<std::pair<std::size_t, AlgebraDocument>> found;  // candidate index, document
    std::size_t examined = 0;
    bool truncated = false;        // stopped at max_results
    bool budget_exceeded = false;  // partial result
};

/// Enumerates candidates in lexicographic order (alpha choice first, then the
/// structure constants in (i, j, k) order, first position most significant)
/// and keeps those passing the suite. Throws Error if the space exceeds
/// `space_limit`.
SearchResult search_algebras(const SearchSpec& spec);

/// `out_dir`, if set, receives one canonical document per result.
int run_search(const SearchSpec& spec, ReportFormat format, const std::optional<std::filesystem::path>& out_dir,
               std::ostream& out, std::ostream& err);

/// Parses "p/q,r,..." lists used by the command line.
std::vector<Scalar> parse_scalar_list(std::string_view text);

} // namespace homsuper

#endif
