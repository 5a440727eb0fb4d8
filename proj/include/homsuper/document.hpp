#ifndef HOMSUPER_DOCUMENT_HPP
#define HOMSUPER_DOCUMENT_HPP

// JSON documents for algebras:
//
//   {
//     "name": "leibniz_a2_b",
//     "dims": [2, 0],
//     "product": [[1, 1, 2, "1"]],            sparse, 1-based (i, j, k, c): b_i*b_j += c b_k
//     "ternary": [[i, j, k, l, "c"], ...],    optional
//     "alpha": [["1", "0"], ["0", "1"]],      dense rows; {"sparse": [[i, j, "c"]]} also read
//     "metadata": {"source": "...", "expected": {"leibniz": "pass"}, "verdicts": {...}}
//   }
//
// Saving always writes the canonical form: fixed key order, entries sorted,
// zeros dropped, rationals in lowest terms, two-space indentation.

#include "homsuper/algebra.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homsuper {

/// Problem in a document; `where` is a JSON pointer or "line:col".
class DocumentError : public ParseError {
public:
    DocumentError(std::string origin, std::string where, const std::string& what)
        : ParseError(origin + (where.empty() ? "" : ":" + where) + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// Per-check outcome recorded with a suite.
using SuiteVerdicts = std::vector<std::pair<std::string, bool>>;

struct AlgebraDocument {
    std::string name;
    HomSuperalgebra algebra;
    std::string source;
    /// suite -> expected overall verdict (true = pass)
    std::map<std::string, bool> expected;
    /// suite -> verdicts recorded when the document was produced
    std::map<std::string, SuiteVerdicts> verdicts;

    bool operator==(const AlgebraDocument&) const = default;
};

SuiteVerdicts to_verdicts(const std::vector<Report>& reports);

AlgebraDocument parse_document(const std::string& text, const std::string& origin = "<input>");
std::string serialize_document(const AlgebraDocument& doc);
/// One-line form used inside report streams.
std::string serialize_document_compact(const AlgebraDocument& doc);

AlgebraDocument load_document(const std::filesystem::path& path);
void save_document(const AlgebraDocument& doc, const std::filesystem::path& path);

HomSuperalgebra load_algebra(const std::filesystem::path& path);
/// Name taken from the file stem, metadata empty.
void save_algebra(const HomSuperalgebra& algebra, const std::filesystem::path& path);

} // namespace homsuper

#endif
