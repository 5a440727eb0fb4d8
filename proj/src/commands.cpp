#include "homsuper/commands.hpp"

#include "homsuper/constructions.hpp"
#include "homsuper/free_symbolic.hpp"
#include "homsuper/registry.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace homsuper {

namespace {

using json = nlohmann::ordered_json;

std::string basis_name(std::size_t i) { return "b" + std::to_string(i + 1); }

json tuple_json(const std::vector<std::size_t>& t) {
    json out = json::array();
    for (auto i : t)
        out.push_back(basis_name(i));
    return out;
}

std::string tuple_text(const Report& r, const Counterexample& ce) {
    std::string names, values;
    for (std::size_t i = 0; i < ce.tuple.size(); ++i) {
        if (i) {
            names += ",";
            values += ",";
        }
        names += i < r.variables.size() ? r.variables[i] : "#" + std::to_string(i + 1);
        values += basis_name(ce.tuple[i]);
    }
    return "(" + names + ")=(" + values + ")";
}

std::string vector_text(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

json report_json(const Report& r) {
    json out = json::object();
    out["check"] = r.name;
    out["passed"] = r.passed;
    out["tuples"] = r.tuples_checked;
    out["failures"] = r.failures;
    out["variables"] = r.variables;
    json ces = json::array();
    for (const auto& ce : r.counterexamples) {
        json c = json::object();
        c["tuple"] = tuple_json(ce.tuple);
        json res = json::array();
        for (std::size_t i = 0; i < ce.residual.size(); ++i)
            res.push_back(to_string(ce.residual[i]));
        c["residual"] = std::move(res);
        ces.push_back(std::move(c));
    }
    out["counterexamples"] = std::move(ces);
    return out;
}

std::string report_text(const Report& r) {
    std::string line = "  " + r.name + (r.passed ? " pass" : " FAIL");
    line += " (" + std::to_string(r.tuples_checked) + " tuples";
    if (!r.passed)
        line += ", " + std::to_string(r.failures) + " failing";
    line += ")";
    if (!r.counterexamples.empty()) {
        const auto& ce = r.counterexamples.front();
        line += " first " + tuple_text(r, ce);
        if (ce.residual.size() > 0)
            line += " residual " + vector_text(ce.residual);
    }
    return line;
}

std::string describe(const std::exception& e) { return e.what(); }

// Runs `work(i)` for i in [0, count) on up to `workers` threads.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F work) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++)
                work(i);
        });
    for (auto& t : pool)
        t.join();
}

struct FileOutcome {
    std::string out;
    std::string err;
    int status = exit_ok;
};

FileOutcome verify_one(const std::filesystem::path& path, const VerifyOptions& options, const CheckOptions& check) {
    FileOutcome res;
    AlgebraDocument doc;
    try {
        doc = load_document(path);
    } catch (const Error& e) {
        res.err = "error: " + describe(e) + "\n";
        res.status = exit_usage;
        return res;
    }
    std::vector<Report> reports;
    try {
        reports = check_suite(options.suite, doc.algebra, check);
    } catch (const Error& e) {
        res.err = "error: " + path.string() + ": " + describe(e) + "\n";
        res.status = exit_usage;
        return res;
    }
    const bool passed = all_passed(reports);
    auto exp = doc.expected.find(options.suite);
    std::ostringstream os;
    if (options.format == ReportFormat::Json) {
        for (const auto& r : reports) {
            json rec = json::object();
            rec["record"] = "check";
            rec["file"] = path.string();
            rec["algebra"] = doc.name;
            rec["suite"] = options.suite;
            const json body = report_json(r);
            for (const auto& [k, v] : body.items())
                rec[k] = v;
            os << rec.dump() << "\n";
        }
        json rec = json::object();
        rec["record"] = "file";
        rec["file"] = path.string();
        rec["algebra"] = doc.name;
        rec["suite"] = options.suite;
        rec["passed"] = passed;
        if (exp != doc.expected.end()) {
            rec["expected"] = exp->second ? "pass" : "fail";
            rec["matches_expected"] = exp->second == passed;
        } else {
            rec["expected"] = nullptr;
            rec["matches_expected"] = nullptr;
        }
        os << rec.dump() << "\n";
    } else {
        os << path.string() << " [" << doc.name << "] suite " << options.suite << "\n";
        for (const auto& r : reports)
            os << report_text(r) << "\n";
        os << "  => " << (passed ? "PASS" : "FAIL");
        if (exp != doc.expected.end())
            os << " (expected " << (exp->second ? "pass" : "fail") << (exp->second == passed ? ")" : ", MISMATCH)");
        os << "\n";
    }
    res.out = os.str();
    res.status = passed ? exit_ok : exit_failed;
    return res;
}

} // namespace

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::vector<std::filesystem::path>& paths, const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
    if (paths.empty()) {
        err << "error: no input files\n";
        return exit_usage;
    }
    try {
        suite_members(options.suite);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const unsigned workers = options.check.workers ? options.check.workers : default_worker_count();
    CheckOptions inner = options.check;
    if (paths.size() > 1 && workers > 1)
        inner.workers = 1;
    std::vector<FileOutcome> outcomes(paths.size());
    parallel_for(paths.size(), paths.size() > 1 ? workers : 1,
                 [&](std::size_t i) { outcomes[i] = verify_one(paths[i], options, inner); });

    int status = exit_ok;
    std::size_t passed = 0;
    for (const auto& o : outcomes) {
        out << o.out;
        err << o.err;
        status = std::max(status, o.status);
        passed += o.status == exit_ok;
    }
    if (options.format == ReportFormat::Json) {
        json rec = json::object();
        rec["record"] = "summary";
        rec["files"] = paths.size();
        rec["passed"] = passed;
        rec["exit"] = status;
        out << rec.dump() << "\n";
    } else {
        out << passed << "/" << paths.size() << " files passed\n";
    }
    return status;
}

// ---------------------------------------------------------------------------
// construct

AlgebraDocument construct_document(const AlgebraDocument& source, const ConstructOptions& options) {
    HomSuperalgebra a = source.algebra;
    AlgebraDocument doc;
    if (options.target == ConstructTarget::LeibnizYamaguti) {
        BinaryTernaryAlgebra b = build_hom_ly(a, options.check);
        doc.name = source.name + "_ly";
        doc.source = "construct ly from " + source.name;
        doc.algebra = b.view();
        doc.expected["ly"] = true;
        doc.verdicts["ly"] = to_verdicts(b.postconditions);
    } else {
        BinaryTernaryAlgebra b = build_hom_akivis(a, options.check);
        doc.name = source.name + "_akivis";
        doc.source = "construct akivis from " + source.name;
        doc.algebra = b.view();
        doc.expected["akivis"] = true;
        doc.verdicts["akivis"] = to_verdicts(b.postconditions);
        // Holds only when the source is left Hom-Leibniz.
        doc.verdicts["eq12"] = to_verdicts(check_suite("eq12", a, options.check));
    }
    return doc;
}

int run_construct(const std::filesystem::path& input, const std::filesystem::path& output,
                  const ConstructOptions& options, std::ostream& out, std::ostream& err) {
    const std::string target = options.target == ConstructTarget::Akivis ? "akivis" : "ly";
    AlgebraDocument source;
    try {
        source = load_document(input);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    AlgebraDocument doc;
    try {
        doc = construct_document(source, options);
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << input.string() << ": " << e.what() << "\n";
        if (options.format == ReportFormat::Json) {
            json rec = json::object();
            rec["record"] = "construct";
            rec["input"] = input.string();
            rec["target"] = target;
            rec["ok"] = false;
            rec["error"] = e.what();
            out << rec.dump() << "\n";
        }
        return exit_failed;
    }
    try {
        save_document(doc, output);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (options.format == ReportFormat::Json) {
        json rec = json::object();
        rec["record"] = "construct";
        rec["input"] = input.string();
        rec["target"] = target;
        rec["ok"] = true;
        rec["output"] = output.string();
        rec["document"] = doc.name;
        json verdicts = json::object();
        for (const auto& [suite, list] : doc.verdicts) {
            json v = json::object();
            for (const auto& [check, pass] : list)
                v[check] = pass ? "pass" : "fail";
            verdicts[suite] = std::move(v);
        }
        rec["verdicts"] = std::move(verdicts);
        out << rec.dump() << "\n";
    } else {
        out << "constructed " << target << " from " << input.string() << " -> " << output.string() << "\n";
        for (const auto& [suite, list] : doc.verdicts) {
            out << "  " << suite << ":";
            for (const auto& [check, pass] : list)
                out << " " << check << "=" << (pass ? "pass" : "fail");
            out << "\n";
        }
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// prove

int run_prove(const std::string& target, const std::string& parities, ReportFormat format, std::ostream& out,
              std::ostream& err) {
    if (parities != "all") {
        err << "error: only '--parities all' is supported\n";
        return exit_usage;
    }
    free::ProofReport report;
    try {
        report = free::prove_identity_free(target);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    const std::string verdict = report.proved() ? "PROVED" : "INCONCLUSIVE";
    if (format == ReportFormat::Json) {
        for (const auto& c : report.certificates) {
            json rec = json::object();
            rec["record"] = "certificate";
            rec["target"] = report.target;
            rec["identity"] = c.identity;
            json p = json::object();
            for (std::size_t i = 0; i < c.parities.generators.size(); ++i)
                p[c.parities.generators[i]] = c.parities.parities[i] == Parity::Odd ? 1 : 0;
            rec["parities"] = std::move(p);
            rec["zero"] = c.zero;
            rec["expanded_terms"] = c.expanded_terms;
            rec["alpha_distribution"] = c.rules.alpha_distribution;
            rec["leibniz_rewrite"] = c.rules.leibniz_rewrite;
            if (!c.zero)
                rec["residual"] = c.residual.to_string(c.parities.generators);
            out << rec.dump() << "\n";
        }
        json rec = json::object();
        rec["record"] = "proof";
        rec["target"] = report.target;
        rec["verdict"] = verdict;
        rec["certificates"] = report.certificates.size();
        rec["alpha_distribution"] = report.rules.alpha_distribution;
        rec["leibniz_rewrite"] = report.rules.leibniz_rewrite;
        out << rec.dump() << "\n";
    } else {
        out << report.target << ": " << verdict << " (" << report.certificates.size() << " parity certificates, "
            << report.rules.leibniz_rewrite << " Leibniz rewrites, " << report.rules.alpha_distribution
            << " alpha distributions)\n";
        for (const auto& c : report.certificates)
            if (!c.zero)
                out << "  " << c.identity << " [" << c.parities.to_string()
                    << "] survives: " << c.residual.to_string(c.parities.generators) << "\n";
    }
    return report.proved() ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// search

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
        return std::numeric_limits<std::size_t>::max();
    return a * b;
}

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i)
        r = saturating_mul(r, base);
    return r;
}

std::vector<Scalar> normalized(std::vector<Scalar> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

struct Position {
    std::size_t i, j, k;
};

std::vector<Position> allowed_positions(const SuperSpace& s) {
    std::vector<Position> out;
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (s.parity(i) + s.parity(j) == s.parity(k))
                    out.push_back({i, j, k});
    return out;
}

std::string scalar_list(const std::vector<Scalar>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + to_string(v[i]);
    return out;
}

std::string spec_text(const SearchSpec& spec, const std::vector<Scalar>& coeffs) {
    std::string alpha = "id";
    if (spec.alpha == SearchSpec::Alpha::FixedDiagonal)
        alpha = "diag:" + scalar_list(spec.alpha_diagonal);
    else if (spec.alpha == SearchSpec::Alpha::DiagonalFamily)
        alpha = "diag";
    return "search --dims " + std::to_string(spec.dim_even) + "," + std::to_string(spec.dim_odd) + " --coeffs " +
           scalar_list(coeffs) + " --suite " + spec.suite + " --alpha " + alpha;
}

class Enumerator {
public:
    explicit Enumerator(const SearchSpec& spec)
        : spec_(spec), space_(spec.dim_even, spec.dim_odd), coeffs_(normalized(spec.coefficients)),
          positions_(allowed_positions(space_)) {
        if (space_.dim() == 0)
            throw Error("search needs a positive dimension");
        if (coeffs_.empty())
            throw Error("search needs at least one coefficient");
        if (spec.alpha == SearchSpec::Alpha::FixedDiagonal && spec.alpha_diagonal.size() != space_.dim())
            throw Error("fixed diagonal needs " + std::to_string(space_.dim()) + " entries");
        product_count_ = saturating_pow(coeffs_.size(), positions_.size());
        alpha_count_ = spec.alpha == SearchSpec::Alpha::DiagonalFamily ? saturating_pow(coeffs_.size(), space_.dim())
                                                                       : 1;
        members_ = suite_members(spec.suite);
    }

    SearchSpace size() const {
        return {positions_.size(), alpha_count_, saturating_mul(alpha_count_, product_count_)};
    }

    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    HomSuperalgebra candidate(std::size_t index) const {
        std::size_t alpha_index = index / product_count_;
        std::size_t rest = index % product_count_;
        BilinearOp product(space_);
        for (std::size_t p = positions_.size(); p-- > 0;) {
            const auto& pos = positions_[p];
            product.set(pos.i, pos.j, pos.k, coeffs_[rest % coeffs_.size()]);
            rest /= coeffs_.size();
        }
        return HomSuperalgebra(std::move(product), alpha(alpha_index));
    }

    bool passes(const HomSuperalgebra& a) const {
        CheckOptions opts;
        opts.workers = 1;
        opts.stop_at_first = true;
        opts.counterexample_cap = 1;
        for (const auto& m : members_)
            if (!run_check(m, a, opts).passed)
                return false;
        return true;
    }

private:
    EvenMap alpha(std::size_t index) const {
        switch (spec_.alpha) {
        case SearchSpec::Alpha::Identity:
            return EvenMap::identity(space_);
        case SearchSpec::Alpha::FixedDiagonal:
            return EvenMap::diagonal(space_, spec_.alpha_diagonal);
        case SearchSpec::Alpha::DiagonalFamily:
            break;
        }
        std::vector<Scalar> diag(space_.dim());
        for (std::size_t p = diag.size(); p-- > 0;) {
            diag[p] = coeffs_[index % coeffs_.size()];
            index /= coeffs_.size();
        }
        return EvenMap::diagonal(space_, diag);
    }

    const SearchSpec& spec_;
    SuperSpace space_;
    std::vector<Scalar> coeffs_;
    std::vector<Position> positions_;
    std::size_t product_count_ = 1;
    std::size_t alpha_count_ = 1;
    std::vector<std::string> members_;
};

} // namespace

SearchSpace search_space(const SearchSpec& spec) { return Enumerator(spec).size(); }

SearchResult search_algebras(const SearchSpec& spec) {
    const Enumerator en(spec);
    const SearchSpace sz = en.size();
    if (sz.candidates > spec.space_limit)
        throw Error("search space of " +
                    (sz.candidates == std::numeric_limits<std::size_t>::max() ? std::string("over 2^64")
                                                                              : std::to_string(sz.candidates)) +
                    " candidates exceeds the limit of " + std::to_string(spec.space_limit));

    const auto start = std::chrono::steady_clock::now();
    const unsigned workers = spec.workers ? spec.workers : default_worker_count();
    constexpr std::size_t block = 2048;
    const std::string source = spec_text(spec, en.coefficients());

    SearchResult result;
    std::size_t next = 0;
    while (next < sz.candidates) {
        // One round: `workers` consecutive blocks, merged in index order.
        const std::size_t round_end = std::min(sz.candidates, next + block * workers);
        const std::size_t blocks = (round_end - next + block - 1) / block;
        std::vector<std::vector<std::size_t>> hits(blocks);
        parallel_for(blocks, workers, [&](std::size_t b) {
            const std::size_t lo = next + b * block;
            const std::size_t hi = std::min(round_end, lo + block);
            for (std::size_t c = lo; c < hi; ++c)
                if (en.passes(en.candidate(c)))
                    hits[b].push_back(c);
        });
        result.examined = round_end;
        next = round_end;
        for (const auto& h : hits)
            for (std::size_t c : h) {
                if (result.found.size() == spec.max_results) {
                    result.truncated = true;
                    break;
                }
                AlgebraDocument doc;
                doc.name = "search_" + std::to_string(spec.dim_even) + "_" + std::to_string(spec.dim_odd) + "_" +
                           std::to_string(c);
                doc.algebra = en.candidate(c);
                doc.source = source;
                doc.expected[spec.suite] = true;
                result.found.emplace_back(c, std::move(doc));
            }
        if (result.truncated || (result.found.size() == spec.max_results && next < sz.candidates)) {
            result.truncated = true;
            break;
        }
        if (spec.budget && next < sz.candidates && std::chrono::steady_clock::now() - start > *spec.budget) {
            result.budget_exceeded = true;
            break;
        }
    }
    return result;
}

int run_search(const SearchSpec& spec, ReportFormat format, const std::optional<std::filesystem::path>& out_dir,
               std::ostream& out, std::ostream& err) {
    SearchSpace sz;
    std::vector<Scalar> coeffs;
    try {
        sz = search_space(spec);
        coeffs = normalized(spec.coefficients);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (format == ReportFormat::Json) {
        json rec = json::object();
        rec["record"] = "space";
        rec["dims"] = json::array({spec.dim_even, spec.dim_odd});
        json c = json::array();
        for (const auto& s : coeffs)
            c.push_back(to_string(s));
        rec["coefficients"] = std::move(c);
        rec["positions"] = sz.positions;
        rec["alpha_choices"] = sz.alpha_choices;
        rec["candidates"] = sz.candidates;
        rec["limit"] = spec.space_limit;
        out << rec.dump() << "\n";
    } else {
        out << "search space: " << sz.positions << " positions over " << coeffs.size() << " coefficients, "
            << sz.alpha_choices << " alpha choice(s), " << sz.candidates << " candidates\n";
    }
    out.flush();

    SearchResult res;
    try {
        res = search_algebras(spec);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    for (const auto& [index, doc] : res.found) {
        if (format == ReportFormat::Json)
            out << "{\"record\":\"result\",\"index\":" << index << ",\"document\":" << serialize_document_compact(doc)
                << "}\n";
        else
            out << "  #" << index << " " << doc.name << "\n";
        if (out_dir) {
            try {
                std::filesystem::create_directories(*out_dir);
                save_document(doc, *out_dir / (doc.name + ".json"));
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return exit_usage;
            }
        }
    }
    if (format == ReportFormat::Json) {
        json rec = json::object();
        rec["record"] = "summary";
        rec["examined"] = res.examined;
        rec["found"] = res.found.size();
        rec["truncated"] = res.truncated;
        rec["budget_exceeded"] = res.budget_exceeded;
        out << rec.dump() << "\n";
    } else {
        out << res.found.size() << " found after " << res.examined << " candidates"
            << (res.truncated ? " (stopped at --max)" : "") << (res.budget_exceeded ? " (PARTIAL: budget exceeded)" : "")
            << "\n";
    }
    if (res.budget_exceeded) {
        err << "warning: time budget exceeded, results are partial\n";
        return exit_failed;
    }
    return exit_ok;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_scalar(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace homsuper
