#include "homsuper/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

namespace homsuper {

namespace {

using json = nlohmann::ordered_json;

class Reader {
public:
    explicit Reader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& where, const std::string& what) const {
        throw DocumentError(origin_, where, what);
    }

    const json& member(const json& obj, const std::string& key, const std::string& where) const {
        auto it = obj.find(key);
        if (it == obj.end())
            fail(where, "missing field \"" + key + "\"");
        return *it;
    }

    const json& array(const json& v, const std::string& where) const {
        if (!v.is_array())
            fail(where, "expected an array");
        return v;
    }

    std::size_t count(const json& v, const std::string& where) const {
        if (!v.is_number_unsigned())
            fail(where, "expected a non-negative integer");
        return v.get<std::size_t>();
    }

    std::size_t index(const json& v, std::size_t n, const std::string& where) const {
        if (!v.is_number_integer())
            fail(where, "expected a basis index");
        const auto i = v.get<long long>();
        if (i < 1 || static_cast<std::size_t>(i) > n)
            fail(where, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
        return static_cast<std::size_t>(i - 1);
    }

    Scalar rational(const json& v, const std::string& where) const {
        if (v.is_number_integer())
            return Scalar(v.dump());
        if (!v.is_string())
            fail(where, "expected a rational string \"p/q\"");
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }

    std::string text(const json& v, const std::string& where) const {
        if (!v.is_string())
            fail(where, "expected a string");
        return v.get<std::string>();
    }

    bool verdict(const json& v, const std::string& where) const {
        const std::string s = text(v, where);
        if (s == "pass")
            return true;
        if (s == "fail")
            return false;
        fail(where, "verdict must be \"pass\" or \"fail\"");
    }

private:
    std::string origin_;
};

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

EvenMap read_alpha(const Reader& rd, const json& v, const SuperSpace& space) {
    const std::size_t n = space.dim();
    std::vector<Scalar> entries(n * n);
    if (v.is_object()) {
        const json& sparse = rd.array(rd.member(v, "sparse", "/alpha"), "/alpha/sparse");
        for (std::size_t e = 0; e < sparse.size(); ++e) {
            const std::string w = ptr("/alpha/sparse", e);
            const json& t = rd.array(sparse[e], w);
            if (t.size() != 3)
                rd.fail(w, "expected [i, j, \"c\"]");
            const std::size_t i = rd.index(t[0], n, w + "/0");
            const std::size_t j = rd.index(t[1], n, w + "/1");
            entries[i * n + j] += rd.rational(t[2], w + "/2");
        }
    } else {
        rd.array(v, "/alpha");
        if (v.size() != n)
            rd.fail("/alpha", "expected " + std::to_string(n) + " rows");
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = rd.array(v[i], ptr("/alpha", i));
            if (row.size() != n)
                rd.fail(ptr("/alpha", i), "expected " + std::to_string(n) + " entries");
            for (std::size_t j = 0; j < n; ++j)
                entries[i * n + j] = rd.rational(row[j], ptr(ptr("/alpha", i), j));
        }
    }
    try {
        return EvenMap(space, std::move(entries));
    } catch (const ParityError& e) {
        rd.fail("/alpha", e.what());
    }
}

std::string first_violation(const Report& r) {
    const auto& t = r.counterexamples.front().tuple;
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + std::to_string(t[i] + 1);
    return out + ")";
}

json to_json(const AlgebraDocument& doc) {
    const HomSuperalgebra& a = doc.algebra;
    const SuperSpace& s = a.space();
    const std::size_t n = s.dim();
    json out = json::object();
    out["name"] = doc.name;
    out["dims"] = json::array({s.dim_even(), s.dim_odd()});

    json product = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(a.product().at(i, j, k)) != 0)
                    product.push_back(json::array({i + 1, j + 1, k + 1, to_string(a.product().at(i, j, k))}));
    out["product"] = std::move(product);

    if (const auto& t = a.ternary()) {
        json ternary = json::array();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l)
                        if (sgn(t->at(i, j, k, l)) != 0)
                            ternary.push_back(json::array({i + 1, j + 1, k + 1, l + 1, to_string(t->at(i, j, k, l))}));
        out["ternary"] = std::move(ternary);
    }

    json alpha = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(to_string(a.alpha().at(i, j)));
        alpha.push_back(std::move(row));
    }
    out["alpha"] = std::move(alpha);

    json meta = json::object();
    meta["source"] = doc.source;
    json expected = json::object();
    for (const auto& [suite, pass] : doc.expected)
        expected[suite] = pass ? "pass" : "fail";
    meta["expected"] = std::move(expected);
    json verdicts = json::object();
    for (const auto& [suite, list] : doc.verdicts) {
        json v = json::object();
        for (const auto& [check, pass] : list)
            v[check] = pass ? "pass" : "fail";
        verdicts[suite] = std::move(v);
    }
    meta["verdicts"] = std::move(verdicts);
    out["metadata"] = std::move(meta);
    return out;
}

// Keeps entry tuples on one line in the indented form.
std::string dump_canonical(const json& j) {
    std::ostringstream os;
    os << "{\n";
    std::size_t field = 0;
    for (const auto& [key, value] : j.items()) {
        os << "  " << json(key).dump() << ": ";
        if ((key == "product" || key == "ternary" || key == "alpha") && !value.empty()) {
            os << "[\n";
            for (std::size_t i = 0; i < value.size(); ++i)
                os << "    " << value[i].dump(-1, ' ', false) << (i + 1 < value.size() ? ",\n" : "\n");
            os << "  ]";
        } else if (key == "metadata") {
            std::string m = value.dump(2);
            // re-indent nested lines by two spaces
            std::string indented;
            for (char ch : m) {
                indented += ch;
                if (ch == '\n')
                    indented += "  ";
            }
            os << indented;
        } else {
            os << value.dump();
        }
        os << (++field < j.size() ? ",\n" : "\n");
    }
    os << "}\n";
    return os.str();
}

} // namespace

SuiteVerdicts to_verdicts(const std::vector<Report>& reports) {
    SuiteVerdicts out;
    for (const auto& r : reports)
        out.emplace_back(r.name, r.passed);
    return out;
}

AlgebraDocument parse_document(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(origin, line_col(text, e.byte), "JSON syntax error");
    }
    const Reader rd(origin);
    if (!j.is_object())
        rd.fail("", "document must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "name" && key != "dims" && key != "product" && key != "ternary" && key != "alpha" &&
            key != "metadata")
            rd.fail("/" + key, "unknown field");

    AlgebraDocument doc;
    doc.name = rd.text(rd.member(j, "name", ""), "/name");

    const json& dims = rd.array(rd.member(j, "dims", ""), "/dims");
    if (dims.size() != 2)
        rd.fail("/dims", "expected [even, odd]");
    const SuperSpace space(rd.count(dims[0], "/dims/0"), rd.count(dims[1], "/dims/1"));
    const std::size_t n = space.dim();
    if (n == 0)
        rd.fail("/dims", "dimension must be positive");
    if (n > 16)
        rd.fail("/dims", "dimension above 16 is not supported");

    BilinearOp product(space);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    const json& pj = rd.array(rd.member(j, "product", ""), "/product");
    for (std::size_t e = 0; e < pj.size(); ++e) {
        const std::string w = ptr("/product", e);
        const json& t = rd.array(pj[e], w);
        if (t.size() != 4)
            rd.fail(w, "expected [i, j, k, \"c\"]");
        const std::size_t i = rd.index(t[0], n, w + "/0");
        const std::size_t jj = rd.index(t[1], n, w + "/1");
        const std::size_t k = rd.index(t[2], n, w + "/2");
        if (std::find(seen.begin(), seen.end(), std::tuple(i, jj, k)) != seen.end())
            rd.fail(w, "duplicate entry");
        seen.emplace_back(i, jj, k);
        const Scalar c = rd.rational(t[3], w + "/3");
        const SuperSpace& sp = product.space();
        if (c != 0 && sp.parity(i) + sp.parity(jj) != sp.parity(k))
            rd.fail(w, "grading violation at (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + "," +
                           std::to_string(k + 1) + ")");
        product.set(i, jj, k, c);
    }
    if (const Report g = check_grading(product); !g.passed)
        rd.fail("/product", "grading violation at " + first_violation(g));

    std::optional<TernaryOp> ternary;
    if (auto it = j.find("ternary"); it != j.end()) {
        TernaryOp t(space);
        std::vector<std::array<std::size_t, 4>> seen4;
        const json& tj = rd.array(*it, "/ternary");
        for (std::size_t e = 0; e < tj.size(); ++e) {
            const std::string w = ptr("/ternary", e);
            const json& q = rd.array(tj[e], w);
            if (q.size() != 5)
                rd.fail(w, "expected [i, j, k, l, \"c\"]");
            std::array<std::size_t, 4> idx{};
            for (std::size_t c = 0; c < 4; ++c)
                idx[c] = rd.index(q[c], n, w + "/" + std::to_string(c));
            if (std::find(seen4.begin(), seen4.end(), idx) != seen4.end())
                rd.fail(w, "duplicate entry");
            seen4.push_back(idx);
            const Scalar c = rd.rational(q[4], w + "/4");
            const SuperSpace& sp = t.space();
            if (c != 0 && sp.parity(idx[0]) + sp.parity(idx[1]) + sp.parity(idx[2]) != sp.parity(idx[3]))
                rd.fail(w, "grading violation");
            t.set(idx[0], idx[1], idx[2], idx[3], c);
        }
        if (const Report g = check_grading(t); !g.passed)
            rd.fail("/ternary", "grading violation at " + first_violation(g));
        ternary = std::move(t);
    }

    EvenMap alpha = EvenMap::identity(space);
    if (auto it = j.find("alpha"); it != j.end())
        alpha = read_alpha(rd, *it, space);
    doc.algebra = HomSuperalgebra(std::move(product), std::move(alpha), std::move(ternary));

    if (auto it = j.find("metadata"); it != j.end()) {
        const json& m = *it;
        if (!m.is_object())
            rd.fail("/metadata", "expected an object");
        for (const auto& [key, value] : m.items())
            if (key != "source" && key != "expected" && key != "verdicts")
                rd.fail("/metadata/" + key, "unknown field");
        if (auto s = m.find("source"); s != m.end())
            doc.source = rd.text(*s, "/metadata/source");
        if (auto e = m.find("expected"); e != m.end()) {
            if (!e->is_object())
                rd.fail("/metadata/expected", "expected an object");
            for (const auto& [suite, v] : e->items())
                doc.expected[suite] = rd.verdict(v, "/metadata/expected/" + suite);
        }
        if (auto v = m.find("verdicts"); v != m.end()) {
            if (!v->is_object())
                rd.fail("/metadata/verdicts", "expected an object");
            for (const auto& [suite, checks] : v->items()) {
                const std::string w = "/metadata/verdicts/" + suite;
                if (!checks.is_object())
                    rd.fail(w, "expected an object");
                SuiteVerdicts list;
                for (const auto& [check, verdict] : checks.items())
                    list.emplace_back(check, rd.verdict(verdict, w + "/" + check));
                doc.verdicts[suite] = std::move(list);
            }
        }
    }
    return doc;
}

std::string serialize_document(const AlgebraDocument& doc) { return dump_canonical(to_json(doc)); }

std::string serialize_document_compact(const AlgebraDocument& doc) { return to_json(doc).dump(); }

AlgebraDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DocumentError(path.string(), "", "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path.string());
}

void save_document(const AlgebraDocument& doc, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw DocumentError(path.string(), "", "cannot write file");
    out << serialize_document(doc);
    if (!out)
        throw DocumentError(path.string(), "", "write failed");
}

HomSuperalgebra load_algebra(const std::filesystem::path& path) { return load_document(path).algebra; }

void save_algebra(const HomSuperalgebra& algebra, const std::filesystem::path& path) {
    AlgebraDocument doc;
    doc.name = path.stem().string();
    doc.algebra = algebra;
    save_document(doc, path);
}

} // namespace homsuper
