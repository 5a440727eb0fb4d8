#include "homsuper/algebra.hpp"
#include "homsuper/kernel.hpp"
#include "homsuper/report.hpp"
#include "homsuper/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace homsuper {

Scalar parse_scalar(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den)))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos && std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; }))
        throw ParseError("zero denominator in '" + std::string(text) + "'");

    std::string normalized(text.front() == '+' ? text.substr(1) : text);
    Scalar value;
    if (value.set_str(normalized, 10) != 0)
        throw ParseError("malformed rational '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

SuperSpace make_superspace(std::size_t dim_even, std::size_t dim_odd) { return SuperSpace(dim_even, dim_odd); }

// ---------------------------------------------------------------------------
// Vector

Vector Vector::basis(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = 1;
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

std::optional<Parity> Vector::homogeneous_parity(const SuperSpace& space) const {
    std::optional<Parity> found;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (sgn(coords_[i]) == 0)
            continue;
        const Parity p = space.parity(i);
        if (found && *found != p)
            return std::nullopt;
        found = p;
    }
    return found.value_or(Parity::Even);
}

Vector Vector::component(const SuperSpace& space, Parity p) const {
    Vector out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (space.parity(i) == p)
            out[i] = coords_[i];
    return out;
}

Vector& Vector::operator+=(const Vector& other) {
    if (other.size() != size())
        throw DimensionError("vector size mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& other) {
    if (other.size() != size())
        throw DimensionError("vector size mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
    for (auto& x : coords_)
        x *= c;
    return *this;
}

Vector& Vector::add_scaled(const Scalar& c, const Vector& other) {
    if (other.size() != size())
        throw DimensionError("vector size mismatch");
    if (sgn(c) == 0)
        return *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (sgn(other.coords_[i]) != 0)
            coords_[i] += c * other.coords_[i];
    return *this;
}

// ---------------------------------------------------------------------------
// EvenMap

EvenMap::EvenMap(SuperSpace space, std::vector<Scalar> entries) : space_(space), entries_(std::move(entries)) {
    const std::size_t n = space_.dim();
    if (entries_.size() != n * n)
        throw DimensionError("even map needs " + std::to_string(n * n) + " entries, got " +
                             std::to_string(entries_.size()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (space_.parity(i) != space_.parity(j) && sgn(at(i, j)) != 0)
                throw ParityError("map is not even: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") mixes parities");
}

EvenMap EvenMap::identity(const SuperSpace& space) {
    const std::size_t n = space.dim();
    std::vector<Scalar> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        e[i * n + i] = 1;
    return EvenMap(space, std::move(e));
}

EvenMap EvenMap::diagonal(const SuperSpace& space, std::span<const Scalar> diag) {
    const std::size_t n = space.dim();
    if (diag.size() != n)
        throw DimensionError("diagonal needs " + std::to_string(n) + " entries");
    std::vector<Scalar> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        e[i * n + i] = diag[i];
    return EvenMap(space, std::move(e));
}

bool EvenMap::is_identity() const { return *this == identity(space_); }

Vector EvenMap::apply(const Vector& x) const {
    const std::size_t n = space_.dim();
    if (x.size() != n)
        throw DimensionError("map/vector dimension mismatch");
    Vector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(x[j]) == 0)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(at(i, j)) != 0)
                out[i] += at(i, j) * x[j];
    }
    return out;
}

Vector EvenMap::column(std::size_t j) const {
    const std::size_t n = space_.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = at(i, j);
    return out;
}

Vector apply_map(const EvenMap& m, const Vector& x) { return m.apply(x); }

EvenMap compose(const EvenMap& m1, const EvenMap& m2) {
    if (m1.space() != m2.space())
        throw DimensionError("cannot compose maps on different spaces");
    const std::size_t n = m1.space().dim();
    std::vector<Scalar> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(m1.at(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                e[i * n + j] += m1.at(i, k) * m2.at(k, j);
        }
    return EvenMap(m1.space(), std::move(e));
}

EvenMap power(const EvenMap& m, unsigned k) {
    EvenMap result = EvenMap::identity(m.space());
    EvenMap base = m;
    while (k > 0) {
        if (k & 1u)
            result = compose(result, base);
        k >>= 1;
        if (k > 0)
            base = compose(base, base);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Multilinear operations

BilinearOp::BilinearOp(SuperSpace space) : space_(space), c_(space.dim() * space.dim() * space.dim()) {}

Vector BilinearOp::product_of_basis(std::size_t i, std::size_t j) const {
    const std::size_t n = space_.dim();
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = at(i, j, k);
    return out;
}

bool BilinearOp::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

Vector BilinearOp::eval(const Vector& x, const Vector& y) const {
    const std::size_t n = space_.dim();
    if (x.size() != n || y.size() != n)
        throw DimensionError("bilinear operands do not match the space dimension");
    Vector out(n);
    Scalar xy;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(at(i, j, k)) != 0)
                    out[k] += xy * at(i, j, k);
        }
    }
    return out;
}

TernaryOp::TernaryOp(SuperSpace space) : space_(space), t_(space.dim() * space.dim() * space.dim() * space.dim()) {}

Vector TernaryOp::product_of_basis(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = space_.dim();
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l)
        out[l] = at(i, j, k, l);
    return out;
}

bool TernaryOp::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

Vector TernaryOp::eval(const Vector& x, const Vector& y, const Vector& z) const {
    const std::size_t n = space_.dim();
    if (x.size() != n || y.size() != n || z.size() != n)
        throw DimensionError("ternary operands do not match the space dimension");
    Vector out(n);
    Scalar xy, xyz;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0)
                continue;
            xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(z[k]) == 0)
                    continue;
                xyz = xy * z[k];
                for (std::size_t l = 0; l < n; ++l)
                    if (sgn(at(i, j, k, l)) != 0)
                        out[l] += xyz * at(i, j, k, l);
            }
        }
    }
    return out;
}

Vector eval_bilinear(const BilinearOp& op, const Vector& x, const Vector& y) { return op.eval(x, y); }

Vector eval_ternary(const TernaryOp& op, const Vector& x, const Vector& y, const Vector& z) {
    return op.eval(x, y, z);
}

// ---------------------------------------------------------------------------
// Reports

void Report::record_failure(Counterexample ce, std::size_t cap) {
    passed = false;
    ++failures;
    if (counterexamples.size() < std::max<std::size_t>(cap, 1))
        counterexamples.push_back(std::move(ce));
}

Report merge_reports(std::string name, std::vector<Report> parts, std::size_t cap) {
    Report merged;
    merged.name = std::move(name);
    for (auto& part : parts) {
        if (merged.variables.empty())
            merged.variables = part.variables;
        merged.tuples_checked += part.tuples_checked;
        merged.failures += part.failures;
        merged.passed = merged.passed && part.passed;
        for (auto& ce : part.counterexamples)
            merged.counterexamples.push_back(std::move(ce));
    }
    std::sort(merged.counterexamples.begin(), merged.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.tuple < b.tuple; });
    if (merged.counterexamples.size() > std::max<std::size_t>(cap, 1))
        merged.counterexamples.resize(std::max<std::size_t>(cap, 1));
    return merged;
}

bool all_passed(const std::vector<Report>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
}

// ---------------------------------------------------------------------------
// Structural checks

Report check_grading(const BilinearOp& op) {
    Report report;
    report.name = "GRADING";
    const auto& s = op.space();
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                ++report.tuples_checked;
                if (s.parity(k) != s.parity(i) + s.parity(j) && sgn(op.at(i, j, k)) != 0)
                    report.record_failure({{i, j, k}, {}}, SIZE_MAX);
            }
    return report;
}

Report check_grading(const TernaryOp& op) {
    Report report;
    report.name = "GRADING_TERNARY";
    const auto& s = op.space();
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    ++report.tuples_checked;
                    if (s.parity(l) != s.parity(i) + s.parity(j) + s.parity(k) && sgn(op.at(i, j, k, l)) != 0)
                        report.record_failure({{i, j, k, l}, {}}, SIZE_MAX);
                }
    return report;
}

HomSuperalgebra::HomSuperalgebra(BilinearOp product, EvenMap alpha, std::optional<TernaryOp> ternary)
    : product_(std::move(product)), ternary_(std::move(ternary)), alpha_(std::move(alpha)) {
    if (alpha_.space() != product_.space())
        throw DimensionError("twisting map and product live on different spaces");
    if (ternary_ && ternary_->space() != product_.space())
        throw DimensionError("ternary product lives on a different space");
}

Report multiplicativity_report(const HomSuperalgebra& algebra, std::size_t cap) {
    Report report;
    report.name = "MULTIPLICATIVITY";
    const std::size_t n = algebra.space().dim();
    const auto& alpha = algebra.alpha();
    std::vector<Vector> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(alpha.column(i));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ++report.tuples_checked;
            Vector residual = alpha.apply(algebra.product().product_of_basis(i, j)) -
                              algebra.product().eval(images[i], images[j]);
            if (!residual.is_zero())
                report.record_failure({{i, j}, std::move(residual)}, cap);
        }
    if (const auto& t = algebra.ternary()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    ++report.tuples_checked;
                    Vector residual =
                        alpha.apply(t->product_of_basis(i, j, k)) - t->eval(images[i], images[j], images[k]);
                    if (!residual.is_zero())
                        report.record_failure({{i, j, k}, std::move(residual)}, cap);
                }
    }
    return report;
}

Report check_multiplicativity(HomSuperalgebra& algebra, std::size_t cap) {
    Report report = multiplicativity_report(algebra, cap);
    algebra.set_multiplicative(report.passed ? Multiplicativity::Yes : Multiplicativity::No);
    return report;
}

bool is_multiplicative(const HomSuperalgebra& algebra) {
    switch (algebra.multiplicative()) {
    case Multiplicativity::Yes:
        return true;
    case Multiplicativity::No:
        return false;
    case Multiplicativity::Unchecked:
        break;
    }
    return multiplicativity_report(algebra, 1).passed;
}

} // namespace homsuper
