#ifndef HOMSUPER_KERNEL_HPP
#define HOMSUPER_KERNEL_HPP

#include "homsuper/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace homsuper {

// Z2 degree. Addition is xor, multiplication is and (arithmetic in GF(2)).
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity operator*(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<std::uint8_t>(a) & static_cast<std::uint8_t>(b));
}
constexpr int koszul_sign(Parity exponent) { return exponent == Parity::Odd ? -1 : 1; }

/// Finite-dimensional Z2-graded coordinate space. Basis elements are indexed
/// 0..dim()-1, even ones first.
class SuperSpace {
public:
    SuperSpace() = default;
    SuperSpace(std::size_t dim_even, std::size_t dim_odd) : even_(dim_even), odd_(dim_odd) {}

    std::size_t dim_even() const noexcept { return even_; }
    std::size_t dim_odd() const noexcept { return odd_; }
    std::size_t dim() const noexcept { return even_ + odd_; }
    Parity parity(std::size_t i) const noexcept { return i < even_ ? Parity::Even : Parity::Odd; }

    bool operator==(const SuperSpace&) const = default;

private:
    std::size_t even_ = 0;
    std::size_t odd_ = 0;
};

SuperSpace make_superspace(std::size_t dim_even, std::size_t dim_odd);

/// Coordinates over a SuperSpace basis.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim) {}
    explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

    static Vector basis(std::size_t dim, std::size_t i);

    std::size_t size() const noexcept { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Scalar> coords() const noexcept { return coords_; }

    bool is_zero() const;
    /// Parity of the vector if all nonzero coordinates share one parity.
    /// The zero vector is homogeneous of both parities; Even is returned.
    std::optional<Parity> homogeneous_parity(const SuperSpace& space) const;
    /// Even or odd component.
    Vector component(const SuperSpace& space, Parity p) const;

    Vector& operator+=(const Vector& other);
    Vector& operator-=(const Vector& other);
    Vector& operator*=(const Scalar& c);
    /// this += c * other
    Vector& add_scaled(const Scalar& c, const Vector& other);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector a) { return a *= c; }
    friend Vector operator-(Vector a) { return a *= Scalar(-1); }

    bool operator==(const Vector&) const = default;

private:
    std::vector<Scalar> coords_;
};

/// Even linear map: a square matrix that is block diagonal for the parity
/// decomposition. Construction rejects any nonzero off-block entry.
class EvenMap {
public:
    EvenMap() = default;
    /// `entries` is row-major, entry (i, j) maps basis j to a multiple of basis i.
    EvenMap(SuperSpace space, std::vector<Scalar> entries);

    static EvenMap identity(const SuperSpace& space);
    static EvenMap diagonal(const SuperSpace& space, std::span<const Scalar> diag);

    const SuperSpace& space() const noexcept { return space_; }
    const Scalar& at(std::size_t row, std::size_t col) const { return entries_[row * space_.dim() + col]; }
    bool is_identity() const;

    Vector apply(const Vector& x) const;
    /// Image of basis vector j (column j).
    Vector column(std::size_t j) const;

    bool operator==(const EvenMap&) const = default;

private:
    SuperSpace space_;
    std::vector<Scalar> entries_;
};

Vector apply_map(const EvenMap& m, const Vector& x);
/// (m1 ∘ m2)(x) = m1(m2(x)).
EvenMap compose(const EvenMap& m1, const EvenMap& m2);
EvenMap power(const EvenMap& m, unsigned k);

/// Structure constants c[i][j][k]: b_i * b_j = sum_k c[i][j][k] b_k.
/// Grading is not enforced on construction; use check_grading.
class BilinearOp {
public:
    BilinearOp() = default;
    explicit BilinearOp(SuperSpace space);

    const SuperSpace& space() const noexcept { return space_; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar value) { c_[index(i, j, k)] = std::move(value); }
    /// b_i * b_j as a vector.
    Vector product_of_basis(std::size_t i, std::size_t j) const;
    bool is_zero() const;

    Vector eval(const Vector& x, const Vector& y) const;

    bool operator==(const BilinearOp&) const = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t n = space_.dim();
        return (i * n + j) * n + k;
    }
    SuperSpace space_;
    std::vector<Scalar> c_;
};

/// Structure constants t[i][j][k][l]: {b_i, b_j, b_k} = sum_l t[i][j][k][l] b_l.
class TernaryOp {
public:
    TernaryOp() = default;
    explicit TernaryOp(SuperSpace space);

    const SuperSpace& space() const noexcept { return space_; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return t_[index(i, j, k, l)];
    }
    void set(std::size_t i, std::size_t j, std::size_t k, std::size_t l, Scalar value) {
        t_[index(i, j, k, l)] = std::move(value);
    }
    Vector product_of_basis(std::size_t i, std::size_t j, std::size_t k) const;
    bool is_zero() const;

    Vector eval(const Vector& x, const Vector& y, const Vector& z) const;

    bool operator==(const TernaryOp&) const = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        const std::size_t n = space_.dim();
        return ((i * n + j) * n + k) * n + l;
    }
    SuperSpace space_;
    std::vector<Scalar> t_;
};

Vector eval_bilinear(const BilinearOp& op, const Vector& x, const Vector& y);
Vector eval_ternary(const TernaryOp& op, const Vector& x, const Vector& y, const Vector& z);

} // namespace homsuper

#endif
