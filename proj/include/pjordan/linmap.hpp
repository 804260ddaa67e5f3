#pragma once

#include "pjordan/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pjordan {

// Square Scalar matrix; column i is the image of e_i.
class LinearMap {
public:
    explicit LinearMap(std::size_t dim);
    static LinearMap identity(std::size_t dim);
    static LinearMap diag(const std::vector<Scalar>& entries);
    // perm[i] = image index: e_i -> e_{perm[i]} (0-based).
    static LinearMap permutation(const std::vector<std::size_t>& perm);

    std::size_t dim() const { return dim_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v) { m_[r * dim_ + c] = std::move(v); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    LinearMap compose(const LinearMap& inner) const;  // (*this) o inner
    Scalar det() const;
    bool invertible() const { return !det().is_zero(); }
    LinearMap inverse() const;  // throws on singular input

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.dim_ == b.dim_ && a.m_ == b.m_;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

    std::string str() const;  // [[a,b],[c,d]] with scalar literals

private:
    std::size_t dim_;
    std::vector<Scalar> m_;
};

// Exact rank of a rectangular Scalar matrix (row-major, rows x cols).
std::size_t matrix_rank(std::vector<Scalar> m, std::size_t rows, std::size_t cols);

// Solves M x = rhs (M rows x cols, row-major); empty if inconsistent.
// When underdetermined, returns one solution with free coordinates zero.
std::optional<std::vector<Scalar>> solve_linear(std::vector<Scalar> m,
                                                std::vector<Scalar> rhs,
                                                std::size_t rows, std::size_t cols);

// Matrix literal grammar: [[s,s,...],[...]] with scalar literals.
LinearMap parse_matrix(const std::string& text);

}  // namespace pjordan
