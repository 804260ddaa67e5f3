#pragma once

#include "pjordan/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pjordan {

class LinearMap;

using Vector = std::vector<Scalar>;

Vector basis_vector(std::size_t dim, std::size_t i);
Vector zero_vector(std::size_t dim);
bool is_zero_vector(const Vector& v);

struct Violation {
    std::string identity;             // "commutativity", "jordan", "P", "Q", ...
    std::vector<std::size_t> indices; // 1-based basis tuple
    Vector residual;
};

struct AxiomReport {
    bool holds = true;
    std::vector<Violation> violations;
};

// Structure constants of a bilinear product: e_i * e_j = sum_k c(i,j,k) e_k.
class AlgebraTable {
public:
    explicit AlgebraTable(std::size_t dim, std::string label = "");

    std::size_t dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar v);

    const std::vector<Scalar>& raw() const { return c_; }

    Vector product(const Vector& x, const Vector& y) const;
    Vector associator(const Vector& x, const Vector& y, const Vector& z) const;
    AlgebraTable anticommutator_table() const;

    bool is_commutative() const;
    bool is_associative() const;

    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const AlgebraTable& a, const AlgebraTable& b) {
        return !(a == b);
    }

    std::string str() const;  // formal characteristic matrix, one row per line

private:
    std::size_t dim_;
    std::string label_;
    std::vector<Scalar> c_;
};

struct Fghpq {
    Vector f, g, h, p, q;
};

// The five operator values with circ the anticommutator of t.
Fghpq fghpq(const AlgebraTable& t, const Vector& x, const Vector& y,
            const Vector& z, const Vector& u);

// Commutativity plus the linearized Jordan identity on all basis quadruples;
// the quartic identity is additionally spot-checked on random vectors.
AxiomReport jordan_check(const AlgebraTable& t);

// P and Q vanish on all basis quadruples.
AxiomReport prejordan_check(const AlgebraTable& t);

// Transported product x .2 y = phi(phi^-1(x) .1 phi^-1(y)).
AlgebraTable transport(const AlgebraTable& t, const LinearMap& phi);

}  // namespace pjordan
