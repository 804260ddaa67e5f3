#pragma once

#include "pjordan/algebra.hpp"
#include "pjordan/poly.hpp"

#include <vector>

namespace pjordan {

// Q^i_{klmn} = <e^i, Q(e_k, e_l, e_m, e_n)> as a polynomial in the x[a,b]^c,
// emitted for all l, n and k <= m (the first/third-argument symmetry).
struct QEntry {
    int i, k, l, m, n;  // 1-based
    Polynomial poly;
};

struct QSystem {
    std::size_t dim = 0;
    std::vector<QEntry> entries;
    std::vector<Indet> indets() const;
    std::vector<Polynomial> polys() const;
    const Polynomial& at(int i, int k, int l, int m, int n) const;  // uses symmetry k<->m
};

// S^i_{jk} in the operator entries r[a,b], emitted for all i and j <= k.
struct SEntry {
    int i, j, k;  // 1-based
    Polynomial poly;
};

struct SSystem {
    std::size_t dim = 0;
    std::vector<SEntry> entries;
    std::vector<Indet> indets() const;
    std::vector<Polynomial> polys() const;
    const Polynomial& at(int i, int j, int k) const;
};

// Both generators require a Jordan algebra input.
QSystem generate_q_system(const AlgebraTable& jordan);
SSystem generate_s_system(const AlgebraTable& jordan);

std::vector<Scalar> evaluate_system(const std::vector<Polynomial>& polys,
                                    const Assignment& point);
std::vector<Scalar> evaluate_system(const QSystem& sys, const Assignment& point);
std::vector<Scalar> evaluate_system(const SSystem& sys, const Assignment& point);

// The compatible-structure unknowns x[i,j]^k of an N-dimensional algebra,
// in canonical order.
std::vector<Indet> compatibility_indets(std::size_t dim);

// Builds the product table e_i.e_j = c_ij^k/2 + x_ij^k (i<j) etc. at a point.
AlgebraTable table_from_point(const AlgebraTable& jordan, const Assignment& point);

// Inverse of table_from_point; throws if t is not a compatible structure
// carrier for jordan (anticommutator mismatch).
Assignment point_from_table(const AlgebraTable& jordan, const AlgebraTable& t);

}  // namespace pjordan
