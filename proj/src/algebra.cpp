#include "pjordan/algebra.hpp"

#include "pjordan/bilinear.hpp"
#include "pjordan/linmap.hpp"

#include <random>
#include <sstream>

namespace pjordan {

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector v(dim, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

Vector zero_vector(std::size_t dim) { return Vector(dim, Scalar(0)); }

bool is_zero_vector(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

AlgebraTable::AlgebraTable(std::size_t dim, std::string label)
    : dim_(dim), label_(std::move(label)), c_(dim * dim * dim, Scalar(0)) {
    if (dim == 0) throw dim_error("zero-dimensional algebra table");
}

void AlgebraTable::set(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
    c_[(i * dim_ + j) * dim_ + k] = std::move(v);
}

Vector AlgebraTable::product(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw dim_error("product: vector dimension mismatch");
    return detail::product(c_, dim_, x, y);
}

Vector AlgebraTable::associator(const Vector& x, const Vector& y, const Vector& z) const {
    if (x.size() != dim_ || y.size() != dim_ || z.size() != dim_)
        throw dim_error("associator: vector dimension mismatch");
    return detail::associator(c_, dim_, x, y, z);
}

AlgebraTable AlgebraTable::anticommutator_table() const {
    AlgebraTable out(dim_, label_.empty() ? "" : label_ + ".anti");
    out.c_ = detail::anticommutator(c_, dim_);
    return out;
}

bool AlgebraTable::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (at(i, j, k) != at(j, i, k)) return false;
    return true;
}

bool AlgebraTable::is_associative() const {
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c)
                if (!is_zero_vector(associator(basis_vector(dim_, a),
                                               basis_vector(dim_, b),
                                               basis_vector(dim_, c))))
                    return false;
    return true;
}

std::string AlgebraTable::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dim_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) os << ", ";
            bool first = true;
            for (std::size_t k = 0; k < dim_; ++k) {
                if (at(i, j, k).is_zero()) continue;
                if (!first) os << " + ";
                os << "(" << at(i, j, k).str() << ")e" << (k + 1);
                first = false;
            }
            if (first) os << "0";
        }
        os << "]";
    }
    return os.str();
}

Fghpq fghpq(const AlgebraTable& t, const Vector& x, const Vector& y,
            const Vector& z, const Vector& u) {
    std::size_t n = t.dim();
    if (x.size() != n || y.size() != n || z.size() != n || u.size() != n)
        throw dim_error("fghpq: vector dimension mismatch");
    auto circ = detail::anticommutator(t.raw(), n);
    auto r = detail::fghpq(t.raw(), circ, n, x, y, z, u);
    return Fghpq{std::move(r.f), std::move(r.g), std::move(r.h),
                 std::move(r.p), std::move(r.q)};
}

namespace {

void add_violation(AxiomReport& rep, std::string name,
                   std::initializer_list<std::size_t> idx, Vector res) {
    Violation v;
    v.identity = std::move(name);
    for (auto i : idx) v.indices.push_back(i + 1);
    v.residual = std::move(res);
    rep.holds = false;
    rep.violations.push_back(std::move(v));
}

// Small deterministic sample vectors for the quartic spot check.
Vector sample_vector(std::size_t dim, std::mt19937& rng) {
    static const long pool[] = {0, 1, -1, 2, -2, 3, 1, 0};
    Vector v(dim, Scalar(0));
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = Scalar(Rational(pool[rng() % 8]));
    return v;
}

}  // namespace

AxiomReport jordan_check(const AlgebraTable& t) {
    AxiomReport rep;
    std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector diff(n, Scalar(0));
            bool bad = false;
            for (std::size_t k = 0; k < n; ++k) {
                diff[k] = t.at(i, j, k) - t.at(j, i, k);
                bad = bad || !diff[k].is_zero();
            }
            if (bad) add_violation(rep, "commutativity", {i, j}, diff);
        }
    if (!rep.holds) return rep;

    // Linearized Jordan identity on basis quadruples; complete in
    // characteristic 0 by multilinearity.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    Vector x = basis_vector(n, a), y = basis_vector(n, b);
                    Vector z = basis_vector(n, c), u = basis_vector(n, d);
                    auto lhs = detail::vadd(
                        detail::vadd(t.associator(t.product(x, y), u, z),
                                     t.associator(t.product(y, z), u, x)),
                        t.associator(t.product(z, x), u, y));
                    if (!is_zero_vector(lhs))
                        add_violation(rep, "jordan", {a, b, c, d}, lhs);
                }
    if (!rep.holds) return rep;

    // Spot check of the quartic identity ((x.x).y).x = (x.x).(y.x).
    std::mt19937 rng(20240u + static_cast<unsigned>(n));
    for (int it = 0; it < 20; ++it) {
        Vector x = sample_vector(n, rng), y = sample_vector(n, rng);
        Vector xx = t.product(x, x);
        Vector lhs = t.product(t.product(xx, y), x);
        Vector rhs = t.product(xx, t.product(y, x));
        auto diff = detail::vsub(lhs, rhs);
        if (!is_zero_vector(diff)) add_violation(rep, "jordan-quartic", {}, diff);
    }
    return rep;
}

AxiomReport prejordan_check(const AlgebraTable& t) {
    AxiomReport rep;
    std::size_t n = t.dim();
    auto circ = detail::anticommutator(t.raw(), n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    auto r = detail::fghpq(t.raw(), circ, n, basis_vector(n, a),
                                           basis_vector(n, b), basis_vector(n, c),
                                           basis_vector(n, d));
                    if (!is_zero_vector(r.p))
                        add_violation(rep, "P", {a, b, c, d}, r.p);
                    if (!is_zero_vector(r.q))
                        add_violation(rep, "Q", {a, b, c, d}, r.q);
                }
    return rep;
}

AlgebraTable transport(const AlgebraTable& t, const LinearMap& phi) {
    std::size_t n = t.dim();
    if (phi.dim() != n) throw dim_error("transport: dimension mismatch");
    LinearMap inv = phi.inverse();
    AlgebraTable out(n, t.label().empty() ? "" : t.label() + ".transported");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> xi(n), yj(n);
        for (std::size_t r = 0; r < n; ++r) xi[r] = inv.at(r, i);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < n; ++r) yj[r] = inv.at(r, j);
            Vector pr = t.product(xi, yj);
            Vector img = phi.apply(pr);
            for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, img[k]);
        }
    }
    return out;
}

}  // namespace pjordan
