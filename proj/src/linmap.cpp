#include "pjordan/linmap.hpp"

#include <cctype>
#include <sstream>

namespace pjordan {

LinearMap::LinearMap(std::size_t dim) : dim_(dim), m_(dim * dim, Scalar(0)) {
    if (dim == 0) throw dim_error("zero-dimensional map");
}

LinearMap LinearMap::identity(std::size_t dim) {
    LinearMap m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, Scalar(1));
    return m;
}

LinearMap LinearMap::diag(const std::vector<Scalar>& entries) {
    LinearMap m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

LinearMap LinearMap::permutation(const std::vector<std::size_t>& perm) {
    LinearMap m(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m.set(perm[i], i, Scalar(1));
    return m;
}

std::vector<Scalar> LinearMap::apply(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) throw dim_error("vector/matrix dimension mismatch");
    std::vector<Scalar> out(dim_, Scalar(0));
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (inner.dim_ != dim_) throw dim_error("matrix dimension mismatch");
    LinearMap out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) {
            Scalar acc(0);
            for (std::size_t k = 0; k < dim_; ++k) acc += at(r, k) * inner.at(k, c);
            out.set(r, c, acc);
        }
    return out;
}

namespace {

// Row echelon with exact pivoting; returns (rank, det-if-square).
std::pair<std::size_t, Scalar> eliminate(std::vector<Scalar>& m, std::size_t rows,
                                         std::size_t cols) {
    Scalar det(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv * cols + col].is_zero()) ++piv;
        if (piv == rows) {
            det = Scalar(0);
            continue;
        }
        if (piv != rank) {
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(m[piv * cols + c], m[rank * cols + c]);
            det = -det;
        }
        det *= m[rank * cols + col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r * cols + col].is_zero()) continue;
            Scalar f = m[r * cols + col] / m[rank * cols + col];
            for (std::size_t c = col; c < cols; ++c)
                m[r * cols + c] -= f * m[rank * cols + c];
        }
        ++rank;
    }
    if (rank < rows) det = Scalar(0);
    return {rank, det};
}

}  // namespace

Scalar LinearMap::det() const {
    auto copy = m_;
    return eliminate(copy, dim_, dim_).second;
}

LinearMap LinearMap::inverse() const {
    // Gauss-Jordan on [M | I].
    std::size_t n = dim_;
    std::vector<Scalar> aug(n * 2 * n, Scalar(0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r * 2 * n + c] = at(r, c);
        aug[r * 2 * n + n + r] = Scalar(1);
    }
    std::size_t rank = eliminate(aug, n, 2 * n).first;
    if (rank < n) throw arith_error("singular linear map");
    LinearMap out(n);
    for (std::size_t r = 0; r < n; ++r) {
        // Pivot of row r sits in column r after full elimination on a
        // nonsingular matrix.
        Scalar p = aug[r * 2 * n + r];
        for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug[r * 2 * n + n + c] / p);
    }
    return out;
}

std::string LinearMap::str() const {
    std::string out = "[";
    for (std::size_t r = 0; r < dim_; ++r) {
        out += r ? ",[" : "[";
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c) out += ",";
            out += at(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

std::size_t matrix_rank(std::vector<Scalar> m, std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) return 0;
    return eliminate(m, rows, cols).first;
}

std::optional<std::vector<Scalar>> solve_linear(std::vector<Scalar> m,
                                                std::vector<Scalar> rhs,
                                                std::size_t rows, std::size_t cols) {
    // Eliminate on [M | rhs].
    std::vector<Scalar> aug(rows * (cols + 1), Scalar(0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug[r * (cols + 1) + c] = m[r * cols + c];
        aug[r * (cols + 1) + cols] = rhs[r];
    }
    eliminate(aug, rows, cols + 1);
    std::vector<Scalar> x(cols, Scalar(0));
    // Read echelon rows bottom-up; a row 0 = nonzero is inconsistent.
    for (std::size_t r0 = rows; r0-- > 0;) {
        std::size_t lead = cols + 1;
        for (std::size_t c = 0; c < cols + 1; ++c) {
            if (!aug[r0 * (cols + 1) + c].is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == cols + 1) continue;
        if (lead == cols) return std::nullopt;
        Scalar acc = aug[r0 * (cols + 1) + cols];
        for (std::size_t c = lead + 1; c < cols; ++c)
            acc -= aug[r0 * (cols + 1) + c] * x[c];
        x[lead] = acc / aug[r0 * (cols + 1) + lead];
    }
    return x;
}

LinearMap parse_matrix(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.size() < 4 || t.front() != '[' || t.back() != ']')
        throw parse_error("matrix literal must look like [[...],[...]]");
    std::vector<std::vector<Scalar>> rows;
    size_t pos = 1;
    while (pos < t.size() - 1) {
        if (t[pos] == ',') ++pos;
        if (t[pos] != '[') throw parse_error("expected '[' in matrix literal");
        size_t end = t.find(']', pos);
        if (end == std::string::npos) throw parse_error("unterminated row in matrix literal");
        std::string row = t.substr(pos + 1, end - pos - 1);
        std::vector<Scalar> entries;
        size_t s = 0;
        int depth = 0;
        std::string cur;
        for (char ch : row) {
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0) {
                entries.push_back(parse_scalar(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        (void)s;
        if (!cur.empty()) entries.push_back(parse_scalar(cur));
        rows.push_back(std::move(entries));
        pos = end + 1;
    }
    if (rows.empty()) throw parse_error("empty matrix literal");
    std::size_t n = rows.size();
    for (auto& r : rows)
        if (r.size() != n) throw parse_error("matrix literal must be square");
    LinearMap out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.set(r, c, rows[r][c]);
    return out;
}

}  // namespace pjordan
