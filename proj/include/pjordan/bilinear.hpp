#pragma once

#include <cstddef>
#include <vector>

namespace pjordan::detail {

// Structure-constant bilinear algebra over any commutative ring type T.
// tab[(i*n + j)*n + k] is the e_k coefficient of e_i * e_j.

template <class T>
std::vector<T> product(const std::vector<T>& tab, std::size_t n,
                       const std::vector<T>& x, const std::vector<T>& y) {
    std::vector<T> out(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == T(0)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == T(0)) continue;
            T xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const T& c = tab[(i * n + j) * n + k];
                if (!(c == T(0))) out[k] += xy * c;
            }
        }
    }
    return out;
}

template <class T>
std::vector<T> anticommutator(const std::vector<T>& tab, std::size_t n) {
    std::vector<T> out(n * n * n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[(i * n + j) * n + k] =
                    tab[(i * n + j) * n + k] + tab[(j * n + i) * n + k];
    return out;
}

template <class T>
std::vector<T> vadd(std::vector<T> a, const std::vector<T>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

template <class T>
std::vector<T> vsub(std::vector<T> a, const std::vector<T>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
}

template <class T>
std::vector<T> associator(const std::vector<T>& tab, std::size_t n,
                          const std::vector<T>& x, const std::vector<T>& y,
                          const std::vector<T>& z) {
    return vsub(product(tab, n, product(tab, n, x, y), z),
                product(tab, n, x, product(tab, n, y, z)));
}

template <class T>
struct FghpqResult {
    std::vector<T> f, g, h, p, q;
};

// F, G, H of the defining identities; circ is the anticommutator of tab.
template <class T>
FghpqResult<T> fghpq(const std::vector<T>& tab, const std::vector<T>& circ,
                     std::size_t n, const std::vector<T>& x, const std::vector<T>& y,
                     const std::vector<T>& z, const std::vector<T>& u) {
    auto dot = [&](const std::vector<T>& a, const std::vector<T>& b) {
        return product(tab, n, a, b);
    };
    auto ring = [&](const std::vector<T>& a, const std::vector<T>& b) {
        return product(circ, n, a, b);
    };
    FghpqResult<T> r;
    r.f = vadd(vadd(dot(ring(x, y), dot(z, u)), dot(ring(y, z), dot(x, u))),
               dot(ring(z, x), dot(y, u)));
    r.g = vadd(vadd(dot(x, dot(y, dot(z, u))), dot(z, dot(y, dot(x, u)))),
               dot(ring(ring(x, z), y), u));
    r.h = vadd(vadd(dot(z, dot(ring(x, y), u)), dot(x, dot(ring(y, z), u))),
               dot(y, dot(ring(z, x), u)));
    r.p = vsub(r.f, r.h);
    r.q = vsub(r.f, r.g);
    return r;
}

}  // namespace pjordan::detail
