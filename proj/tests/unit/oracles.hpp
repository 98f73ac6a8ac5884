#pragma once

// Test-side reference computations. They avoid the library's linear algebra and
// structure-constant tables: plain rationals, hand-written products.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

/// Rank by straightforward Gaussian elimination.
inline std::size_t rank(std::vector<Row> m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// <x|y> for the symplectic form with <e1|e2> = 1.
inline Q symp(const Row& x, const Row& y)
{
    return x[0] * y[1] - x[1] * y[0];
}

/// xyz = <y|z> x
inline Row symplectic_product(const Row& x, const Row& y, const Row& z)
{
    const Q c = symp(y, z);
    return {c * x[0], c * x[1]};
}

using M2 = std::array<std::array<Q, 2>, 2>;

inline M2 m2_basis(std::size_t i)
{
    M2 m{};
    m[i / 2][i % 2] = 1;
    return m;
}

inline M2 mul(const M2& a, const M2& b)
{
    M2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

inline M2 transpose(const M2& a)
{
    M2 t{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            t[i][j] = a[j][i];
    return t;
}

inline M2 add(const M2& a, const M2& b, const Q& s = 1)
{
    M2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][j] + s * b[i][j];
    return c;
}

/// xyz = (z ybar) x - (z xbar) y + (x ybar) z with bar = transpose
inline M2 structurable_product(const M2& x, const M2& y, const M2& z)
{
    M2 a = mul(mul(z, transpose(y)), x);
    M2 b = mul(mul(z, transpose(x)), y);
    M2 c = mul(mul(x, transpose(y)), z);
    return add(add(a, b, -1), c);
}

inline Row flat(const M2& m)
{
    return {m[0][0], m[0][1], m[1][0], m[1][1]};
}

/// Number of sl(2) modules of each dimension d = 1, 2, 3 in (graded algebra + sl2), read
/// off from h-eigenvalue multiplicities: h acts by n on grade n, and sl2 adds weights 2, 0, -2.
inline std::array<std::size_t, 3> module_counts(const std::array<std::size_t, 5>& grades)
{
    const std::size_t m2 = grades[4] + 1, m1 = grades[3], m0 = grades[2] + 1;
    return {m0 - m2, m1, m2};
}

}  // namespace oracle
