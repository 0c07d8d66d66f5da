#ifndef RITT_LATTICE_HPP
#define RITT_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <ritt/error.hpp>
#include <ritt/rational.hpp>

namespace ritt {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Rank over Q of a list of row vectors (all of equal length).
inline std::size_t rational_rank(RationalMatrix rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && is_zero(rows[piv][c]))
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (is_zero(rows[i][c]))
                continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Row-style Hermite normal form of the lattice spanned by the rows: the
/// nonzero rows of the unique echelon basis with positive pivots and entries
/// above each pivot reduced into [0, pivot).
inline IntegerMatrix hermite_basis(IntegerMatrix rows)
{
    if (rows.empty())
        return {};
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclid on column c among rows r.. until one nonzero entry remains.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size())
                break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j)
                    rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[r][c] == 0)
            continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r])
                x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = c; j < cols; ++j)
                    rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

/// Coordinates c with sum_j c_j basis_j = target, if the target lies in the
/// span of the (independent) basis rows.
inline std::optional<std::vector<Rational>> solve_coordinates(const RationalMatrix& basis,
                                                              const std::vector<Rational>& target)
{
    const std::size_t k = basis.size();
    const std::size_t m = target.size();
    // Augmented system: m equations in k unknowns.
    RationalMatrix a(m, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a[i][j] = basis[j].at(i);
        a[i][k] = target[i];
    }
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && is_zero(a[piv][c]))
            ++piv;
        if (piv == m)
            continue;
        std::swap(a[r], a[piv]);
        const Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || is_zero(a[i][c]))
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j <= k; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!is_zero(a[i][k]))
            return std::nullopt;
    if (pivcol.size() != k)
        throw DomainError("basis vectors are linearly dependent");
    std::vector<Rational> x(k);
    for (std::size_t i = 0; i < r; ++i)
        x[pivcol[i]] = a[i][k];
    return x;
}

} // namespace ritt

#endif // RITT_LATTICE_HPP
