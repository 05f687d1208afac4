#include "cqda/rational_lp.hpp"

#include "cqda/errors.hpp"

namespace cqda {

mpq_class lp_maximize(std::vector<std::vector<mpq_class>> const& a, std::vector<mpq_class> const& b,
                      std::vector<mpq_class> const& c)
{
    std::size_t const m = a.size();
    std::size_t const n = c.size();
    std::size_t const width = n + m + 1;

    // Rows 0..m-1 are constraints, row m is the objective z - c.y = 0.
    std::vector<std::vector<mpq_class>> t(m + 1, std::vector<mpq_class>(width));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            throw Error("lp_maximize needs a nonnegative right-hand side");
        }
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = a[i][j];
        }
        t[i][n + i] = 1;
        t[i][width - 1] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) {
        t[m][j] = -c[j];
    }

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            return t[m][width - 1];
        }

        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) {
                continue;
            }
            mpq_class ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            throw Error("linear program is unbounded");
        }

        mpq_class pivot = t[leave][enter];
        for (auto& x : t[leave]) {
            x /= pivot;
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave || t[i][enter] == 0) {
                continue;
            }
            mpq_class factor = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) {
                t[i][j] -= factor * t[leave][j];
            }
        }
        basis[leave] = enter;
    }
}

}  // namespace cqda
