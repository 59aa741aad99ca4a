#include "quasiord/simplex.hpp"

namespace quasiord {

bool in_hull_plus_orthant(const FracVector& p, const std::vector<FracVector>& points) {
    if (points.empty()) return false;
    const int c = static_cast<int>(p.size());
    const int m = static_cast<int>(points.size());
    for (const auto& q : points)
        if (static_cast<int>(q.size()) != c)
            throw SignatureMismatch("in_hull_plus_orthant: point length mismatch");

    // Constraints (over lambda_1..lambda_m, slack s_1..s_c, all >= 0):
    //   sum_i lambda_i q_i[j] + s_j = p[j]   for j < c
    //   sum_i lambda_i              = 1
    const int rows = c + 1;
    const int nvar = m + c;         // structural variables
    const int total = nvar + rows;  // plus one artificial per row

    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(total, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    for (int j = 0; j < c; ++j) {
        for (int i = 0; i < m; ++i) a[j][i] = points[i][j];
        a[j][m + j] = Rat(1);
        rhs[j] = p[j];
    }
    for (int i = 0; i < m; ++i) a[c][i] = Rat(1);
    rhs[c] = Rat(1);

    for (int r = 0; r < rows; ++r) {
        if (rhs[r].sign() < 0) {
            for (auto& x : a[r]) x = -x;
            rhs[r] = -rhs[r];
        }
        a[r][nvar + r] = Rat(1);
    }

    // Phase-1 objective: minimize the sum of artificials. Reduced costs for
    // the all-artificial starting basis.
    std::vector<Rat> cost(total, Rat(0));
    Rat objective(0);
    for (int r = 0; r < rows; ++r) {
        for (int j = 0; j < nvar; ++j) cost[j] -= a[r][j];
        objective += rhs[r];
    }
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) basis[r] = nvar + r;

    while (true) {
        int enter = -1;
        for (int j = 0; j < total; ++j)
            if (cost[j].sign() < 0) { enter = j; break; }  // Bland: lowest index
        if (enter < 0) break;

        int leave = -1;
        Rat best(0);
        for (int r = 0; r < rows; ++r) {
            if (a[r][enter].sign() <= 0) continue;
            Rat ratio = rhs[r] / a[r][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave < 0) break;  // cannot happen: phase-1 objective is bounded

        Rat piv = a[leave][enter];
        for (auto& x : a[leave]) x /= piv;
        rhs[leave] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == leave || a[r][enter].is_zero()) continue;
            Rat f = a[r][enter];
            for (int j = 0; j < total; ++j) a[r][j] -= f * a[leave][j];
            rhs[r] -= f * rhs[leave];
        }
        if (!cost[enter].is_zero()) {
            Rat f = cost[enter];
            for (int j = 0; j < total; ++j) cost[j] -= f * a[leave][j];
            objective += f * rhs[leave];
        }
        basis[leave] = enter;
    }

    return objective.is_zero();
}

}  // namespace quasiord
