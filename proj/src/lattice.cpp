#include "quasiord/lattice.hpp"

#include <utility>

namespace quasiord {

namespace {

// Scale {e_i} and the generators by the lcm N of all denominators involved,
// producing integer columns spanning N * (Z^d + sum Z g_j).
std::pair<std::vector<std::vector<Int>>, Int> scaled_columns(
    int d, const std::vector<FracVector>& generators, const FracVector* extra) {
    Int n(1);
    for (const auto& g : generators)
        for (const auto& x : g) n = lcm(n, x.den());
    if (extra)
        for (const auto& x : *extra) n = lcm(n, x.den());

    std::vector<std::vector<Int>> cols;
    for (int i = 0; i < d; ++i) {
        std::vector<Int> c(d, 0);
        c[i] = n;
        cols.push_back(std::move(c));
    }
    for (const auto& g : generators) {
        std::vector<Int> c(d);
        for (int i = 0; i < d; ++i) c[i] = g[i].num() * (n / g[i].den());
        cols.push_back(std::move(c));
    }
    return {std::move(cols), n};
}

}  // namespace

std::vector<std::vector<Int>> hermite_basis(std::vector<std::vector<Int>> cols, int d) {
    const int m = static_cast<int>(cols.size());
    for (int row = 0; row < d; ++row) {
        while (true) {
            int pivot = -1;
            for (int j = row; j < m; ++j) {
                if (cols[j][row] == 0) continue;
                if (pivot < 0 || abs(cols[j][row]) < abs(cols[pivot][row])) pivot = j;
            }
            if (pivot < 0) throw DegenerateLattice("hermite_basis: rank deficient");
            std::swap(cols[row], cols[pivot]);
            bool reduced = true;
            for (int j = row + 1; j < m; ++j) {
                if (cols[j][row] == 0) continue;
                Int q = cols[j][row] / cols[row][row];  // truncated division
                if (q != 0)
                    for (int i = 0; i < d; ++i) cols[j][i] -= q * cols[row][i];
                if (cols[j][row] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (cols[row][row] < 0)
            for (int i = 0; i < d; ++i) cols[row][i] = -cols[row][i];
    }
    cols.resize(d);
    return cols;
}

bool lattice_membership(const FracVector& v, const std::vector<FracVector>& generators) {
    const int d = static_cast<int>(v.size());
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != d)
            throw SignatureMismatch("lattice_membership: generator length mismatch");
    auto [cols, n] = scaled_columns(d, generators, &v);
    auto h = hermite_basis(std::move(cols), d);

    std::vector<Int> w(d);
    for (int i = 0; i < d; ++i) w[i] = v[i].num() * (n / v[i].den());
    for (int i = 0; i < d; ++i) {
        if (w[i] % h[i][i] != 0) return false;
        Int y = w[i] / h[i][i];
        for (int k = i; k < d; ++k) w[k] -= y * h[i][k];
    }
    return true;
}

std::vector<int> lattice_indices(const std::vector<FracVector>& gammas) {
    if (gammas.empty()) return {};
    const int d = static_cast<int>(gammas.front().size());
    std::vector<int> indices;
    for (size_t i = 0; i < gammas.size(); ++i) {
        std::vector<FracVector> prev(gammas.begin(), gammas.begin() + i);
        if (lattice_membership(gammas[i], prev))
            throw DegenerateLattice("generator " + std::to_string(i + 1) +
                                    " already lies in the previous lattice");
        std::vector<FracVector> cur(gammas.begin(), gammas.begin() + i + 1);
        // Same denominator scale for both chains keeps the ratio exact.
        Int n(1);
        for (const auto& g : cur)
            for (const auto& x : g) n = lcm(n, x.den());
        auto det = [&](const std::vector<FracVector>& gens) {
            std::vector<std::vector<Int>> cols;
            for (int k = 0; k < d; ++k) {
                std::vector<Int> c(d, 0);
                c[k] = n;
                cols.push_back(std::move(c));
            }
            for (const auto& g : gens) {
                std::vector<Int> c(d);
                for (int k = 0; k < d; ++k) c[k] = g[k].num() * (n / g[k].den());
                cols.push_back(std::move(c));
            }
            auto h = hermite_basis(std::move(cols), d);
            Int p(1);
            for (int k = 0; k < d; ++k) p *= h[k][k];
            return p;
        };
        Int ratio = det(prev) / det(cur);
        indices.push_back(static_cast<int>(ratio.get_si()));
    }
    return indices;
}

}  // namespace quasiord
