#pragma once

#include <vector>

#include "quasiord/fracvec.hpp"
#include "quasiord/polynomial.hpp"

namespace quasiord {

// Linear weight map Q^{d+t} -> Q^c, one nonzero column per variable
// (x1..xd, then u0..u_{t-1}). The main variable carries no weight.
class WeightMap {
public:
    WeightMap() = default;
    WeightMap(int codomain, std::vector<FracVector> cols)
        : c_(codomain), cols_(std::move(cols)) {
        for (const auto& col : cols_) {
            if (static_cast<int>(col.size()) != c_)
                throw SignatureMismatch("weight column of wrong length");
            if (is_zero(col)) throw ZeroWeight("zero weight column");
        }
    }

    static WeightMap identity(int d) {
        std::vector<FracVector> cols(d, FracVector(d, Rat(0)));
        for (int i = 0; i < d; ++i) cols[i][i] = Rat(1);
        return WeightMap(d, std::move(cols));
    }

    int codomain() const { return c_; }
    int columns() const { return static_cast<int>(cols_.size()); }
    const FracVector& column(int i) const { return cols_[i]; }

    // Appends v as the weight of the next tower variable.
    WeightMap extend(const FracVector& v) const {
        if (static_cast<int>(v.size()) != c_)
            throw SignatureMismatch("extend: weight of wrong length");
        if (is_zero(v)) throw ZeroWeight("extend: zero weight");
        if (!is_nonneg(v)) throw ZeroWeight("extend: negative weight entry");
        auto cols = cols_;
        cols.push_back(v);
        return WeightMap(c_, std::move(cols));
    }

    // The same linear map applied to a rational vector.
    FracVector apply(const FracVector& v) const {
        if (static_cast<int>(v.size()) != columns())
            throw SignatureMismatch("apply: vector length mismatch");
        FracVector w(c_, Rat(0));
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero())
                for (int i = 0; i < c_; ++i) w[i] += v[j] * cols_[j][i];
        return w;
    }

    // W(a, b): exact matrix-vector product over the base and tower exponents.
    FracVector weight_of(const Exponents& e) const {
        if (static_cast<int>(e.base.size() + e.tower.size()) != columns())
            throw SignatureMismatch("weight_of: exponent length mismatch");
        FracVector w(c_, Rat(0));
        int col = 0;
        for (int a : e.base) {
            if (a != 0)
                for (int i = 0; i < c_; ++i) w[i] += Rat(a) * cols_[col][i];
            ++col;
        }
        for (int b : e.tower) {
            if (b != 0)
                for (int i = 0; i < c_; ++i) w[i] += Rat(b) * cols_[col][i];
            ++col;
        }
        return w;
    }

private:
    int c_ = 0;
    std::vector<FracVector> cols_;
};

}  // namespace quasiord
