#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gcrop::train {

// Dense row-major matrix of doubles. Just enough linear algebra for the
// training kernel; rows double as embedding vectors.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double value = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, value) {}

    double& operator()(int r, int c) noexcept {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    double operator()(int r, int c) const noexcept {
        return data[static_cast<std::size_t>(r) * cols + c];
    }

    std::span<double> row(int r) noexcept {
        return {data.data() + static_cast<std::size_t>(r) * cols,
                static_cast<std::size_t>(cols)};
    }
    std::span<const double> row(int r) const noexcept {
        return {data.data() + static_cast<std::size_t>(r) * cols,
                static_cast<std::size_t>(cols)};
    }

    bool same_shape(const Matrix& other) const noexcept {
        return rows == other.rows && cols == other.cols;
    }
};

}  // namespace gcrop::train
