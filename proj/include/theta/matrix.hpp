#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace theta {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const;
    IntVector row(std::size_t i) const;
    IntMatrix transpose() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(Int k) const;
    // Horizontal concatenation.
    IntMatrix hcat(const IntMatrix& o) const;

    bool operator==(const IntMatrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Overflow-checked helpers; throw theta::InternalError on overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace theta
