#include "theta/matrix.hpp"

#include <sstream>

#include "theta/errors.hpp"

namespace theta {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in multiplication");
    return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InternalError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InternalError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw InternalError("matrix shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Int a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
        }
    return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
    if (cols_ != v.size()) throw InternalError("matrix shape mismatch in product");
    IntVector r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) r[i] = checked_add(r[i], checked_mul((*this)(i, k), v[k]));
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch in sum");
    IntMatrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_add(r.data_[i], o.data_[i]);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + o.scaled(-1); }

IntMatrix IntMatrix::scaled(Int k) const {
    IntMatrix r(*this);
    for (auto& x : r.data_) x = checked_mul(x, k);
    return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw InternalError("matrix shape mismatch in hcat");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace theta
