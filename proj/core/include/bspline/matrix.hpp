#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bspline/errors.hpp"

namespace bspline {

/// Small dense row-major matrix over an arbitrary field-like scalar.
/// Eigen is used for geometry; exact rational matrices stay here.
template <typename T>
class Matrix
{
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    /// Sum over columns for each row; for a basis matrix this is (1, 0, ..., 0).
    std::vector<T> row_sums() const
    {
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out[r] += (*this)(r, c);
        return out;
    }

    template <typename U, typename Fn>
    Matrix<U> map(Fn&& fn) const
    {
        Matrix<U> out(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                out(r, c) = fn((*this)(r, c));
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw SizeError("matrix sum: shape mismatch");
        Matrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] += b.data_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw SizeError("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& lhs = a(r, k);
                if (lhs == T(0))
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out(r, c) += lhs * b(k, c);
            }
        return out;
    }

    friend Matrix operator*(const T& s, Matrix m)
    {
        for (auto& v : m.data_)
            v *= s;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

} // namespace bspline
