#ifndef SGT_MATRIX_HPP
#define SGT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sgt/error.hpp"

namespace sgt {

/// Row-major dense square-or-rectangular matrix.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw Error(ErrorKind::ParameterRange, "ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    bool symmetric() const {
        if (!square())
            return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i))
                    return false;
        return true;
    }

    template <class U>
    DenseMatrix<U> cast() const {
        DenseMatrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = static_cast<U>((*this)(i, j));
        return out;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;
using RealMatrix = DenseMatrix<double>;

/// Adjacency matrix of a signed graph: symmetric, zero diagonal, entries in
/// {-1, 0, +1}. Construction validates all three.
class SignedMatrix {
public:
    SignedMatrix() = default;

    explicit SignedMatrix(IntMatrix entries) : entries_(std::move(entries)) {
        if (!entries_.square())
            throw Error(ErrorKind::NotSymmetric, "signed matrix must be square");
        for (std::size_t i = 0; i < entries_.rows(); ++i) {
            if (entries_(i, i) != 0)
                throw Error(ErrorKind::NotSymmetric,
                            "signed matrix has nonzero diagonal at " + std::to_string(i));
            for (std::size_t j = 0; j < entries_.cols(); ++j) {
                auto a = entries_(i, j);
                if (a < -1 || a > 1)
                    throw Error(ErrorKind::ParameterRange, "signed matrix entry outside {-1,0,1}");
                if (a != entries_(j, i))
                    throw Error(ErrorKind::NotSymmetric,
                                "signed matrix not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
            }
        }
    }

    std::size_t order() const noexcept { return entries_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const IntMatrix& entries() const noexcept { return entries_; }

    friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

private:
    IntMatrix entries_;
};

} // namespace sgt

#endif // SGT_MATRIX_HPP
