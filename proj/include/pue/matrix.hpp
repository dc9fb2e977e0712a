#ifndef PUE_MATRIX_HPP
#define PUE_MATRIX_HPP

#include "pue/galois_field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pue {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Symbol> data);

    /// Validates every code against the field order.
    static Matrix from_codes(FieldPtr field, const std::vector<std::vector<unsigned>>& rows);

    const GaloisField& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Symbol operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Symbol& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

    std::span<const Symbol> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Symbol> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Symbol>& data() const noexcept { return data_; }

    Matrix transpose() const;
    /// Columns [first, first + count).
    Matrix block_columns(std::size_t first, std::size_t count) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_->q() == b.field_->q() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Symbol> data_;
};

/// Reduced row echelon form; zero rows are dropped. `pivots` receives the pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Matrix product over the common field.
Matrix multiply(const Matrix& a, const Matrix& b);

std::size_t hamming_weight(std::span<const Symbol> v) noexcept;

/// Inner product over the field.
Symbol dot(const GaloisField& f, std::span<const Symbol> a, std::span<const Symbol> b) noexcept;

}  // namespace pue

#endif  // PUE_MATRIX_HPP
