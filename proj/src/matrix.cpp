#include "pue/matrix.hpp"

#include "pue/errors.hpp"

#include <string>
#include <utility>

namespace pue {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix data size does not match shape");
    for (Symbol s : data_)
        if (!field_->contains(s.code)) throw ParameterError("symbol code " + std::to_string(s.code) + " not in field");
}

Matrix Matrix::from_codes(FieldPtr field, const std::vector<std::vector<unsigned>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Symbol> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
        for (unsigned c : r) {
            if (!field->contains(c)) throw ParameterError("symbol code " + std::to_string(c) + " not in field");
            data.emplace_back(c);
        }
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::block_columns(std::size_t first, std::size_t count) const {
    Matrix b(field_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) b(r, c) = (*this)(r, first + c);
    return b;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
    const GaloisField& f = m.field();
    Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(lead, j));
        const Symbol scale = f.inv(a(lead, c));
        for (std::size_t j = 0; j < a.cols(); ++j) a(lead, j) = f.mul(a(lead, j), scale);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c).is_zero()) continue;
            const Symbol factor = f.neg(a(r, c));
            for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = f.add(a(r, j), f.mul(factor, a(lead, j)));
        }
        piv.push_back(c);
        ++lead;
    }
    if (pivots) *pivots = piv;
    std::vector<Symbol> kept(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(lead * a.cols()));
    return Matrix(a.field_ptr(), lead, a.cols(), std::move(kept));
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    if (a.field().q() != b.field().q()) throw DimensionMismatch("matrix product over different fields");
    const GaloisField& f = a.field();
    Matrix out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Symbol x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    return out;
}

std::size_t hamming_weight(std::span<const Symbol> v) noexcept {
    std::size_t w = 0;
    for (Symbol s : v) w += !s.is_zero();
    return w;
}

Symbol dot(const GaloisField& f, std::span<const Symbol> a, std::span<const Symbol> b) noexcept {
    Symbol acc = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

}  // namespace pue
