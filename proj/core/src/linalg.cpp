#include "hsurf/linalg.hpp"

#include <cassert>

namespace hsurf {

Matrix Matrix::identity(FieldSpec field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<FieldElement>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw MismatchError("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) {
            if (rows[i][j].field() != field) throw MismatchError("matrix entry field mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, const std::vector<std::vector<FieldElement>>& cols) {
    return from_rows(field, cols).transpose();
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw MismatchError("matrix product shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw MismatchError("matrix-vector shape mismatch");
    std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::augment(const Matrix& o) const {
    if (rows_ != o.rows_) throw MismatchError("augment: row count mismatch");
    Matrix m(field_, rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<size_t> echelonize(Matrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t Matrix::rank() const {
    Matrix m(*this);
    return echelonize(m).size();
}

FieldElement Matrix::det() const {
    if (rows_ != cols_) throw MismatchError("determinant of non-square matrix");
    Matrix m(*this);
    FieldElement d = FieldElement::one(field_);
    for (size_t col = 0; col < cols_; ++col) {
        size_t sel = col;
        while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
        if (sel == rows_) return FieldElement::zero(field_);
        if (sel != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        FieldElement inv = m.at(col, col).inverse();
        for (size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col) * inv;
            for (size_t j = col; j < cols_; ++j) m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return d;
}

std::vector<std::vector<FieldElement>> Matrix::null_space() const {
    Matrix m(*this);
    std::vector<size_t> pivots = echelonize(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
        v[freec] = FieldElement::one(field_);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> Matrix::solve(const std::vector<FieldElement>& b) const {
    if (b.size() != rows_) throw MismatchError("solve: rhs size mismatch");
    Matrix rhs(field_, rows_, 1);
    for (size_t i = 0; i < rows_; ++i) rhs.at(i, 0) = b[i];
    Matrix aug = augment(rhs);
    std::vector<size_t> pivots = echelonize(aug);
    // inconsistent if a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<FieldElement> x(cols_, FieldElement::zero(field_));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

Matrix Matrix::left_inverse() const {
    Matrix aug = augment(identity(field_, rows_));
    std::vector<size_t> pivots = echelonize(aug);
    size_t r = 0;
    for (size_t c : pivots)
        if (c < cols_) ++r;
    if (r != cols_) throw MismatchError("left_inverse requires full column rank");
    Matrix out(field_, cols_, rows_);
    for (size_t i = 0; i < cols_; ++i)
        for (size_t j = 0; j < rows_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

} // namespace hsurf
