#ifndef HSURF_LINALG_HPP
#define HSURF_LINALG_HPP

#include <optional>
#include <vector>

#include "hsurf/field.hpp"

namespace hsurf {

// Dense matrix over an exact field; just enough for rank/solve/nullspace work
// on the small systems the geometry layer produces.
class Matrix {
public:
    Matrix(FieldSpec field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

    static Matrix identity(FieldSpec field, size_t n);
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<FieldElement>>& rows);
    static Matrix from_columns(FieldSpec field, const std::vector<std::vector<FieldElement>>& cols);

    const FieldSpec& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
    // Horizontal concatenation [this | o].
    Matrix augment(const Matrix& o) const;

    size_t rank() const;
    FieldElement det() const;
    // Basis of the right null space {v : Av = 0}.
    std::vector<std::vector<FieldElement>> null_space() const;
    // One solution of Ax = b, if any.
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;
    // L with L * this == identity; requires full column rank.
    Matrix left_inverse() const;

private:
    FieldSpec field_;
    size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

} // namespace hsurf

#endif
