#pragma once

#include "cubinv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cubinv {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transpose() const;
    RatVector operator*(const RatVector& v) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row-echelon form; pivots are chosen as the first nonzero entry of
/// each column scanning rows top to bottom.
RatMatrix rref(const RatMatrix& m);

/// Pivot column indices of rref(m), ascending.
std::vector<std::size_t> pivot_columns(const RatMatrix& reduced);

/// Exact rank, computed by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

/// Canonical kernel basis: one vector per free column of rref(m), free columns
/// ascending. Each vector has coprime integer entries and a positive leading
/// nonzero entry.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Scales v to coprime integer entries with a positive leading nonzero entry.
RatVector primitive(const RatVector& v);

}  // namespace cubinv
