#pragma once

#include "cubinv/polynomial.hpp"

#include <array>
#include <vector>

namespace cubinv {

/// 3-vector with polynomial entries over one variable table.
class SymVector3 {
public:
    explicit SymVector3(VarTablePtr table);
    SymVector3(Polynomial x, Polynomial y, Polynomial z);

    const VarTablePtr& table() const { return table_; }
    const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
    Polynomial& operator[](std::size_t i) { return entries_[i]; }

    friend bool operator==(const SymVector3& a, const SymVector3& b) { return a.entries_ == b.entries_; }

private:
    VarTablePtr table_;
    std::vector<Polynomial> entries_;
};

/// 3x3 matrix with polynomial entries over one variable table.
class SymMatrix3 {
public:
    explicit SymMatrix3(VarTablePtr table);
    /// Row-major list of nine entries.
    SymMatrix3(VarTablePtr table, std::vector<Polynomial> entries);

    static SymMatrix3 identity(VarTablePtr table);
    static SymMatrix3 from_rows(const VarTablePtr& table, const std::array<std::array<Rational, 3>, 3>& rows);

    const VarTablePtr& table() const { return table_; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[3 * i + j]; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[3 * i + j]; }

    bool is_symmetric() const;
    bool is_zero() const;
    SymMatrix3 transpose() const;

    SymMatrix3& operator+=(const SymMatrix3& o);
    friend SymMatrix3 operator+(SymMatrix3 a, const SymMatrix3& b) { return a += b; }
    friend SymMatrix3 operator-(const SymMatrix3& a, const SymMatrix3& b);
    friend SymMatrix3 operator*(const SymMatrix3& a, const SymMatrix3& b);
    friend SymMatrix3 operator*(const Polynomial& s, const SymMatrix3& a);
    friend SymVector3 operator*(const SymMatrix3& a, const SymVector3& v);

    friend bool operator==(const SymMatrix3& a, const SymMatrix3& b) { return a.entries_ == b.entries_; }

private:
    VarTablePtr table_;
    std::vector<Polynomial> entries_;
};

inline SymMatrix3 mat_mul(const SymMatrix3& a, const SymMatrix3& b) { return a * b; }
Polynomial trace(const SymMatrix3& a);
/// v v^T
SymMatrix3 outer(const SymVector3& v);
/// sum_ij a_ij b_ij
Polynomial double_contract(const SymMatrix3& a, const SymMatrix3& b);
Polynomial dot(const SymVector3& a, const SymVector3& b);

/// Zero-diagonal part: off-diagonal entries kept, diagonal cleared.
SymMatrix3 dbar(const SymMatrix3& a);
/// Diagonal deviatoric part: a_ii - tr(a)/3 on the diagonal, zero elsewhere.
SymMatrix3 ddev(const SymMatrix3& a);

struct CubicSplit {
    SymMatrix3 d;
    SymMatrix3 dbar;
    Polynomial trace;
};

/// a = d + dbar + (trace/3) 1. Throws UsageError for non-symmetric input.
CubicSplit cubic_split(const SymMatrix3& a);

}  // namespace cubinv
