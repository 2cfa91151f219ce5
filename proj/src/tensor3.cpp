#include "cubinv/tensor3.hpp"

namespace cubinv {

SymVector3::SymVector3(VarTablePtr table)
    : table_(std::move(table)), entries_(3, Polynomial(table_)) {}

SymVector3::SymVector3(Polynomial x, Polynomial y, Polynomial z) : table_(x.table()) {
    if (!(*y.table() == *table_) || !(*z.table() == *table_)) {
        throw UsageError("vector entries over different variable tables");
    }
    entries_ = {std::move(x), std::move(y), std::move(z)};
}

SymMatrix3::SymMatrix3(VarTablePtr table) : table_(std::move(table)), entries_(9, Polynomial(table_)) {}

SymMatrix3::SymMatrix3(VarTablePtr table, std::vector<Polynomial> entries)
    : table_(std::move(table)), entries_(std::move(entries)) {
    if (entries_.size() != 9) throw UsageError("3x3 matrix needs nine entries");
    for (const auto& e : entries_) {
        if (!(*e.table() == *table_)) throw UsageError("matrix entries over different variable tables");
    }
}

SymMatrix3 SymMatrix3::identity(VarTablePtr table) {
    SymMatrix3 m(std::move(table));
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = Polynomial::constant(m.table_, Rational(1));
    return m;
}

SymMatrix3 SymMatrix3::from_rows(const VarTablePtr& table,
                                 const std::array<std::array<Rational, 3>, 3>& rows) {
    SymMatrix3 m(table);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = Polynomial::constant(table, rows[i][j]);
    }
    return m;
}

bool SymMatrix3::is_symmetric() const {
    return (*this)(0, 1) == (*this)(1, 0) && (*this)(0, 2) == (*this)(2, 0) && (*this)(1, 2) == (*this)(2, 1);
}

bool SymMatrix3::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

SymMatrix3 SymMatrix3::transpose() const {
    SymMatrix3 t(table_);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    }
    return t;
}

SymMatrix3& SymMatrix3::operator+=(const SymMatrix3& o) {
    for (std::size_t k = 0; k < 9; ++k) entries_[k] += o.entries_[k];
    return *this;
}

SymMatrix3 operator-(const SymMatrix3& a, const SymMatrix3& b) {
    SymMatrix3 out = a;
    for (std::size_t k = 0; k < 9; ++k) out.entries_[k] -= b.entries_[k];
    return out;
}

SymMatrix3 operator*(const SymMatrix3& a, const SymMatrix3& b) {
    SymMatrix3 out(a.table_);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Polynomial acc(a.table_);
            for (std::size_t k = 0; k < 3; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc += a(i, k) * b(k, j);
            }
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

SymMatrix3 operator*(const Polynomial& s, const SymMatrix3& a) {
    SymMatrix3 out(a.table_);
    for (std::size_t k = 0; k < 9; ++k) out.entries_[k] = s * a.entries_[k];
    return out;
}

SymVector3 operator*(const SymMatrix3& a, const SymVector3& v) {
    SymVector3 out(a.table_);
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial acc(a.table_);
        for (std::size_t k = 0; k < 3; ++k) acc += a(i, k) * v[k];
        out[i] = std::move(acc);
    }
    return out;
}

Polynomial trace(const SymMatrix3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

SymMatrix3 outer(const SymVector3& v) {
    SymMatrix3 out(v.table());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = v[i] * v[j];
    }
    return out;
}

Polynomial double_contract(const SymMatrix3& a, const SymMatrix3& b) {
    Polynomial acc(a.table());
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (a(i, j).is_zero() || b(i, j).is_zero()) continue;
            acc += a(i, j) * b(i, j);
        }
    }
    return acc;
}

Polynomial dot(const SymVector3& a, const SymVector3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

SymMatrix3 dbar(const SymMatrix3& a) {
    SymMatrix3 out = a;
    for (std::size_t i = 0; i < 3; ++i) out(i, i) = Polynomial(a.table());
    return out;
}

SymMatrix3 ddev(const SymMatrix3& a) {
    const Polynomial third = trace(a).scaled(Rational(1, 3));
    SymMatrix3 out(a.table());
    for (std::size_t i = 0; i < 3; ++i) out(i, i) = a(i, i) - third;
    return out;
}

CubicSplit cubic_split(const SymMatrix3& a) {
    if (!a.is_symmetric()) throw UsageError("cubic_split needs a symmetric matrix");
    return {ddev(a), dbar(a), trace(a)};
}

}  // namespace cubinv
