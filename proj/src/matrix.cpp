#include "cubinv/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cubinv {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ragged matrix initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch");
    }
    RatVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) {
                acc += a * v[c];
            }
        }
        out[r] = acc;
    }
    return out;
}

RatMatrix rref(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && a(p, c).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != lead) {
            for (std::size_t k = 0; k < cols; ++k) {
                std::swap(a(p, k), a(lead, k));
            }
        }
        const Rational inv = a(lead, c).inverse();
        for (std::size_t k = c; k < cols; ++k) {
            if (!a(lead, k).is_zero()) {
                a(lead, k) *= inv;
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a(r, c).is_zero()) {
                continue;
            }
            const Rational f = a(r, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (!a(lead, k).is_zero()) {
                    a(r, k) -= f * a(lead, k);
                }
            }
        }
        ++lead;
    }
    return a;
}

std::vector<std::size_t> pivot_columns(const RatMatrix& reduced) {
    std::vector<std::size_t> pivots;
    std::size_t c = 0;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        while (c < reduced.cols() && reduced(r, c).is_zero()) {
            ++c;
        }
        if (c == reduced.cols()) {
            break;
        }
        pivots.push_back(c);
        ++c;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Clear denominators row by row; rank is unchanged by nonzero row scaling.
    std::vector<Integer> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            l = lcm(l, m(r, c).den());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Rational& x = m(r, c);
            a[r * cols + c] = x.num() * (l / x.den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

    Integer prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && sgn(at(p, c)) == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        if (p != rk) {
            for (std::size_t k = 0; k < cols; ++k) {
                std::swap(at(p, k), at(rk, k));
            }
        }
        const Integer pivot = at(rk, c);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            const Integer f = at(r, c);
            for (std::size_t k = c + 1; k < cols; ++k) {
                Integer v = pivot * at(r, k) - f * at(rk, k);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, k) = std::move(v);
            }
            at(r, c) = 0;
        }
        prev = pivot;
        ++rk;
    }
    return rk;
}

RatVector primitive(const RatVector& v) {
    Integer l = 1;
    for (const auto& x : v) {
        l = lcm(l, x.den());
    }
    Integer g = 0;
    for (const auto& x : v) {
        g = gcd(g, x.num() * (l / x.den()));
    }
    if (sgn(g) == 0) {
        return v;
    }
    int lead_sign = 0;
    for (const auto& x : v) {
        if (!x.is_zero()) {
            lead_sign = x.sign();
            break;
        }
    }
    const Rational scale = Rational(Integer(l * lead_sign), g);
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.push_back(x * scale);
    }
    return out;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    const RatMatrix reduced = rref(m);
    const std::vector<std::size_t> pivots = pivot_columns(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RatVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -reduced(r, free);
        }
        basis.push_back(primitive(v));
    }
    return basis;
}

}  // namespace cubinv
