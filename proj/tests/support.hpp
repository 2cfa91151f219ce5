#pragma once

#include "cubinv/polynomial.hpp"

#include <random>

namespace cubinv::testing {

inline Rational small_rational(std::mt19937_64& rng, long bound = 9) {
    const long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    const long den = static_cast<long>(rng() % bound) + 1;
    return Rational(num, den);
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 9) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    }
    return m;
}

// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937_64& rng, const VarTablePtr& table, int terms, int max_degree) {
    Polynomial p(table);
    for (int t = 0; t < terms; ++t) {
        Polynomial mono = Polynomial::constant(table, small_rational(rng));
        const int degree = static_cast<int>(rng() % (max_degree + 1));
        for (int k = 0; k < degree; ++k) mono *= Polynomial::variable(table, rng() % table->size());
        p += mono;
    }
    return p;
}

// Random bi-homogeneous polynomial of bi-degree (alpha, beta) over a table
// whose magnetization variables precede its stress variables.
inline Polynomial random_bihomogeneous(std::mt19937_64& rng, const VarTablePtr& table, int alpha, int beta,
                                       int terms) {
    std::vector<std::size_t> mags, stresses;
    for (std::size_t i = 0; i < table->size(); ++i) {
        ((*table)[i].kind == VarKind::Magnetization ? mags : stresses).push_back(i);
    }
    Polynomial p(table);
    for (int t = 0; t < terms; ++t) {
        Rational c = small_rational(rng);
        if (c.is_zero()) c = Rational(1);
        Polynomial mono = Polynomial::constant(table, c);
        for (int k = 0; k < alpha; ++k) mono *= Polynomial::variable(table, mags[rng() % mags.size()]);
        for (int k = 0; k < beta; ++k) mono *= Polynomial::variable(table, stresses[rng() % stresses.size()]);
        p += mono;
    }
    return p;
}

// Independent rank: plain fraction Gaussian elimination.
inline std::size_t naive_rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace cubinv::testing
