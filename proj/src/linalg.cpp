// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/linalg.hpp"

#include <stdexcept>

namespace nicebase {

namespace {

struct Echelon {
    CycMatrix reduced;           // row-reduced matrix
    std::vector<long> pivot_cols;
};

Echelon row_reduce(CycMatrix a) {
    Echelon e{a, {}};
    long row = 0;
    for (long col = 0; col < a.cols() && row < a.rows(); ++col) {
        long pr = -1;
        for (long r = row; r < a.rows(); ++r)
            if (!e.reduced.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (long c = 0; c < a.cols(); ++c) std::swap(e.reduced.at(pr, c), e.reduced.at(row, c));
        CycScalar inv = e.reduced.at(row, col).inverse();
        for (long c = col; c < a.cols(); ++c) e.reduced.at(row, c) = e.reduced.at(row, c) * inv;
        for (long r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            CycScalar f = e.reduced.at(r, col);
            if (f.is_zero()) continue;
            for (long c = col; c < a.cols(); ++c)
                e.reduced.at(r, c) -= f * e.reduced.at(row, c);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

long mat_rank(const CycMatrix& a) { return static_cast<long>(row_reduce(a).pivot_cols.size()); }

CycMatrix nullspace(const CycMatrix& a) {
    Echelon e = row_reduce(a);
    std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
    for (long c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    long free_count = a.cols() - static_cast<long>(e.pivot_cols.size());
    CycMatrix basis(a.cols(), free_count);
    long k = 0;
    for (long fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        basis.at(fc, k) = CycScalar::one();
        for (size_t pi = 0; pi < e.pivot_cols.size(); ++pi)
            basis.at(e.pivot_cols[pi], k) = -e.reduced.at(static_cast<long>(pi), fc);
        ++k;
    }
    return basis;
}

std::optional<CycMatrix> solve_linear(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear shape mismatch");
    CycMatrix aug(a.rows(), a.cols() + b.cols());
    for (long r = 0; r < a.rows(); ++r) {
        for (long c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        for (long c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
    }
    Echelon e = row_reduce(aug);
    // inconsistent if a pivot falls in the rhs block
    for (long c : e.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    CycMatrix x(a.cols(), b.cols());
    for (size_t pi = 0; pi < e.pivot_cols.size(); ++pi)
        for (long c = 0; c < b.cols(); ++c)
            x.at(e.pivot_cols[pi], c) = e.reduced.at(static_cast<long>(pi), a.cols() + c);
    return x;
}

CycMatrix column_space_basis(const CycMatrix& a) {
    Echelon e = row_reduce(a);
    CycMatrix basis(a.rows(), static_cast<long>(e.pivot_cols.size()));
    for (size_t k = 0; k < e.pivot_cols.size(); ++k)
        for (long r = 0; r < a.rows(); ++r) basis.at(r, static_cast<long>(k)) = a.at(r, e.pivot_cols[k]);
    return basis;
}

CycScalar inner(const CycMatrix& u, const CycMatrix& v) {
    if (u.rows() != v.rows() || u.cols() != 1 || v.cols() != 1)
        throw std::invalid_argument("inner product expects equal-length column vectors");
    CycScalar s = CycScalar::zero();
    for (long i = 0; i < u.rows(); ++i) s += u.at(i, 0).conj() * v.at(i, 0);
    return s;
}

CycScalar norm_sq(const CycMatrix& v) { return inner(v, v); }

CycMatrix column(const CycMatrix& a, long j) {
    CycMatrix c(a.rows(), 1);
    for (long i = 0; i < a.rows(); ++i) c.at(i, 0) = a.at(i, j);
    return c;
}

CycMatrix orthonormalize_columns(const CycMatrix& a) {
    std::vector<CycMatrix> ortho;
    for (long j = 0; j < a.cols(); ++j) {
        CycMatrix v = column(a, j);
        for (const auto& u : ortho) {
            CycScalar coef = inner(u, v);
            if (coef.is_zero()) continue;
            for (long i = 0; i < v.rows(); ++i) v.at(i, 0) -= coef * u.at(i, 0);
        }
        CycScalar ns = norm_sq(v);
        auto q = ns.as_rational();
        if (!q)
            throw std::domain_error("orthonormalize_columns: squared norm not rational: " + ns.str());
        if (*q == 0) throw std::invalid_argument("orthonormalize_columns: dependent columns");
        CycScalar inv_norm = CycScalar::sqrt_of_rational(*q).inverse();
        ortho.push_back(v.scaled(inv_norm));
    }
    CycMatrix out(a.rows(), a.cols());
    for (long j = 0; j < a.cols(); ++j)
        for (long i = 0; i < a.rows(); ++i) out.at(i, j) = ortho[static_cast<size_t>(j)].at(i, 0);
    return out;
}

CycMatrix vectorize(const CycMatrix& m) {
    CycMatrix v(m.rows() * m.cols(), 1);
    long k = 0;
    for (long c = 0; c < m.cols(); ++c)
        for (long r = 0; r < m.rows(); ++r) v.at(k++, 0) = m.at(r, c);
    return v;
}

long span_rank(const std::vector<CycMatrix>& mats) {
    if (mats.empty()) return 0;
    long dim = mats[0].rows() * mats[0].cols();
    CycMatrix stack(dim, static_cast<long>(mats.size()));
    for (size_t j = 0; j < mats.size(); ++j) {
        CycMatrix v = vectorize(mats[j]);
        for (long i = 0; i < dim; ++i) stack.at(i, static_cast<long>(j)) = v.at(i, 0);
    }
    return mat_rank(stack);
}

bool in_span(const CycMatrix& m, const std::vector<CycMatrix>& basis) {
    if (basis.empty()) return m.is_zero();
    long dim = m.rows() * m.cols();
    CycMatrix stack(dim, static_cast<long>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        CycMatrix v = vectorize(basis[j]);
        for (long i = 0; i < dim; ++i) stack.at(i, static_cast<long>(j)) = v.at(i, 0);
    }
    return solve_linear(stack, vectorize(m)).has_value();
}

}  // namespace nicebase
