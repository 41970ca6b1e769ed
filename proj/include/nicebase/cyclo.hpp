// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in cyclotomic fields Q(zeta_m) and dense matrices over
// them. Every unitary, projector and character value in the toolkit is a
// CycScalar/CycMatrix, so group-theoretic identities can be tested with
// zero tolerance.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nicebase/rational.hpp"

namespace nicebase {

// Largest admissible cyclotomic order when mixed-order arithmetic embeds
// operands into the lcm field. Guards against accidental order blowup.
inline constexpr long kMaxCycOrder = 1 << 16;

long euler_phi(long m);

// m-th cyclotomic polynomial, monic with integer coefficients,
// coefficient of x^i at index i. Results are cached.
const std::vector<Int>& cyclotomic_poly(long m);

// An element of Q(zeta_m), stored as a length-m rational coefficient vector
// in canonical form: the polynomial is reduced modulo the m-th cyclotomic
// polynomial, so only exponents below phi(m) carry nonzero coefficients.
// Two values of equal order are equal iff their coefficient vectors agree;
// mixed orders are compared after embedding into the lcm field.
class CycScalar {
  public:
    CycScalar() : order_(1), coeffs_(1, Rat(0)) {}

    // cyc_canonicalize: accepts raw coefficients of any length, folds
    // exponents mod `order`, reduces mod the cyclotomic polynomial.
    static CycScalar canonical(long order, std::vector<Rat> raw);

    static CycScalar zero() { return CycScalar(); }
    static CycScalar one() { return from_rational(Rat(1)); }
    static CycScalar from_rational(const Rat& q);
    static CycScalar from_int(long v) { return from_rational(Rat(v)); }
    // zeta(m)^k
    static CycScalar zeta(long m, long k = 1);
    // i = zeta_4
    static CycScalar imag_unit() { return zeta(4); }
    // Exact square root of a nonnegative rational, as an element of a
    // cyclotomic field (Gauss sums realize sqrt(p)). Verified by squaring.
    static CycScalar sqrt_of_rational(const Rat& q);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // cyc_embed: value-preserving embedding into Q(zeta_new_order);
    // new_order must be a multiple of order().
    CycScalar embedded(long new_order) const;

    bool is_zero() const;
    bool is_one() const { return *this == one(); }
    bool is_rational() const;
    std::optional<Rat> as_rational() const;

    CycScalar conj() const;
    CycScalar inverse() const;

    CycScalar operator-() const;
    CycScalar& operator+=(const CycScalar& o) { *this = *this + o; return *this; }
    CycScalar& operator-=(const CycScalar& o) { *this = *this - o; return *this; }
    CycScalar& operator*=(const CycScalar& o) { *this = *this * o; return *this; }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    CycScalar pow(long e) const;

    // Order as a root of unity (smallest t > 0 with s^t = 1), if s is one.
    std::optional<long> root_of_unity_order() const;

    // Floating-point shadow used by the numeric spectral path.
    std::complex<double> to_complex() const;

    // Re-expresses the value in the smallest cyclotomic subfield Q(zeta_d),
    // d | order, that contains it. Stable key for cross-order hashing.
    CycScalar minimized() const;

    // Deterministic byte key; equal values of equal order produce equal keys.
    std::string key() const;

    std::string str() const;

  private:
    CycScalar(long order, std::vector<Rat> canonical_coeffs)
        : order_(order), coeffs_(std::move(canonical_coeffs)) {}

    long order_;
    std::vector<Rat> coeffs_;
};

// Smallest common field order, capped at kMaxCycOrder.
long common_order(long a, long b);

// Dense matrix over a cyclotomic field. Entries may carry different orders;
// operations embed on demand.
class CycMatrix {
  public:
    CycMatrix() : rows_(0), cols_(0) {}
    CycMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols)) {}

    static CycMatrix identity(long n);
    static CycMatrix zeros(long rows, long cols) { return CycMatrix(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const CycScalar& at(long r, long c) const { return entries_[static_cast<size_t>(r * cols_ + c)]; }
    CycScalar& at(long r, long c) { return entries_[static_cast<size_t>(r * cols_ + c)]; }

    CycMatrix dagger() const;    // conjugate transpose
    CycMatrix transpose() const;
    CycScalar trace() const;
    CycMatrix kron(const CycMatrix& o) const;

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix operator+(const CycMatrix& o) const;
    CycMatrix operator-(const CycMatrix& o) const;
    CycMatrix operator-() const;
    CycMatrix scaled(const CycScalar& s) const;

    bool operator==(const CycMatrix& o) const;
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    bool is_hermitian() const { return *this == dagger(); }
    bool is_unitary() const;
    // lambda with M = lambda * I, if any
    std::optional<CycScalar> scalar_of_identity() const;

    CycMatrix pow(long e) const;  // e >= 0

    CycScalar det() const;
    CycMatrix inverse() const;

    // lcm of entry orders (>= 1)
    long unified_order() const;

    std::string key() const;

    std::vector<std::vector<std::complex<double>>> to_complex() const;

  private:
    long rows_, cols_;
    std::vector<CycScalar> entries_;
};

// is_proportional: returns lambda with A = lambda * B if one exists (exactly).
// For A = 0 returns lambda = 0. B = 0 is rejected (lambda would be ambiguous).
std::optional<CycScalar> is_proportional(const CycMatrix& a, const CycMatrix& b);

}  // namespace nicebase
