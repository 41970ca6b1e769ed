// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Linear codes over GF(p^k), duals relative to a Z_p-linear form b, and the
// construction of quantum codes from nested classical codes: logical states
// are coset sums, the stabilizing subgroup comes from C_u D_v operators with
// u in C_0 and v in the b-dual of C.

#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "nicebase/codes.hpp"
#include "nicebase/gfpk_field.hpp"

namespace nicebase {

using Codeword = std::vector<FieldElem>;  // length-n vector over GF(p^k)

// GF(p^k)-linear code, given by GF-independent generator rows.
struct LinearCode {
    long n = 0;
    std::vector<Codeword> gen;
    long dim() const { return static_cast<long>(gen.size()); }
};

// Z_p-linear subspace of GF(p^k)^n (not necessarily GF-linear), given by
// Z_p-independent basis vectors.
struct ZpCode {
    long n = 0;
    std::vector<Codeword> basis;
    long zp_dim() const { return static_cast<long>(basis.size()); }
};

LinearCode make_linear_code(const FieldCtx& field, long n, std::vector<Codeword> rows);
ZpCode make_zp_code(const FieldCtx& field, long n, std::vector<Codeword> vectors);
ZpCode to_zp_code(const FieldCtx& field, const LinearCode& code);

bool zp_contains(const FieldCtx& field, const ZpCode& code, const Codeword& w);
bool linear_contains(const FieldCtx& field, const LinearCode& code, const Codeword& w);

// All codewords (|code| <= 2^20), in deterministic order.
std::vector<Codeword> enumerate_codewords(const FieldCtx& field, const ZpCode& code);

// D^{perp b} = { x : for all y in D, sum_t b(x_t * y_t) = 0 }.
ZpCode dual_b_zp(const FieldCtx& field, const ZpCode& code, const LinearForm& b);

// Same dual for a GF-linear code; the result is verified GF-linear and
// returned with a GF-generator.
LinearCode dual_b(const FieldCtx& field, const LinearCode& code, const LinearForm& b);

// Ordinary dual { x : sum_t x_t * y_t = 0 in GF(p^k) }.
LinearCode dual_ordinary(const FieldCtx& field, const LinearCode& code);

// Computes both duals and compares them as sets. They are provably equal,
// so `false` is unreachable: a mismatch raises std::logic_error.
bool check_dual_equality(const FieldCtx& field, const LinearCode& code, const LinearForm& b);

// Minimum Hamming weight over GF(p^k) symbols of the nonzero codewords.
long min_weight(const FieldCtx& field, const ZpCode& code);
long min_weight(const FieldCtx& field, const LinearCode& code);

// Index of a length-n word in the computational basis of (C^(p^k))^(x n);
// symbol 0 is the most significant digit, matching Kronecker order.
long word_state_index(const FieldCtx& field, const Codeword& w);
Codeword word_of_state_index(const FieldCtx& field, long n, long index);

// C_u D_v acting on the n-fold space, as an exact matrix.
CycMatrix code_displacement(const FieldCtx& field, const LinearForm& b, const Codeword& u,
                            const Codeword& v);

struct QuantumCodePair {
    CodeSpace code;                    // span of the logical coset-sum states
    std::vector<CycMatrix> logicals;   // |i_L>, normalized, in coset order
    std::vector<Codeword> coset_leaders;
    FiniteMatrixGroup stabilizer;      // fixing operators together with the phase
    long stabilizer_chi = -1;          // appearing character with C(chi) = code
    // (u, v, j) with w^j C_u D_v fixing every logical state (j as exponent
    // of the primitive p-th root; determined by computation)
    std::vector<std::tuple<Codeword, Codeword, long>> fixing;
};

// Builds the quantum code of a nested pair C_0 < C (Z_p-codimension >= 1;
// codimension 1 gives the p logical states |i_L> = sum_{x in C0} |x + i c|).
// The fixing set is verified exhaustively against
// { (u, v) : u in C_0, v in C^{perp b} } and the code is identified as a
// character code of the stabilizing subgroup.
QuantumCodePair quantum_code_from_pair(const FieldCtx& field, const LinearCode& c,
                                       const ZpCode& c0, const LinearForm& b,
                                       std::optional<Codeword> leader = std::nullopt);

struct GfpkCodeReport {
    long min_weight_c = 0;
    long min_weight_dual_c0 = 0;
    long e = 0;  // largest e with both minimum weights >= 2e + 1
    bool direct_checked = false;      // ambient small enough for brute force
    bool detect_verified = false;     // all errors on <= 2e subsystems detectable
    bool correct_verified = false;    // all errors on <= e subsystems correctable
    std::optional<std::pair<Codeword, Codeword>> weight1_undetectable;
};

// Minimum-weight criterion with direct verification through the code-space
// machinery when the ambient dimension is at most 64.
GfpkCodeReport gfpk_code_report(const FieldCtx& field, const LinearCode& c, const ZpCode& c0,
                                const LinearForm& b);

}  // namespace nicebase
