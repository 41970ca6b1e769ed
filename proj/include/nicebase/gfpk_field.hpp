// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
//
// Arithmetic in GF(p^k) as polynomial residues over Z_p, plus Z_p-linear
// forms on the field. Desk scale: field axioms are verified exhaustively
// at construction for p^k <= 64.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nicebase {

// An element of GF(p^k): coefficient vector of length k over Z_p
// (coeffs[i] multiplies theta^i, theta a root of the context polynomial).
struct FieldElem {
    std::vector<int> c;
    bool operator==(const FieldElem& o) const { return c == o.c; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool is_zero() const {
        for (int x : c)
            if (x != 0) return false;
        return true;
    }
};

class FieldCtx {
  public:
    // Uses the built-in irreducible polynomial when none is given.
    // Throws on non-prime p or a reducible polynomial.
    FieldCtx(int p, int k, std::optional<std::vector<int>> irreducible = std::nullopt);

    int p() const { return p_; }
    int k() const { return k_; }
    long size() const { return size_; }  // p^k
    const std::vector<int>& irreducible() const { return irred_; }

    FieldElem zero() const { return FieldElem{std::vector<int>(static_cast<size_t>(k_), 0)}; }
    FieldElem one() const;
    FieldElem theta() const;  // the polynomial generator x
    FieldElem from_index(long idx) const;   // base-p digits = coefficients
    long index_of(const FieldElem& x) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem scalar_mul(int s, const FieldElem& a) const;  // s in Z_p
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, long e) const;

    std::string str(const FieldElem& x) const;

  private:
    void check_axioms() const;
    int p_, k_;
    long size_;
    std::vector<int> irred_;  // monic, length k+1
};

// A nonzero Z_p-linear form b on GF(p^k); the pairing (x, y) -> b(x*y) is
// verified non-degenerate at construction.
class LinearForm {
  public:
    LinearForm(const FieldCtx& field, std::vector<int> coeffs);
    // Default form: extracts the constant coefficient, b(sum a_i theta^i) = a_0.
    static LinearForm coefficient_form(const FieldCtx& field);

    int operator()(const FieldElem& x) const;
    const std::vector<int>& coeffs() const { return coeffs_; }
    // b(x * y)
    int pairing(const FieldCtx& field, const FieldElem& x, const FieldElem& y) const;

  private:
    int p_;
    std::vector<int> coeffs_;
};

}  // namespace nicebase
