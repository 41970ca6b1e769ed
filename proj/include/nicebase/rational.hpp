// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace nicebase {

// Arbitrary-precision rational. All arithmetic in the toolkit bottoms out
// here; GMP keeps values in lowest terms with a positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Exact long extraction, throws on overflow. Used by JSON output where the
// canonical format stores numerator/denominator as JSON integers.
inline int64_t int_to_i64(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for JSON number: " + z.get_str());
    return static_cast<int64_t>(z.get_si());
}

}  // namespace nicebase
