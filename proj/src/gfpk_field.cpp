// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/gfpk_field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nicebase {

namespace {

bool small_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// monic irreducible defaults (Conway-style), coefficient of x^i at index i
const std::map<std::pair<int, int>, std::vector<int>>& default_polys() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},           {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},     {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{3, 2}, {2, 2, 1}},           {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},           {{7, 2}, {3, 6, 1}},
    };
    return table;
}

using Poly = std::vector<int>;  // over Z_p, coefficient of x^i at index i

void ptrim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    ptrim(r);
    return r;
}

Poly pmod(Poly a, const Poly& f, int p) {
    // f monic
    ptrim(a);
    long df = static_cast<long>(f.size()) - 1;
    for (long i = static_cast<long>(a.size()) - 1; i >= df; --i) {
        int c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (long j = 0; j <= df; ++j) {
            long idx = i - df + j;
            a[static_cast<size_t>(idx)] = ((a[static_cast<size_t>(idx)] - c * f[static_cast<size_t>(j)]) % p + p) % p;
        }
    }
    ptrim(a);
    return a;
}

Poly ppowmod(Poly base, long e, const Poly& f, int p) {
    Poly r{1};
    base = pmod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = pmod(pmul(r, base, p), f, p);
        base = pmod(pmul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, int p) {
    ptrim(a);
    ptrim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        // normalize b monic for pmod
        int lead = b.back();
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (lead * t % p == 1) { inv = t; break; }
        Poly bm = b;
        for (auto& c : bm) c = c * inv % p;
        Poly r = pmod(a, bm, p);
        a = b;
        b = r;
    }
    return a;
}

bool rabin_irreducible(const Poly& f, int p) {
    long k = static_cast<long>(f.size()) - 1;
    if (k < 1) return false;
    // x^(p^k) = x mod f
    long q = 1;
    for (long i = 0; i < k; ++i) q *= p;
    Poly x{0, 1};
    Poly xq = ppowmod(x, q, f, p);
    Poly diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    ptrim(diff);
    if (!(diff.size() == 1 && diff[0] == 0)) return false;
    // gcd(x^(p^(k/r)) - x, f) = 1 for each prime r | k
    for (long r = 2; r <= k; ++r) {
        if (k % r != 0) continue;
        bool rp = true;
        for (long s = 2; s * s <= r; ++s)
            if (r % s == 0) { rp = false; break; }
        if (!rp) continue;
        long qq = 1;
        for (long i = 0; i < k / r; ++i) qq *= p;
        Poly xr = ppowmod(x, qq, f, p);
        Poly d = xr;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        ptrim(d);
        Poly g = pgcd(f, d, p);
        if (!(g.size() == 1 && g[0] != 0)) return false;
    }
    return true;
}

}  // namespace

FieldCtx::FieldCtx(int p, int k, std::optional<std::vector<int>> irreducible) : p_(p), k_(k) {
    if (!small_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
    size_ = 1;
    for (int i = 0; i < k; ++i) {
        size_ *= p;
        if (size_ > (1 << 20)) throw std::invalid_argument("field too large");
    }
    if (irreducible) {
        irred_ = *irreducible;
        if (static_cast<int>(irred_.size()) != k + 1 || irred_.back() % p != 1)
            throw std::invalid_argument("irreducible polynomial must be monic of degree k");
        for (auto& c : irred_) c = ((c % p) + p) % p;
        if (k > 1 && !rabin_irreducible(irred_, p))
            throw std::invalid_argument("polynomial is reducible over Z_p");
    } else if (k == 1) {
        irred_ = {0, 1};
    } else {
        auto it = default_polys().find({p, k});
        if (it == default_polys().end())
            throw std::invalid_argument("no built-in irreducible polynomial for GF(" +
                                        std::to_string(p) + "^" + std::to_string(k) + ")");
        irred_ = it->second;
    }
    if (size_ <= 64) check_axioms();
}

FieldElem FieldCtx::one() const {
    FieldElem e = zero();
    e.c[0] = 1 % p_;
    return e;
}

FieldElem FieldCtx::theta() const {
    if (k_ < 2) throw std::logic_error("theta undefined for prime fields");
    FieldElem e = zero();
    e.c[1] = 1;
    return e;
}

FieldElem FieldCtx::from_index(long idx) const {
    if (idx < 0 || idx >= size_) throw std::out_of_range("field index out of range");
    FieldElem e = zero();
    for (int i = 0; i < k_; ++i) {
        e.c[static_cast<size_t>(i)] = static_cast<int>(idx % p_);
        idx /= p_;
    }
    return e;
}

long FieldCtx::index_of(const FieldElem& x) const {
    long idx = 0;
    for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + x.c[static_cast<size_t>(i)];
    return idx;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[static_cast<size_t>(i)] = (a.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)]) % p_;
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r = zero();
    for (int i = 0; i < k_; ++i)
        r.c[static_cast<size_t>(i)] = ((a.c[static_cast<size_t>(i)] - b.c[static_cast<size_t>(i)]) % p_ + p_) % p_;
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    Poly prod = pmul(Poly(a.c.begin(), a.c.end()), Poly(b.c.begin(), b.c.end()), p_);
    Poly red = (k_ > 1) ? pmod(std::move(prod), irred_, p_) : std::move(prod);
    FieldElem r = zero();
    for (size_t i = 0; i < red.size() && i < static_cast<size_t>(k_); ++i) r.c[i] = red[i];
    return r;
}

FieldElem FieldCtx::scalar_mul(int s, const FieldElem& a) const {
    s = ((s % p_) + p_) % p_;
    FieldElem r = zero();
    for (int i = 0; i < k_; ++i) r.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)] * s % p_;
    return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, long e) const {
    FieldElem r = one(), b = a;
    if (e < 0) { b = inv(a); e = -e; }
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero field element");
    FieldElem r = pow(a, size_ - 2);
    if (mul(r, a) != one()) throw std::logic_error("field inverse verification failed");
    return r;
}

std::string FieldCtx::str(const FieldElem& x) const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << x.c[static_cast<size_t>(i)];
    }
    os << "]";
    return os.str();
}

void FieldCtx::check_axioms() const {
    for (long i = 0; i < size_; ++i) {
        FieldElem a = from_index(i);
        if (index_of(a) != i) throw std::logic_error("field index round trip fails");
        for (long j = 0; j < size_; ++j) {
            FieldElem b = from_index(j);
            if (mul(a, b) != mul(b, a)) throw std::logic_error("field multiplication not commutative");
            for (long l = 0; l < size_; ++l) {
                FieldElem c = from_index(l);
                if (mul(a, mul(b, c)) != mul(mul(a, b), c))
                    throw std::logic_error("field multiplication not associative");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::logic_error("field distributivity fails");
            }
        }
        if (i > 0 && mul(a, inv(a)) != one()) throw std::logic_error("field inverse fails");
    }
}

LinearForm::LinearForm(const FieldCtx& field, std::vector<int> coeffs) : p_(field.p()), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field.k())
        throw std::invalid_argument("linear form needs k coefficients");
    for (auto& c : coeffs_) c = ((c % p_) + p_) % p_;
    bool nonzero = false;
    for (int c : coeffs_)
        if (c != 0) nonzero = true;
    if (!nonzero) throw std::invalid_argument("linear form must be nonzero (degenerate pairing)");
    // non-degeneracy of (x, y) -> b(x*y), verified rather than assumed
    for (long i = 1; i < field.size(); ++i) {
        FieldElem x = field.from_index(i);
        bool hit = false;
        for (long j = 0; j < field.size() && !hit; ++j)
            if (pairing(field, x, field.from_index(j)) != 0) hit = true;
        if (!hit) throw std::invalid_argument("bilinear form b(x*y) is degenerate");
    }
}

LinearForm LinearForm::coefficient_form(const FieldCtx& field) {
    std::vector<int> c(static_cast<size_t>(field.k()), 0);
    c[0] = 1;
    return LinearForm(field, std::move(c));
}

int LinearForm::operator()(const FieldElem& x) const {
    int acc = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) acc = (acc + coeffs_[i] * x.c[i]) % p_;
    return acc;
}

int LinearForm::pairing(const FieldCtx& field, const FieldElem& x, const FieldElem& y) const {
    return (*this)(field.mul(x, y));
}

}  // namespace nicebase
