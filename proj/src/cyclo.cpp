// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nicebase {

namespace {

// ---- small polynomial helpers (coefficient-of-x^i at index i) ----

void poly_trim(std::vector<Int>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic. Remainder must be 0.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    poly_trim(num);
    if (num.size() < den.size()) {
        for (const auto& c : num)
            if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
        return {Int(0)};
    }
    std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
    for (long i = static_cast<long>(num.size()) - 1; i >= static_cast<long>(den.size()) - 1; --i) {
        Int c = num[static_cast<size_t>(i)];
        if (c == 0) continue;
        long shift = i - (static_cast<long>(den.size()) - 1);
        quot[static_cast<size_t>(shift)] = c;
        for (size_t j = 0; j < den.size(); ++j)
            num[static_cast<size_t>(shift) + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

// Reduce a rational polynomial modulo a monic integer polynomial, in place.
void poly_reduce_mod_monic(std::vector<Rat>& p, const std::vector<Int>& mod) {
    const long deg_mod = static_cast<long>(mod.size()) - 1;
    for (long i = static_cast<long>(p.size()) - 1; i >= deg_mod; --i) {
        Rat c = p[static_cast<size_t>(i)];
        if (c == 0) continue;
        p[static_cast<size_t>(i)] = 0;
        long shift = i - deg_mod;
        for (long j = 0; j < deg_mod; ++j) {
            if (mod[static_cast<size_t>(j)] == 0) continue;
            p[static_cast<size_t>(shift + j)] -= c * Rat(mod[static_cast<size_t>(j)]);
        }
    }
}

std::vector<long> divisors(long m) {
    std::vector<long> ds;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            ds.push_back(d);
            if (d != m / d) ds.push_back(m / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

long powmod(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = static_cast<long>((__int128)r * base % mod);
        base = static_cast<long>((__int128)base * base % mod);
        exp >>= 1;
    }
    return r;
}

}  // namespace

long euler_phi(long m) {
    if (m < 1) throw std::invalid_argument("euler_phi of non-positive order");
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Int>& cyclotomic_poly(long m) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Int>&(long)> get = [&](long k) -> const std::vector<Int>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<Int> phi_k;
        if (k == 1) {
            phi_k = {Int(-1), Int(1)};  // x - 1
        } else {
            // (x^k - 1) / prod_{d | k, d < k} Phi_d
            std::vector<Int> num(static_cast<size_t>(k) + 1, Int(0));
            num[0] = -1;
            num[static_cast<size_t>(k)] = 1;
            for (long d : divisors(k)) {
                if (d == k) continue;
                num = poly_div_exact(std::move(num), get(d));
            }
            phi_k = std::move(num);
        }
        return cache.emplace(k, std::move(phi_k)).first->second;
    };
    return get(m);
}

long common_order(long a, long b) {
    long g = std::gcd(a, b);
    long l = a / g * b;
    if (l > kMaxCycOrder)
        throw std::domain_error("cyclotomic order " + std::to_string(l) + " exceeds cap " +
                                std::to_string(kMaxCycOrder));
    return l;
}

// ---- CycScalar ----

CycScalar CycScalar::canonical(long order, std::vector<Rat> raw) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    std::vector<Rat> folded(static_cast<size_t>(order), Rat(0));
    for (size_t j = 0; j < raw.size(); ++j) {
        raw[j].canonicalize();  // GMP comparisons require lowest terms
        if (raw[j] != 0) folded[j % static_cast<size_t>(order)] += raw[j];
    }
    poly_reduce_mod_monic(folded, cyclotomic_poly(order));
    return CycScalar(order, std::move(folded));
}

CycScalar CycScalar::from_rational(const Rat& q) {
    std::vector<Rat> c(1, q);
    c[0].canonicalize();  // GMP comparisons require lowest terms
    return CycScalar(1, std::move(c));
}

CycScalar CycScalar::zeta(long m, long k) {
    if (m < 1) throw std::invalid_argument("zeta order must be >= 1");
    k %= m;
    if (k < 0) k += m;
    std::vector<Rat> raw(static_cast<size_t>(m), Rat(0));
    raw[static_cast<size_t>(k)] = 1;
    return canonical(m, std::move(raw));
}

CycScalar CycScalar::embedded(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::invalid_argument("embedding target order must be a multiple of source order");
    long t = new_order / order_;
    std::vector<Rat> raw(static_cast<size_t>(new_order), Rat(0));
    for (long j = 0; j < order_; ++j)
        raw[static_cast<size_t>(j * t)] = coeffs_[static_cast<size_t>(j)];
    return canonical(new_order, std::move(raw));
}

bool CycScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    return true;
}

std::optional<Rat> CycScalar::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CycScalar CycScalar::conj() const {
    std::vector<Rat> raw(static_cast<size_t>(order_), Rat(0));
    for (long j = 0; j < order_; ++j) {
        long jj = (order_ - j) % order_;
        raw[static_cast<size_t>(jj)] += coeffs_[static_cast<size_t>(j)];
    }
    return canonical(order_, std::move(raw));
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    long m = common_order(a.order_, b.order_);
    CycScalar ea = a.embedded(m), eb = b.embedded(m);
    for (size_t j = 0; j < ea.coeffs_.size(); ++j) ea.coeffs_[j] += eb.coeffs_[j];
    return ea;  // sum of reduced representatives is reduced
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar CycScalar::operator-() const {
    CycScalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    long m = common_order(a.order_, b.order_);
    CycScalar ea = a.embedded(m), eb = b.embedded(m);
    std::vector<Rat> prod(static_cast<size_t>(m), Rat(0));
    for (long i = 0; i < m; ++i) {
        const Rat& ci = ea.coeffs_[static_cast<size_t>(i)];
        if (ci == 0) continue;
        for (long j = 0; j < m; ++j) {
            const Rat& cj = eb.coeffs_[static_cast<size_t>(j)];
            if (cj == 0) continue;
            prod[static_cast<size_t>((i + j) % m)] += ci * cj;
        }
    }
    return CycScalar::canonical(m, std::move(prod));
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    long m = common_order(a.order_, b.order_);
    return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic");
    if (is_rational()) return from_rational(Rat(1) / coeffs_[0]);
    // Extended Euclid in Q[x] against the (irreducible) cyclotomic polynomial:
    // u * this + v * Phi = gcd = const, so inverse = u / const.
    const auto& phi_int = cyclotomic_poly(order_);
    std::vector<Rat> r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    std::vector<Rat> r1(coeffs_.begin(), coeffs_.end());
    auto deg = [](const std::vector<Rat>& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[static_cast<size_t>(i)] != 0) return i;
        return -1L;
    };
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of `this`
    while (deg(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> rem = r0, quo(static_cast<size_t>(std::max(deg(r0) - deg(r1) + 1, 1L)), Rat(0));
        long d1 = deg(r1);
        const Rat& lead = r1[static_cast<size_t>(d1)];
        for (long i = deg(rem); i >= d1; --i) {
            Rat c = rem[static_cast<size_t>(i)];
            if (c == 0) continue;
            Rat q = c / lead;
            quo[static_cast<size_t>(i - d1)] = q;
            for (long j = 0; j <= d1; ++j)
                rem[static_cast<size_t>(i - d1 + j)] -= q * r1[static_cast<size_t>(j)];
        }
        // s_next = s0 - quo * s1
        std::vector<Rat> s_next(std::max(s0.size(), quo.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s_next[i] = s0[i];
        for (size_t i = 0; i < quo.size(); ++i) {
            if (quo[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= quo[i] * s1[j];
        }
        r0 = r1; r1 = rem;
        s0 = s1; s1 = s_next;
    }
    long d = deg(r1);
    if (d != 0) throw std::logic_error("gcd with cyclotomic polynomial not constant");
    const Rat& g = r1[0];
    std::vector<Rat> inv(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / g;
    CycScalar res = canonical(order_, std::move(inv));
    if (!(res * *this).is_one()) throw std::logic_error("cyclotomic inverse verification failed");
    return res;
}

CycScalar CycScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar r = one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::optional<long> CycScalar::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    if (!(*this * conj()).is_one()) return std::nullopt;
    long cap = 2 * order_ + 2;
    CycScalar p = *this;
    for (long t = 1; t <= cap; ++t) {
        if (p.is_one()) return t;
        p = p * *this;
    }
    return std::nullopt;
}

std::complex<double> CycScalar::to_complex() const {
    long double re = 0.0L, im = 0.0L;
    const long double tau = 2.0L * 3.141592653589793238462643383279502884L;
    for (long j = 0; j < order_; ++j) {
        const Rat& c = coeffs_[static_cast<size_t>(j)];
        if (c == 0) continue;
        long double v = static_cast<long double>(c.get_d());
        long double ang = tau * static_cast<long double>(j) / static_cast<long double>(order_);
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

CycScalar CycScalar::minimized() const {
    if (is_rational()) return from_rational(coeffs_[0]);
    for (long d : divisors(order_)) {
        if (d == order_) break;
        // Solve  sum_j x_j * zeta_order^(j * order/d) = this  for rational x.
        long t = order_ / d;
        long cols = euler_phi(d);
        // canonical coordinates of each candidate basis power
        std::vector<std::vector<Rat>> basis;
        basis.reserve(static_cast<size_t>(cols));
        for (long j = 0; j < cols; ++j)
            basis.push_back(zeta(order_, j * t).coeffs_);
        // Gaussian elimination on the (order x cols) system, rhs = coeffs_.
        std::vector<std::vector<Rat>> aug(static_cast<size_t>(order_),
                                          std::vector<Rat>(static_cast<size_t>(cols) + 1, Rat(0)));
        for (long r = 0; r < order_; ++r) {
            for (long c = 0; c < cols; ++c) aug[static_cast<size_t>(r)][static_cast<size_t>(c)] = basis[static_cast<size_t>(c)][static_cast<size_t>(r)];
            aug[static_cast<size_t>(r)][static_cast<size_t>(cols)] = coeffs_[static_cast<size_t>(r)];
        }
        long row = 0;
        std::vector<long> pivot_col;
        for (long c = 0; c < cols && row < order_; ++c) {
            long pr = -1;
            for (long r = row; r < order_; ++r)
                if (aug[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(aug[static_cast<size_t>(pr)], aug[static_cast<size_t>(row)]);
            Rat lead = aug[static_cast<size_t>(row)][static_cast<size_t>(c)];
            for (long cc = c; cc <= cols; ++cc) aug[static_cast<size_t>(row)][static_cast<size_t>(cc)] /= lead;
            for (long r = 0; r < order_; ++r) {
                if (r == row) continue;
                Rat f = aug[static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (f == 0) continue;
                for (long cc = c; cc <= cols; ++cc)
                    aug[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * aug[static_cast<size_t>(row)][static_cast<size_t>(cc)];
            }
            pivot_col.push_back(c);
            ++row;
        }
        bool consistent = true;
        for (long r = row; r < order_; ++r)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(cols)] != 0) { consistent = false; break; }
        if (!consistent) continue;
        std::vector<Rat> x(static_cast<size_t>(cols), Rat(0));
        for (long i = 0; i < row; ++i)
            x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = aug[static_cast<size_t>(i)][static_cast<size_t>(cols)];
        CycScalar cand = canonical(d, std::move(x));
        if (cand.embedded(order_).coeffs_ == coeffs_) return cand;
    }
    return *this;
}

std::string CycScalar::key() const {
    std::ostringstream os;
    os << order_;
    for (const auto& c : coeffs_) os << '|' << c.get_str();
    return os.str();
}

std::string CycScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = 0; j < order_; ++j) {
        const Rat& c = coeffs_[static_cast<size_t>(j)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "z" << order_;
            if (j != 1) os << "^" << j;
        }
    }
    return os.str();
}

namespace {

// Legendre symbol (a|p) for odd prime p.
long legendre(long a, long p) {
    long r = powmod(a, (p - 1) / 2, p);
    return r == p - 1 ? -1 : r;
}

CycScalar sqrt_prime(long p) {
    if (p == 2) return CycScalar::zeta(8) + CycScalar::zeta(8, 7);
    // Quadratic Gauss sum: g = sum_t (t|p) zeta_p^t equals sqrt(p) for
    // p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
    CycScalar g = CycScalar::zero();
    for (long t = 1; t < p; ++t) {
        CycScalar term = CycScalar::zeta(p, t);
        g = (legendre(t, p) == 1) ? g + term : g - term;
    }
    if (p % 4 == 1) return g;
    return CycScalar::zeta(4, 3) * g;  // -i * g
}

}  // namespace

CycScalar CycScalar::sqrt_of_rational(const Rat& q) {
    if (q < 0) throw std::domain_error("sqrt_of_rational of negative value");
    if (q == 0) return zero();
    Int n = q.get_num() * q.get_den();  // sqrt(q) = sqrt(num*den)/den
    Int square_part(1), rem = n;
    std::vector<long> squarefree_primes;
    for (Int p(2); p * p <= rem; ++p) {
        if (rem % p != 0) continue;
        long count = 0;
        while (rem % p == 0) { rem /= p; ++count; }
        for (long i = 0; i < count / 2; ++i) square_part *= p;
        if (count % 2 == 1) {
            if (!p.fits_slong_p()) throw std::domain_error("sqrt_of_rational: prime factor too large");
            squarefree_primes.push_back(p.get_si());
        }
    }
    if (rem > 1) {
        if (!rem.fits_slong_p()) throw std::domain_error("sqrt_of_rational: prime factor too large");
        squarefree_primes.push_back(rem.get_si());
    }
    Rat rational_part = Rat(square_part) / Rat(q.get_den());
    CycScalar result = from_rational(rational_part);
    for (long p : squarefree_primes) result = result * sqrt_prime(p);
    if (result * result != from_rational(q))
        throw std::logic_error("sqrt_of_rational verification failed");
    return result;
}

// ---- CycMatrix ----

CycMatrix CycMatrix::identity(long n) {
    CycMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = CycScalar::one();
    return m;
}

CycMatrix CycMatrix::dagger() const {
    CycMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
    return r;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

CycScalar CycMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
    CycScalar t = CycScalar::zero();
    for (long i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
    CycMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            const CycScalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (long k = 0; k < o.rows_; ++k)
                for (long l = 0; l < o.cols_; ++l) {
                    if (o.at(k, l).is_zero()) continue;
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
                }
        }
    return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    CycMatrix r(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const CycScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const CycScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    CycMatrix r(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const { return *this + (-o); }

CycMatrix CycMatrix::operator-() const {
    CycMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

CycMatrix CycMatrix::scaled(const CycScalar& s) const {
    CycMatrix r = *this;
    for (auto& e : r.entries_) e = e * s;
    return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

bool CycMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool CycMatrix::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(rows_);
}

bool CycMatrix::is_unitary() const {
    if (!is_square()) return false;
    return (dagger() * *this).is_identity();
}

std::optional<CycScalar> CycMatrix::scalar_of_identity() const {
    if (!is_square()) return std::nullopt;
    return nicebase::is_proportional(*this, identity(rows_));
}

CycMatrix CycMatrix::pow(long e) const {
    if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
    if (e < 0) return inverse().pow(-e);
    CycMatrix r = identity(rows_), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

CycScalar CycMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("det of non-square matrix");
    CycMatrix a = *this;
    CycScalar d = CycScalar::one();
    for (long col = 0; col < cols_; ++col) {
        long pr = -1;
        for (long r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) return CycScalar::zero();
        if (pr != col) {
            for (long c = 0; c < cols_; ++c) std::swap(a.at(pr, c), a.at(col, c));
            d = -d;
        }
        const CycScalar pivot = a.at(col, col);
        d = d * pivot;
        CycScalar inv = pivot.inverse();
        for (long r = col + 1; r < rows_; ++r) {
            CycScalar f = a.at(r, col) * inv;
            if (f.is_zero()) continue;
            for (long c = col; c < cols_; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return d;
}

CycMatrix CycMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
    CycMatrix a = *this, inv = identity(rows_);
    for (long col = 0; col < cols_; ++col) {
        long pr = -1;
        for (long r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) throw std::domain_error("matrix not invertible");
        if (pr != col)
            for (long c = 0; c < cols_; ++c) {
                std::swap(a.at(pr, c), a.at(col, c));
                std::swap(inv.at(pr, c), inv.at(col, c));
            }
        CycScalar piv_inv = a.at(col, col).inverse();
        for (long c = 0; c < cols_; ++c) {
            a.at(col, c) = a.at(col, c) * piv_inv;
            inv.at(col, c) = inv.at(col, c) * piv_inv;
        }
        for (long r = 0; r < rows_; ++r) {
            if (r == col) continue;
            CycScalar f = a.at(r, col);
            if (f.is_zero()) continue;
            for (long c = 0; c < cols_; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

long CycMatrix::unified_order() const {
    long m = 1;
    for (const auto& e : entries_) m = common_order(m, e.minimized().order());
    return m;
}

std::string CycMatrix::key() const {
    // value-canonical: entries re-expressed in their minimal subfield, so the
    // key does not depend on the orders values happen to be stored at
    std::ostringstream os;
    os << rows_ << 'x' << cols_;
    for (const auto& e : entries_) os << ';' << e.minimized().key();
    return os.str();
}

std::vector<std::vector<std::complex<double>>> CycMatrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> out(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i) {
        out[static_cast<size_t>(i)].resize(static_cast<size_t>(cols_));
        for (long j = 0; j < cols_; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j).to_complex();
    }
    return out;
}

std::optional<CycScalar> is_proportional(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("is_proportional shape mismatch");
    if (b.is_zero()) throw std::invalid_argument("is_proportional against zero matrix");
    if (a.is_zero()) return CycScalar::zero();
    // lambda from the first nonzero entry of b, then verify everywhere
    CycScalar lambda;
    bool found = false;
    for (long i = 0; i < b.rows() && !found; ++i)
        for (long j = 0; j < b.cols() && !found; ++j)
            if (!b.at(i, j).is_zero()) {
                lambda = a.at(i, j) * b.at(i, j).inverse();
                found = true;
            }
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != lambda * b.at(i, j)) return std::nullopt;
    return lambda;
}

}  // namespace nicebase
