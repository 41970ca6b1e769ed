// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nicebase {

CycScalar CharacterTable::inner_product(long i, long j, long group_order) const {
    CycScalar acc = CycScalar::zero();
    for (size_t l = 0; l < classes.size(); ++l) {
        CycScalar term = characters[static_cast<size_t>(i)][l] * characters[static_cast<size_t>(j)][l].conj();
        acc += term * CycScalar::from_int(static_cast<long>(classes[l].size()));
    }
    return acc * CycScalar::from_rational(Rat(1, group_order));
}

namespace {

// ---- F_l arithmetic ----

struct Fl {
    long l;
    long add(long a, long b) const { return (a + b) % l; }
    long sub(long a, long b) const { return ((a - b) % l + l) % l; }
    long mul(long a, long b) const { return static_cast<long>((__int128)a * b % l); }
    long pow(long a, long e) const {
        long r = 1 % l;
        a %= l;
        if (a < 0) a += l;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long inv(long a) const { return pow(a, l - 2); }
};

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

long find_prime(long exponent, long min_value) {
    for (long t = 1;; ++t) {
        long cand = exponent * t + 1;
        if (cand <= min_value) continue;
        if (is_prime(cand)) return cand;
    }
}

long primitive_root(const Fl& f) {
    std::vector<long> qs = prime_factors(f.l - 1);
    for (long g = 2; g < f.l; ++g) {
        bool ok = true;
        for (long q : qs)
            if (f.pow(g, (f.l - 1) / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// ---- abelian path: characters by extension along a generating chain ----

std::vector<std::vector<long>> abelian_character_exponents(const AbstractGroup& g, long e) {
    // Each character is the exponent vector c with chi(x) = zeta_e^(c[x]).
    std::vector<std::vector<long>> chars;
    chars.push_back(std::vector<long>(static_cast<size_t>(g.order), -1));
    chars[0][static_cast<size_t>(g.identity)] = 0;
    std::vector<int> sub{g.identity};

    while (static_cast<long>(sub.size()) < g.order) {
        std::set<int> in_sub(sub.begin(), sub.end());
        int h = -1;
        for (int a = 0; a < g.order; ++a)
            if (!in_sub.count(a)) { h = a; break; }
        // minimal s > 0 with h^s in the current subgroup
        long s = 1;
        int hp = h;
        while (!in_sub.count(hp)) {
            hp = g.mul(hp, h);
            ++s;
        }
        // coset decomposition: every element of <sub, h> is x * h^i uniquely
        std::vector<int> next_sub;
        std::vector<std::vector<long>> next_chars;
        for (const auto& chi : chars) {
            long a = chi[static_cast<size_t>(hp)];  // chi(h^s) = zeta_e^a
            for (long c = 0; c < e; ++c) {
                if ((s * c) % e != a) continue;
                std::vector<long> ext(static_cast<size_t>(g.order), -1);
                int hpow = g.identity;
                for (long i = 0; i < s; ++i) {
                    for (int x : sub) {
                        int y = g.mul(x, hpow);
                        ext[static_cast<size_t>(y)] = (chi[static_cast<size_t>(x)] + c * i) % e;
                    }
                    hpow = g.mul(hpow, h);
                }
                next_chars.push_back(std::move(ext));
            }
        }
        int hpow = g.identity;
        for (long i = 0; i < s; ++i) {
            for (int x : sub) next_sub.push_back(g.mul(x, hpow));
            hpow = g.mul(hpow, h);
        }
        sub = std::move(next_sub);
        chars = std::move(next_chars);
    }
    if (static_cast<long>(chars.size()) != g.order)
        throw std::logic_error("abelian character count mismatch");
    return chars;
}

// ---- Dixon path ----

struct DixonResult {
    std::vector<std::vector<CycScalar>> rows;
    std::vector<long> dims;
};

DixonResult dixon_characters(const AbstractGroup& g,
                             const std::vector<std::vector<int>>& classes,
                             const std::vector<int>& class_of) {
    const long n = g.order;
    const long k = static_cast<long>(classes.size());
    const long e = g.exponent();
    Fl f{find_prime(e, 2 * n + 1)};

    std::vector<int> rep(static_cast<size_t>(k));
    std::vector<long> csize(static_cast<size_t>(k));
    for (long l = 0; l < k; ++l) {
        rep[static_cast<size_t>(l)] = classes[static_cast<size_t>(l)].front();
        csize[static_cast<size_t>(l)] = static_cast<long>(classes[static_cast<size_t>(l)].size());
    }
    std::vector<int> inv_class(static_cast<size_t>(k));
    for (long l = 0; l < k; ++l)
        inv_class[static_cast<size_t>(l)] = class_of[static_cast<size_t>(g.inverse_of(rep[static_cast<size_t>(l)]))];

    // class of rep_l^s for s in [0, e)
    std::vector<std::vector<int>> pclass(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(e)));
    for (long l = 0; l < k; ++l) {
        int p = g.identity;
        for (long s = 0; s < e; ++s) {
            pclass[static_cast<size_t>(l)][static_cast<size_t>(s)] = class_of[static_cast<size_t>(p)];
            p = g.mul(p, rep[static_cast<size_t>(l)]);
        }
    }

    // structure constants a[i][j][l]: #{(x,y) in K_i x K_j : x y = z_l}
    std::vector<long> sc(static_cast<size_t>(k * k * k), 0);
    auto a_at = [&sc, k](long i, long j, long l) -> long& {
        return sc[static_cast<size_t>((i * k + j) * k + l)];
    };
    for (long l = 0; l < k; ++l) {
        int z = rep[static_cast<size_t>(l)];
        for (long i = 0; i < k; ++i)
            for (int x : classes[static_cast<size_t>(i)]) {
                int y = g.mul(g.inverse_of(x), z);
                a_at(i, class_of[static_cast<size_t>(y)], l) += 1;
            }
    }

    // simultaneous eigenvectors of the class matrices via a random combination
    uint64_t seed = 0x6e696365ull;  // fixed: output must be deterministic
    std::vector<std::vector<long>> omegas;
    for (int attempt = 0; attempt < 30 && omegas.empty(); ++attempt) {
        std::vector<long> coef(static_cast<size_t>(k));
        for (long i = 0; i < k; ++i) coef[static_cast<size_t>(i)] = static_cast<long>(splitmix64(seed) % static_cast<uint64_t>(f.l));
        // (M)_{j,l} = sum_i coef_i a[i][j][l]
        std::vector<std::vector<long>> m(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k), 0));
        for (long j = 0; j < k; ++j)
            for (long l = 0; l < k; ++l) {
                long acc = 0;
                for (long i = 0; i < k; ++i)
                    acc = f.add(acc, f.mul(coef[static_cast<size_t>(i)] , a_at(i, j, l) % f.l));
                m[static_cast<size_t>(j)][static_cast<size_t>(l)] = acc;
            }
        // characteristic polynomial by Faddeev-LeVerrier (needs l > k)
        std::vector<long> c(static_cast<size_t>(k) + 1, 0);
        {
            std::vector<std::vector<long>> mk = m;
            std::vector<long> cs(static_cast<size_t>(k) + 1, 0);
            for (long step = 1; step <= k; ++step) {
                long tr = 0;
                for (long i = 0; i < k; ++i) tr = f.add(tr, mk[static_cast<size_t>(i)][static_cast<size_t>(i)]);
                cs[static_cast<size_t>(step)] = f.mul(tr, f.inv(step % f.l));
                if (step == k) break;
                // mk = M (mk - c_step I)
                std::vector<std::vector<long>> tmp = mk;
                for (long i = 0; i < k; ++i)
                    tmp[static_cast<size_t>(i)][static_cast<size_t>(i)] = f.sub(tmp[static_cast<size_t>(i)][static_cast<size_t>(i)], cs[static_cast<size_t>(step)]);
                std::vector<std::vector<long>> nx(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k), 0));
                for (long i = 0; i < k; ++i)
                    for (long t = 0; t < k; ++t) {
                        long v = m[static_cast<size_t>(i)][static_cast<size_t>(t)];
                        if (v == 0) continue;
                        for (long j = 0; j < k; ++j)
                            nx[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                                f.add(nx[static_cast<size_t>(i)][static_cast<size_t>(j)], f.mul(v, tmp[static_cast<size_t>(t)][static_cast<size_t>(j)]));
                    }
                mk = std::move(nx);
            }
            // p(x) = x^k - c1 x^(k-1) - ... - ck
            c[static_cast<size_t>(k)] = 1;
            for (long step = 1; step <= k; ++step)
                c[static_cast<size_t>(k - step)] = f.sub(0, cs[static_cast<size_t>(step)]);
        }
        // roots with multiplicity by scan + deflation
        std::vector<long> poly = c;
        std::vector<long> roots;
        bool simple = true;
        for (long lam = 0; lam < f.l && static_cast<long>(roots.size()) < k; ++lam) {
            // evaluate against current (possibly deflated) poly
            long deg = static_cast<long>(poly.size()) - 1;
            long v2 = 0;
            for (long i = deg; i >= 0; --i) v2 = f.add(f.mul(v2, lam), poly[static_cast<size_t>(i)]);
            if (v2 != 0) continue;
            // synthetic division; if lam divides twice, spectrum is degenerate
            std::vector<long> quot(static_cast<size_t>(deg), 0);
            long carry = poly[static_cast<size_t>(deg)];
            for (long i = deg - 1; i >= 0; --i) {
                quot[static_cast<size_t>(i)] = carry;
                carry = f.add(f.mul(carry, lam), poly[static_cast<size_t>(i)]);
            }
            long check = 0;
            for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i)
                check = f.add(f.mul(check, lam), quot[static_cast<size_t>(i)]);
            if (check == 0) { simple = false; break; }
            roots.push_back(lam);
            poly = std::move(quot);
        }
        if (!simple || static_cast<long>(roots.size()) != k) continue;

        // eigenvector per root, normalized at the identity class
        int id_class = class_of[static_cast<size_t>(g.identity)];
        std::vector<std::vector<long>> found;
        bool ok = true;
        for (long lam : roots) {
            std::vector<std::vector<long>> a(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k)));
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j)
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        (i == j) ? f.sub(m[static_cast<size_t>(i)][static_cast<size_t>(j)], lam) : m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            // Gaussian elimination; nullspace must be one-dimensional
            long row = 0;
            std::vector<long> pivot_of_col(static_cast<size_t>(k), -1);
            for (long col = 0; col < k && row < k; ++col) {
                long pr = -1;
                for (long r = row; r < k; ++r)
                    if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
                if (pr < 0) continue;
                std::swap(a[static_cast<size_t>(pr)], a[static_cast<size_t>(row)]);
                long piv_inv = f.inv(a[static_cast<size_t>(row)][static_cast<size_t>(col)]);
                for (long cc = 0; cc < k; ++cc) a[static_cast<size_t>(row)][static_cast<size_t>(cc)] = f.mul(a[static_cast<size_t>(row)][static_cast<size_t>(cc)], piv_inv);
                for (long r = 0; r < k; ++r) {
                    if (r == row) continue;
                    long fac = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
                    if (fac == 0) continue;
                    for (long cc = 0; cc < k; ++cc)
                        a[static_cast<size_t>(r)][static_cast<size_t>(cc)] = f.sub(a[static_cast<size_t>(r)][static_cast<size_t>(cc)], f.mul(fac, a[static_cast<size_t>(row)][static_cast<size_t>(cc)]));
                }
                pivot_of_col[static_cast<size_t>(col)] = row;
                ++row;
            }
            if (row != k - 1) { ok = false; break; }
            long free_col = -1;
            for (long col = 0; col < k; ++col)
                if (pivot_of_col[static_cast<size_t>(col)] < 0) { free_col = col; break; }
            std::vector<long> v(static_cast<size_t>(k), 0);
            v[static_cast<size_t>(free_col)] = 1;
            for (long col = 0; col < k; ++col) {
                long pr = pivot_of_col[static_cast<size_t>(col)];
                if (pr >= 0) v[static_cast<size_t>(col)] = f.sub(0, a[static_cast<size_t>(pr)][static_cast<size_t>(free_col)]);
            }
            if (v[static_cast<size_t>(id_class)] == 0) { ok = false; break; }
            long norm = f.inv(v[static_cast<size_t>(id_class)]);
            for (auto& x : v) x = f.mul(x, norm);
            found.push_back(std::move(v));
        }
        if (ok) omegas = std::move(found);
    }
    if (omegas.empty())
        throw std::logic_error("Dixon eigenvalue splitting failed to converge");

    // degrees and modular character values
    long z = f.pow(primitive_root(f), (f.l - 1) / e);
    long zinv = f.inv(z);
    long einv = f.inv(e % f.l);
    long sqrt_cap = static_cast<long>(std::sqrt(static_cast<double>(n))) + 1;

    DixonResult res;
    for (const auto& omega : omegas) {
        long s = 0;
        for (long l = 0; l < k; ++l)
            s = f.add(s, f.mul(f.mul(omega[static_cast<size_t>(l)], omega[static_cast<size_t>(inv_class[static_cast<size_t>(l)])]),
                               f.inv(csize[static_cast<size_t>(l)] % f.l)));
        long dd = f.mul(n % f.l, f.inv(s));
        long d = -1;
        for (long cand = 1; cand <= sqrt_cap; ++cand)
            if (f.mul(cand, cand) == dd) { d = cand; break; }
        if (d < 0) throw std::logic_error("Dixon: no admissible character degree");

        std::vector<long> chi_mod(static_cast<size_t>(k));
        for (long l = 0; l < k; ++l)
            chi_mod[static_cast<size_t>(l)] = f.mul(f.mul(d, omega[static_cast<size_t>(l)]), f.inv(csize[static_cast<size_t>(l)] % f.l));

        std::vector<CycScalar> row(static_cast<size_t>(k));
        for (long l = 0; l < k; ++l) {
            std::vector<Rat> coeffs(static_cast<size_t>(e), Rat(0));
            long total = 0;
            for (long j = 0; j < e; ++j) {
                long acc = 0;
                for (long sdx = 0; sdx < e; ++sdx) {
                    long val = chi_mod[static_cast<size_t>(pclass[static_cast<size_t>(l)][static_cast<size_t>(sdx)])];
                    acc = f.add(acc, f.mul(val, f.pow(zinv, (j * sdx) % (f.l - 1))));
                }
                long mlj = f.mul(einv, acc);
                if (mlj > d) throw std::logic_error("Dixon: root-of-unity multiplicity exceeds degree");
                total += mlj;
                coeffs[static_cast<size_t>(j)] = Rat(mlj);
            }
            if (total != d) throw std::logic_error("Dixon: multiplicities do not sum to degree");
            row[static_cast<size_t>(l)] = CycScalar::canonical(e, std::move(coeffs));
        }
        res.rows.push_back(std::move(row));
        res.dims.push_back(d);
    }
    return res;
}

}  // namespace

CharacterTable character_table(const AbstractGroup& g, long cap) {
    if (g.order > cap)
        throw std::domain_error("character_table: group order exceeds cap " + std::to_string(cap));

    CharacterTable t;
    t.classes = conjugacy_classes(g);
    std::sort(t.classes.begin(), t.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    t.class_of.assign(static_cast<size_t>(g.order), -1);
    for (size_t l = 0; l < t.classes.size(); ++l)
        for (int x : t.classes[l]) t.class_of[static_cast<size_t>(x)] = static_cast<int>(l);

    const long e = g.exponent();
    if (g.is_abelian()) {
        auto exps = abelian_character_exponents(g, e);
        for (const auto& chi : exps) {
            std::vector<CycScalar> row;
            row.reserve(t.classes.size());
            for (const auto& cls : t.classes) row.push_back(CycScalar::zeta(e, chi[static_cast<size_t>(cls.front())]));
            t.characters.push_back(std::move(row));
            t.dims.push_back(1);
        }
    } else {
        auto res = dixon_characters(g, t.classes, t.class_of);
        t.characters = std::move(res.rows);
        t.dims = std::move(res.dims);
    }

    // canonical row order: by degree, then by value keys
    std::vector<size_t> perm(t.characters.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto row_key = [&t](size_t i) {
        std::string k = std::to_string(t.dims[i]) + "#";
        for (const auto& v : t.characters[i]) k += v.minimized().key() + "|";
        return k;
    };
    std::vector<std::string> keys(t.characters.size());
    for (size_t i = 0; i < keys.size(); ++i) keys[i] = row_key(i);
    std::sort(perm.begin(), perm.end(), [&keys](size_t a, size_t b) { return keys[a] < keys[b]; });
    std::vector<std::vector<CycScalar>> rows;
    std::vector<long> dims;
    for (size_t i : perm) {
        rows.push_back(std::move(t.characters[i]));
        dims.push_back(t.dims[i]);
    }
    t.characters = std::move(rows);
    t.dims = std::move(dims);

    // exact validation: chi(1) = d > 0, sum d^2 = |G|, row orthonormality
    long sum_sq = 0;
    int id_class = t.class_of[static_cast<size_t>(g.identity)];
    for (size_t i = 0; i < t.characters.size(); ++i) {
        if (t.dims[i] < 1) throw std::logic_error("character with non-positive degree");
        if (t.characters[i][static_cast<size_t>(id_class)] != CycScalar::from_int(t.dims[i]))
            throw std::logic_error("character degree mismatch at identity");
        sum_sq += t.dims[i] * t.dims[i];
    }
    if (sum_sq != g.order) throw std::logic_error("sum of squared degrees != |G|");
    for (size_t i = 0; i < t.characters.size(); ++i)
        for (size_t j = i; j < t.characters.size(); ++j) {
            CycScalar ip = t.inner_product(static_cast<long>(i), static_cast<long>(j), g.order);
            if (i == j ? !ip.is_one() : !ip.is_zero())
                throw std::logic_error("character row orthogonality fails exactly");
        }
    return t;
}

}  // namespace nicebase
