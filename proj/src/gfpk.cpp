// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/gfpk.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nicebase/error_basis.hpp"
#include "nicebase/linalg.hpp"

namespace nicebase {

namespace {

std::vector<int> expand_zp(const FieldCtx& f, const Codeword& w) {
    std::vector<int> out;
    out.reserve(w.size() * static_cast<size_t>(f.k()));
    for (const auto& sym : w)
        for (int e = 0; e < f.k(); ++e) out.push_back(sym.c[static_cast<size_t>(e)]);
    return out;
}

Codeword compress_zp(const FieldCtx& f, const std::vector<int>& v) {
    Codeword w(v.size() / static_cast<size_t>(f.k()), f.zero());
    for (size_t t = 0; t < w.size(); ++t)
        for (int e = 0; e < f.k(); ++e) w[t].c[static_cast<size_t>(e)] = v[t * static_cast<size_t>(f.k()) + static_cast<size_t>(e)];
    return w;
}

long zp_rank(std::vector<std::vector<int>> rows, int p) {
    long rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < static_cast<long>(rows.size()); ++col) {
        long pr = -1;
        for (long r = rank; r < static_cast<long>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][col] % p != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[static_cast<size_t>(pr)], rows[static_cast<size_t>(rank)]);
        int lead = rows[static_cast<size_t>(rank)][col] % p;
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (lead * t % p == 1) { inv = t; break; }
        for (auto& x : rows[static_cast<size_t>(rank)]) x = x * inv % p;
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == rank) continue;
            int f0 = rows[static_cast<size_t>(r)][col] % p;
            if (f0 == 0) continue;
            for (size_t c = 0; c < cols; ++c)
                rows[static_cast<size_t>(r)][c] = ((rows[static_cast<size_t>(r)][c] - f0 * rows[static_cast<size_t>(rank)][c]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// basis of { x : M x = 0 } over Z_p, constraints as rows
std::vector<std::vector<int>> zp_nullspace(std::vector<std::vector<int>> rows, size_t cols, int p) {
    long rank = 0;
    std::vector<long> pivot_col;
    for (size_t col = 0; col < cols && rank < static_cast<long>(rows.size()); ++col) {
        long pr = -1;
        for (long r = rank; r < static_cast<long>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][col] % p != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[static_cast<size_t>(pr)], rows[static_cast<size_t>(rank)]);
        int lead = rows[static_cast<size_t>(rank)][col] % p;
        int inv = 1;
        for (int t = 1; t < p; ++t)
            if (lead * t % p == 1) { inv = t; break; }
        for (auto& x : rows[static_cast<size_t>(rank)]) x = x * inv % p;
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == rank) continue;
            int f0 = rows[static_cast<size_t>(r)][col] % p;
            if (f0 == 0) continue;
            for (size_t c = 0; c < cols; ++c)
                rows[static_cast<size_t>(r)][c] = ((rows[static_cast<size_t>(r)][c] - f0 * rows[static_cast<size_t>(rank)][c]) % p + p) % p;
        }
        pivot_col.push_back(static_cast<long>(col));
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<int>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(cols, 0);
        v[fc] = 1;
        for (size_t pi = 0; pi < pivot_col.size(); ++pi)
            v[static_cast<size_t>(pivot_col[pi])] = (p - rows[pi][fc] % p) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool zp_in_span(const std::vector<std::vector<int>>& basis, const std::vector<int>& target, int p) {
    if (basis.empty()) {
        for (int x : target)
            if (x % p != 0) return false;
        return true;
    }
    std::vector<std::vector<int>> rows = basis;
    long r0 = zp_rank(rows, p);
    rows.push_back(target);
    return zp_rank(rows, p) == r0;
}

// Gaussian elimination over GF(p^k): returns rank; `rows` reduced in place.
long gf_rank(const FieldCtx& f, std::vector<Codeword>& rows) {
    long rank = 0;
    long cols = rows.empty() ? 0 : static_cast<long>(rows[0].size());
    for (long col = 0; col < cols && rank < static_cast<long>(rows.size()); ++col) {
        long pr = -1;
        for (long r = rank; r < static_cast<long>(rows.size()); ++r)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[static_cast<size_t>(pr)], rows[static_cast<size_t>(rank)]);
        FieldElem inv = f.inv(rows[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (auto& x : rows[static_cast<size_t>(rank)]) x = f.mul(x, inv);
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == rank) continue;
            FieldElem f0 = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f0.is_zero()) continue;
            for (long c = 0; c < cols; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = f.sub(
                    rows[static_cast<size_t>(r)][static_cast<size_t>(c)],
                    f.mul(f0, rows[static_cast<size_t>(rank)][static_cast<size_t>(c)]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

LinearCode make_linear_code(const FieldCtx& field, long n, std::vector<Codeword> rows) {
    for (const auto& r : rows)
        if (static_cast<long>(r.size()) != n) throw std::invalid_argument("codeword length mismatch");
    std::vector<Codeword> copy = rows;
    if (gf_rank(field, copy) != static_cast<long>(rows.size()))
        throw std::invalid_argument("generator rows are not GF-independent");
    return LinearCode{n, std::move(rows)};
}

ZpCode make_zp_code(const FieldCtx& field, long n, std::vector<Codeword> vectors) {
    for (const auto& r : vectors)
        if (static_cast<long>(r.size()) != n) throw std::invalid_argument("codeword length mismatch");
    std::vector<std::vector<int>> rows;
    for (const auto& v : vectors) rows.push_back(expand_zp(field, v));
    if (zp_rank(rows, field.p()) != static_cast<long>(vectors.size()))
        throw std::invalid_argument("basis vectors are not Z_p-independent");
    return ZpCode{n, std::move(vectors)};
}

ZpCode to_zp_code(const FieldCtx& field, const LinearCode& code) {
    std::vector<Codeword> basis;
    for (const auto& row : code.gen) {
        FieldElem power = field.one();
        for (int e = 0; e < field.k(); ++e) {
            Codeword scaled(row.size(), field.zero());
            for (size_t t = 0; t < row.size(); ++t) scaled[t] = field.mul(power, row[t]);
            basis.push_back(std::move(scaled));
            if (e + 1 < field.k()) power = field.mul(power, field.theta());
        }
    }
    return make_zp_code(field, code.n, std::move(basis));
}

bool zp_contains(const FieldCtx& field, const ZpCode& code, const Codeword& w) {
    std::vector<std::vector<int>> rows;
    for (const auto& v : code.basis) rows.push_back(expand_zp(field, v));
    return zp_in_span(rows, expand_zp(field, w), field.p());
}

bool linear_contains(const FieldCtx& field, const LinearCode& code, const Codeword& w) {
    std::vector<Codeword> rows = code.gen;
    long r0 = gf_rank(field, rows);
    rows = code.gen;
    rows.push_back(w);
    return gf_rank(field, rows) == r0;
}

std::vector<Codeword> enumerate_codewords(const FieldCtx& field, const ZpCode& code) {
    long count = 1;
    for (long i = 0; i < code.zp_dim(); ++i) {
        count *= field.p();
        if (count > (1 << 20)) throw std::domain_error("code too large to enumerate");
    }
    std::vector<Codeword> words;
    words.reserve(static_cast<size_t>(count));
    for (long m = 0; m < count; ++m) {
        Codeword w(static_cast<size_t>(code.n), field.zero());
        long mm = m;
        for (long i = 0; i < code.zp_dim(); ++i) {
            int coef = static_cast<int>(mm % field.p());
            mm /= field.p();
            if (coef != 0)
                for (long t = 0; t < code.n; ++t)
                    w[static_cast<size_t>(t)] = field.add(
                        w[static_cast<size_t>(t)],
                        field.scalar_mul(coef, code.basis[static_cast<size_t>(i)][static_cast<size_t>(t)]));
        }
        words.push_back(std::move(w));
    }
    return words;
}

ZpCode dual_b_zp(const FieldCtx& field, const ZpCode& code, const LinearForm& b) {
    const int p = field.p();
    const size_t cols = static_cast<size_t>(code.n * field.k());
    std::vector<std::vector<int>> constraints;
    for (const auto& y : code.basis) {
        std::vector<int> row(cols, 0);
        for (long t = 0; t < code.n; ++t) {
            FieldElem power = field.one();
            for (int e = 0; e < field.k(); ++e) {
                row[static_cast<size_t>(t * field.k() + e)] =
                    b.pairing(field, power, y[static_cast<size_t>(t)]);
                if (e + 1 < field.k()) power = field.mul(power, field.theta());
            }
        }
        constraints.push_back(std::move(row));
    }
    std::vector<std::vector<int>> null = constraints.empty()
        ? [&] {
              std::vector<std::vector<int>> full;
              for (size_t i = 0; i < cols; ++i) {
                  std::vector<int> v(cols, 0);
                  v[i] = 1;
                  full.push_back(std::move(v));
              }
              return full;
          }()
        : zp_nullspace(constraints, cols, p);
    std::vector<Codeword> basis;
    for (const auto& v : null) basis.push_back(compress_zp(field, v));
    ZpCode dual{code.n, std::move(basis)};
    // the pairing is non-degenerate, so dim + dual dim = k n
    if (dual.zp_dim() + code.zp_dim() != static_cast<long>(cols))
        throw std::logic_error("b-dual dimension violates the non-degeneracy count");
    return dual;
}

LinearCode dual_b(const FieldCtx& field, const LinearCode& code, const LinearForm& b) {
    ZpCode zd = dual_b_zp(field, to_zp_code(field, code), b);
    // verified GF-linear, not assumed
    for (const auto& v : zd.basis) {
        Codeword scaled(v.size(), field.zero());
        if (field.k() > 1) {
            for (size_t t = 0; t < v.size(); ++t) scaled[t] = field.mul(field.theta(), v[t]);
            if (!zp_contains(field, zd, scaled))
                throw std::logic_error("b-dual of a GF-linear code is not GF-linear");
        }
    }
    // extract a GF-generator from the Z_p basis
    std::vector<Codeword> gen;
    for (const auto& v : zd.basis) {
        std::vector<Codeword> trial = gen;
        trial.push_back(v);
        std::vector<Codeword> reduced = trial;
        if (gf_rank(field, reduced) == static_cast<long>(trial.size())) gen = std::move(trial);
    }
    if (static_cast<long>(gen.size()) * field.k() != zd.zp_dim())
        throw std::logic_error("b-dual GF-dimension mismatch");
    LinearCode out{code.n, std::move(gen)};
    // exact span equality over Z_p
    ZpCode out_zp = to_zp_code(field, out);
    for (const auto& v : out_zp.basis)
        if (!zp_contains(field, zd, v)) throw std::logic_error("b-dual generator extraction failed");
    return out;
}

LinearCode dual_ordinary(const FieldCtx& field, const LinearCode& code) {
    // nullspace of the generator matrix over GF(p^k)
    std::vector<Codeword> rows = code.gen;
    long rank = gf_rank(field, rows);
    // locate pivots in the reduced rows
    std::vector<long> pivot_col;
    for (long r = 0; r < rank; ++r)
        for (long c = 0; c < code.n; ++c)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(c)].is_zero()) {
                pivot_col.push_back(c);
                break;
            }
    std::vector<bool> is_pivot(static_cast<size_t>(code.n), false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<Codeword> gen;
    for (long fc = 0; fc < code.n; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        Codeword v(static_cast<size_t>(code.n), field.zero());
        v[static_cast<size_t>(fc)] = field.one();
        for (long r = 0; r < rank; ++r)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
                field.neg(rows[static_cast<size_t>(r)][static_cast<size_t>(fc)]);
        gen.push_back(std::move(v));
    }
    return LinearCode{code.n, std::move(gen)};
}

bool check_dual_equality(const FieldCtx& field, const LinearCode& code, const LinearForm& b) {
    LinearCode a = dual_b(field, code, b);
    LinearCode o = dual_ordinary(field, code);
    bool equal = a.dim() == o.dim();
    if (equal)
        for (const auto& row : a.gen)
            if (!linear_contains(field, o, row)) equal = false;
    if (equal)
        for (const auto& row : o.gen)
            if (!linear_contains(field, a, row)) equal = false;
    if (!equal)
        throw std::logic_error("b-dual differs from the ordinary dual (implementation bug)");
    return true;
}

long min_weight(const FieldCtx& field, const ZpCode& code) {
    long best = -1;
    for (const auto& w : enumerate_codewords(field, code)) {
        long weight = 0;
        for (const auto& sym : w)
            if (!sym.is_zero()) ++weight;
        if (weight == 0) continue;
        if (best < 0 || weight < best) best = weight;
    }
    if (best < 0) throw std::invalid_argument("code has no nonzero codewords");
    return best;
}

long min_weight(const FieldCtx& field, const LinearCode& code) {
    return min_weight(field, to_zp_code(field, code));
}

long word_state_index(const FieldCtx& field, const Codeword& w) {
    long idx = 0;
    for (const auto& sym : w) idx = idx * field.size() + field.index_of(sym);
    return idx;
}

Codeword word_of_state_index(const FieldCtx& field, long n, long index) {
    Codeword w(static_cast<size_t>(n), field.zero());
    for (long t = n - 1; t >= 0; --t) {
        w[static_cast<size_t>(t)] = field.from_index(index % field.size());
        index /= field.size();
    }
    return w;
}

CycMatrix code_displacement(const FieldCtx& field, const LinearForm& b, const Codeword& u,
                            const Codeword& v) {
    CycMatrix op = CycMatrix::identity(1);
    for (size_t t = 0; t < u.size(); ++t)
        op = op.kron(gfpk_shift(field, u[t]) * gfpk_clock(field, b, v[t]));
    return op;
}

namespace {

// w^j C_u D_v |state>, computed entrywise
CycMatrix apply_displacement(const FieldCtx& field, const LinearForm& b, const Codeword& u,
                             const Codeword& v, long j, const CycMatrix& state) {
    long n = static_cast<long>(u.size());
    CycMatrix out(state.rows(), 1);
    for (long idx = 0; idx < state.rows(); ++idx) {
        if (state.at(idx, 0).is_zero()) continue;
        Codeword x = word_of_state_index(field, n, idx);
        long phase = j;
        Codeword shifted(x.size(), field.zero());
        for (size_t t = 0; t < x.size(); ++t) {
            phase += b.pairing(field, v[t], x[t]);
            shifted[t] = field.add(x[t], u[t]);
        }
        long target = word_state_index(field, shifted);
        out.at(target, 0) += CycScalar::zeta(field.p(), phase) * state.at(idx, 0);
    }
    return out;
}

bool detectable_pair(const FieldCtx& field, const LinearForm& b, const CycMatrix& logical,
                     const Codeword& u, const Codeword& v) {
    long m = logical.cols();
    std::vector<CycMatrix> moved;
    for (long j = 0; j < m; ++j)
        moved.push_back(apply_displacement(field, b, u, v, 0, column(logical, j)));
    // L^dagger E L must be a scalar matrix
    CycScalar diag0;
    for (long a = 0; a < m; ++a)
        for (long bcol = 0; bcol < m; ++bcol) {
            CycScalar s = inner(column(logical, a), moved[static_cast<size_t>(bcol)]);
            if (a == bcol) {
                if (a == 0) diag0 = s;
                else if (s != diag0) return false;
            } else if (!s.is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace

QuantumCodePair quantum_code_from_pair(const FieldCtx& field, const LinearCode& c,
                                       const ZpCode& c0, const LinearForm& b,
                                       std::optional<Codeword> leader) {
    if (c.n != c0.n) throw std::invalid_argument("code lengths differ");
    const long n = c.n;
    long ambient = 1;
    for (long t = 0; t < n; ++t) {
        ambient *= field.size();
        if (ambient > 1024) throw std::domain_error("ambient dimension exceeds desk scale");
    }
    for (const auto& v : c0.basis)
        if (!linear_contains(field, c, v))
            throw std::invalid_argument("C0 is not contained in C");
    long codim = field.k() * c.dim() - c0.zp_dim();
    if (codim < 1) throw std::invalid_argument("C0 must have positive Z_p-codimension in C");

    // coset leaders of C / C0, deterministic lowest state-index order
    std::vector<Codeword> leaders;
    std::vector<Codeword> cwords = enumerate_codewords(field, to_zp_code(field, c));
    std::sort(cwords.begin(), cwords.end(), [&](const Codeword& a, const Codeword& bb) {
        return word_state_index(field, a) < word_state_index(field, bb);
    });
    if (codim == 1) {
        Codeword lead;
        if (leader) {
            lead = *leader;
            if (!linear_contains(field, c, lead)) throw std::invalid_argument("leader not in C");
            if (zp_contains(field, c0, lead)) throw std::invalid_argument("leader lies in C0");
        } else {
            bool found = false;
            for (const auto& w : cwords)
                if (!zp_contains(field, c0, w)) { lead = w; found = true; break; }
            if (!found) throw std::logic_error("no coset leader found");
        }
        for (int i = 0; i < field.p(); ++i) {
            Codeword il(lead.size(), field.zero());
            for (size_t t = 0; t < lead.size(); ++t) il[t] = field.scalar_mul(i, lead[t]);
            leaders.push_back(std::move(il));
        }
    } else {
        for (const auto& w : cwords) {
            bool fresh = true;
            for (const auto& l : leaders) {
                Codeword diff(w.size(), field.zero());
                for (size_t t = 0; t < w.size(); ++t) diff[t] = field.sub(w[t], l[t]);
                if (zp_contains(field, c0, diff)) { fresh = false; break; }
            }
            if (fresh) leaders.push_back(w);
        }
    }

    // logical states: normalized coset sums
    std::vector<Codeword> c0words = enumerate_codewords(field, c0);
    Rat inv_size(1, static_cast<long>(c0words.size()));
    CycScalar amp = CycScalar::sqrt_of_rational(inv_size);
    QuantumCodePair out;
    for (const auto& l : leaders) {
        CycMatrix v(ambient, 1);
        for (const auto& x : c0words) {
            Codeword sum(x.size(), field.zero());
            for (size_t t = 0; t < x.size(); ++t) sum[t] = field.add(x[t], l[t]);
            v.at(word_state_index(field, sum), 0) = amp;
        }
        out.logicals.push_back(std::move(v));
    }
    out.coset_leaders = leaders;

    CycMatrix logical(ambient, static_cast<long>(out.logicals.size()));
    for (size_t j = 0; j < out.logicals.size(); ++j)
        for (long i = 0; i < ambient; ++i) logical.at(i, static_cast<long>(j)) = out.logicals[j].at(i, 0);
    if (!(logical.dagger() * logical).is_identity())
        throw std::logic_error("logical coset states are not orthonormal");
    CycMatrix projector = logical * logical.dagger();
    out.code.ambient = ambient;
    out.code.projector = projector;
    out.code.logical = logical;
    out.code.kind = CodeSpace::Kind::character;
    out.code.chi_index = -1;

    // fixing operators: w^j C_u D_v with every |i_L> fixed
    LinearCode cperp = dual_b(field, c, b);
    ZpCode cperp_zp = to_zp_code(field, cperp);
    auto fixes_all = [&](const Codeword& u, const Codeword& v, long j) {
        for (const auto& psi : out.logicals)
            if (apply_displacement(field, b, u, v, j, psi) != psi) return false;
        return true;
    };
    long total_pairs = ambient * ambient;
    bool exhaustive = total_pairs * field.p() <= 200000;
    if (exhaustive) {
        for (long ui = 0; ui < ambient; ++ui)
            for (long vi = 0; vi < ambient; ++vi) {
                Codeword u = word_of_state_index(field, n, ui);
                Codeword v = word_of_state_index(field, n, vi);
                std::vector<long> js;
                for (long j = 0; j < field.p(); ++j)
                    if (fixes_all(u, v, j)) js.push_back(j);
                bool target = zp_contains(field, c0, u) && zp_contains(field, cperp_zp, v);
                if (target) {
                    if (js.size() != 1)
                        throw std::logic_error("fixing phase is not unique for a target pair");
                    out.fixing.push_back({u, v, js[0]});
                } else if (!js.empty()) {
                    throw std::logic_error("operator outside the predicted set fixes the code");
                }
            }
    } else {
        for (const auto& u : enumerate_codewords(field, c0))
            for (const auto& v : enumerate_codewords(field, cperp_zp)) {
                std::vector<long> js;
                for (long j = 0; j < field.p(); ++j)
                    if (fixes_all(u, v, j)) js.push_back(j);
                if (js.size() != 1)
                    throw std::logic_error("fixing phase is not unique for a target pair");
                out.fixing.push_back({u, v, js[0]});
            }
    }

    // stabilizing subgroup: fixing operators together with the phase, so it
    // is normal in the error group as a matrix group
    std::vector<CycMatrix> gens;
    for (const auto& u : c0.basis) gens.push_back(code_displacement(field, b, u, Codeword(static_cast<size_t>(n), field.zero())));
    for (const auto& v : cperp_zp.basis)
        gens.push_back(code_displacement(field, b, Codeword(static_cast<size_t>(n), field.zero()), v));
    gens.push_back(CycMatrix::identity(ambient).scaled(CycScalar::zeta(field.p())));
    out.stabilizer = close_generators(gens);

    // identify the code as a character code of the stabilizer
    CharacterTable tbl = character_table(out.stabilizer.structure);
    for (long chi = 0; chi < static_cast<long>(tbl.characters.size()); ++chi) {
        if (tbl.dims[static_cast<size_t>(chi)] != 1) continue;
        CycMatrix acc = CycMatrix::zeros(ambient, ambient);
        for (int g = 0; g < out.stabilizer.order(); ++g)
            acc = acc + out.stabilizer.matrix(g).scaled(tbl.value(chi, g).conj());
        acc = acc.scaled(CycScalar::from_rational(Rat(1, out.stabilizer.order())));
        if (acc == projector) {
            out.stabilizer_chi = chi;
            break;
        }
    }
    if (out.stabilizer_chi < 0)
        throw std::logic_error("code space is not a character code of its stabilizer");
    return out;
}

GfpkCodeReport gfpk_code_report(const FieldCtx& field, const LinearCode& c, const ZpCode& c0,
                                const LinearForm& b) {
    GfpkCodeReport rep;
    rep.min_weight_c = min_weight(field, c);
    ZpCode c0perp = dual_b_zp(field, c0, b);
    rep.min_weight_dual_c0 = min_weight(field, c0perp);
    long weakest = std::min(rep.min_weight_c, rep.min_weight_dual_c0);
    rep.e = (weakest - 1) / 2;

    long ambient = 1;
    for (long t = 0; t < c.n; ++t) ambient *= field.size();
    if (ambient > 64) return rep;
    rep.direct_checked = true;

    QuantumCodePair pair = quantum_code_from_pair(field, c, c0, b);
    const CycMatrix& logical = pair.code.logical;

    // detectability of every displacement pair, by subsystem support
    long nsq = ambient * ambient;
    std::vector<bool> detectable(static_cast<size_t>(nsq), false);
    std::vector<long> support(static_cast<size_t>(nsq), 0);
    for (long ui = 0; ui < ambient; ++ui)
        for (long vi = 0; vi < ambient; ++vi) {
            Codeword u = word_of_state_index(field, c.n, ui);
            Codeword v = word_of_state_index(field, c.n, vi);
            long s = 0;
            for (long t = 0; t < c.n; ++t)
                if (!u[static_cast<size_t>(t)].is_zero() || !v[static_cast<size_t>(t)].is_zero()) ++s;
            support[static_cast<size_t>(ui * ambient + vi)] = s;
            detectable[static_cast<size_t>(ui * ambient + vi)] = detectable_pair(field, b, logical, u, v);
        }

    rep.detect_verified = true;
    for (long idx = 0; idx < nsq; ++idx)
        if (support[static_cast<size_t>(idx)] <= 2 * rep.e && !detectable[static_cast<size_t>(idx)])
            rep.detect_verified = false;

    // correctability of S_e: differences of support-<=e displacements
    rep.correct_verified = true;
    std::vector<long> small;
    for (long idx = 0; idx < nsq; ++idx)
        if (support[static_cast<size_t>(idx)] <= rep.e) small.push_back(idx);
    for (long a : small) {
        Codeword ua = word_of_state_index(field, c.n, a / ambient);
        Codeword va = word_of_state_index(field, c.n, a % ambient);
        for (long bidx : small) {
            Codeword ub = word_of_state_index(field, c.n, bidx / ambient);
            Codeword vb = word_of_state_index(field, c.n, bidx % ambient);
            Codeword du(static_cast<size_t>(c.n), field.zero()), dv(static_cast<size_t>(c.n), field.zero());
            for (long t = 0; t < c.n; ++t) {
                du[static_cast<size_t>(t)] = field.sub(ub[static_cast<size_t>(t)], ua[static_cast<size_t>(t)]);
                dv[static_cast<size_t>(t)] = field.sub(vb[static_cast<size_t>(t)], va[static_cast<size_t>(t)]);
            }
            long di = word_state_index(field, du) * ambient + word_state_index(field, dv);
            if (!detectable[static_cast<size_t>(di)]) rep.correct_verified = false;
        }
    }

    // exhibit a weight-1 undetectable displacement when one exists
    for (long idx = 0; idx < nsq; ++idx)
        if (support[static_cast<size_t>(idx)] == 1 && !detectable[static_cast<size_t>(idx)]) {
            rep.weight1_undetectable = {word_of_state_index(field, c.n, idx / ambient),
                                        word_of_state_index(field, c.n, idx % ambient)};
            break;
        }
    return rep;
}

}  // namespace nicebase
