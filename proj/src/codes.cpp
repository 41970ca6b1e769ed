// Copyright (c) 2026 The nicebase authors
// SPDX-License-Identifier: Apache-2.0

#include "nicebase/codes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nicebase/linalg.hpp"

namespace nicebase {

namespace {

uint64_t splitmix64(uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Eigen::MatrixXcd to_eigen(const CycMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).to_complex();
    return out;
}

// Continued-fraction rationalization of a double within `tol`.
std::optional<Rat> rationalize(double x, double tol = 1e-9, long max_den = 1000000) {
    double target = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(x);
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - target) < tol) return rat(p1, q1);
        double frac = x - fl;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

}  // namespace

NormalSubgroupCtx make_normal_subgroup(const ErrorGroup& eg, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_subgroup(eg.group.structure, elems))
        throw std::invalid_argument("subgroup indices are not closed");
    if (!is_normal(eg.group.structure, elems))
        throw std::invalid_argument("subgroup is not normal in the error group");
    NormalSubgroupCtx n;
    n.view = SubgroupView::from(eg.group.structure, elems);
    n.elems = n.view.elems;
    n.table = character_table(n.view.local);
    return n;
}

CycMatrix char_projection(const FiniteMatrixGroup& n, const CharacterTable& table, long chi) {
    if (chi < 0 || chi >= static_cast<long>(table.characters.size()))
        throw std::invalid_argument("character index out of range");
    if (!table.inner_product(chi, chi, n.order()).is_one())
        throw std::invalid_argument("character is not irreducible (norm != 1)");
    const long d = table.dims[static_cast<size_t>(chi)];
    CycMatrix acc = CycMatrix::zeros(n.dim(), n.dim());
    for (int g = 0; g < n.order(); ++g)
        acc = acc + n.matrix(g).scaled(table.value(chi, g).conj());
    CycMatrix proj = acc.scaled(CycScalar::from_rational(Rat(d, n.order())));
    if (!(proj * proj == proj) || !proj.is_hermitian())
        throw std::logic_error("character projection is not a Hermitian idempotent");
    return proj;
}

std::vector<CharacterInstance> induced_characters(const ErrorGroup& eg,
                                                  const NormalSubgroupCtx& n) {
    const long nn = eg.dim;
    std::vector<CharacterInstance> out;
    // multiplicity of chi = <trace of the ambient rep, chi>
    std::vector<CycScalar> amb_trace(static_cast<size_t>(n.order()));
    for (int l = 0; l < n.order(); ++l) amb_trace[static_cast<size_t>(l)] = n.matrix(eg, l).trace();

    FiniteMatrixGroup nmat;  // N as a standalone matrix group for char_projection
    nmat.structure = n.view.local;
    nmat.field_order = eg.group.field_order;
    for (int l = 0; l < n.order(); ++l) nmat.elements.push_back(n.matrix(eg, l));
    nmat.inverse_table.resize(static_cast<size_t>(n.order()));
    for (int l = 0; l < n.order(); ++l) nmat.inverse_table[static_cast<size_t>(l)] = n.view.local.inverse_of(l);

    for (long chi = 0; chi < static_cast<long>(n.table.characters.size()); ++chi) {
        CycScalar ip = CycScalar::zero();
        for (int l = 0; l < n.order(); ++l) ip += amb_trace[static_cast<size_t>(l)] * n.table.value(chi, l).conj();
        ip = ip * CycScalar::from_rational(Rat(1, n.order()));
        auto q = ip.as_rational();
        if (!q || !rat_is_integer(*q) || *q < 0)
            throw std::logic_error("character multiplicity is not a nonnegative integer");
        long mult = static_cast<long>(q->get_num().get_si());
        if (mult == 0) continue;
        CharacterInstance inst;
        inst.chi_index = chi;
        inst.degree = n.table.dims[static_cast<size_t>(chi)];
        inst.multiplicity = mult;
        inst.chi_bar = char_projection(nmat, n.table, chi);
        long rank = mat_rank(inst.chi_bar);
        if (rank != mult * inst.degree)
            throw std::logic_error("isotypic projector rank differs from multiplicity * degree");
        out.push_back(std::move(inst));
    }
    if (out.empty()) throw std::logic_error("no character appears in the ambient representation");

    // Lemmas: equal degrees, equal multiplicities, dimensions add up,
    // complete orthogonal projector system.
    for (const auto& inst : out) {
        if (inst.degree != out[0].degree)
            throw std::logic_error("induced characters have unequal degrees");
        if (inst.multiplicity != out[0].multiplicity)
            throw std::logic_error("induced characters have unequal multiplicities");
    }
    if (static_cast<long>(out.size()) * out[0].degree * out[0].multiplicity != nn)
        throw std::logic_error("isotypic dimensions do not sum to the ambient dimension");
    CycMatrix sum = CycMatrix::zeros(nn, nn);
    for (size_t i = 0; i < out.size(); ++i) {
        sum = sum + out[i].chi_bar;
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!(out[i].chi_bar * out[j].chi_bar).is_zero())
                throw std::logic_error("isotypic projectors are not orthogonal");
    }
    if (!sum.is_identity()) throw std::logic_error("isotypic projectors do not sum to identity");
    return out;
}

InertiaData inertia_subgroup(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi) {
    const AbstractGroup& big = eg.group.structure;
    // the character must appear in the ambient representation
    CycScalar mult = CycScalar::zero();
    for (int l = 0; l < n.order(); ++l)
        mult += n.matrix(eg, l).trace() * n.table.value(chi, l).conj();
    if (mult.is_zero())
        throw std::invalid_argument("character does not appear in the ambient representation");
    InertiaData data;
    for (int g = 0; g < big.order; ++g) {
        int ginv = eg.group.inverse_table[static_cast<size_t>(g)];
        bool fixes = true;
        for (int l = 0; l < n.order() && fixes; ++l) {
            int hp = n.view.to_parent(l);
            int conj = big.mul(big.mul(ginv, hp), g);
            if (n.table.value(chi, n.view.to_local(conj)) != n.table.value(chi, l)) fixes = false;
        }
        if (fixes) data.subgroup.push_back(g);
    }
    // N is contained in T(chi)
    for (int e : n.elems)
        if (!std::binary_search(data.subgroup.begin(), data.subgroup.end(), e))
            throw std::logic_error("inertia subgroup does not contain N");
    if (big.order % static_cast<long>(data.subgroup.size()) != 0)
        throw std::logic_error("inertia subgroup size does not divide the group order");
    data.r = big.order / static_cast<long>(data.subgroup.size());

    // commutation shortcut cross-check when everything is abelian over the
    // center: T(chi) must equal the commutant of N
    bool comm_over_center = true;
    std::vector<int> zvec = center_indices(eg.group);
    std::set<int> zset(zvec.begin(), zvec.end());
    for (int a = 0; a < big.order && comm_over_center; ++a)
        for (int b = 0; b < big.order && comm_over_center; ++b) {
            int comm = big.mul(big.mul(a, b), big.inverse_of(big.mul(b, a)));
            if (!zset.count(comm)) comm_over_center = false;
        }
    if (comm_over_center && n.view.local.is_abelian()) {
        std::vector<int> commutant;
        for (int g = 0; g < big.order; ++g) {
            bool commutes = true;
            for (int e : n.elems)
                if (big.mul(g, e) != big.mul(e, g)) { commutes = false; break; }
            if (commutes) commutant.push_back(g);
        }
        if (commutant != data.subgroup)
            throw std::logic_error("inertia subgroup differs from the commutant of an abelian N "
                                   "in a commutative-over-center error group");
    }

    // deterministic coset representatives, identity first
    std::set<int> tset(data.subgroup.begin(), data.subgroup.end());
    std::vector<bool> assigned(static_cast<size_t>(big.order), false);
    for (int t : data.subgroup) assigned[static_cast<size_t>(t)] = true;
    data.coset_reps.push_back(big.identity);
    for (int g = 0; g < big.order; ++g) {
        if (assigned[static_cast<size_t>(g)]) continue;
        data.coset_reps.push_back(g);
        for (int t : data.subgroup) assigned[static_cast<size_t>(big.mul(g, t))] = true;
    }
    if (static_cast<long>(data.coset_reps.size()) != data.r)
        throw std::logic_error("coset representative count differs from r");
    return data;
}

// ---- primitive idempotents ----

namespace {

struct Clusters {
    std::vector<double> means;
    std::vector<long> sizes;
};

Clusters cluster_eigenvalues(const Eigen::VectorXd& ev, double gap) {
    Clusters c;
    long i = 0;
    while (i < ev.size()) {
        long j = i;
        double sum = 0;
        while (j < ev.size() && ev(j) - ev(i) < gap) { sum += ev(j); ++j; }
        c.means.push_back(sum / static_cast<double>(j - i));
        c.sizes.push_back(j - i);
        i = j;
    }
    return c;
}

std::optional<std::vector<CycMatrix>> try_exact_split(const CycMatrix& t, const CycMatrix& chi_bar,
                                                      long degree, long multiplicity) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(t));
    if (es.info() != Eigen::Success) return std::nullopt;
    Eigen::VectorXd ev = es.eigenvalues();
    // drop the complement of range(chi_bar): eigenvalue 0 with fixed multiplicity
    long ambient = t.rows();
    long inside = degree * multiplicity;
    std::vector<double> nonzero;
    long zeros = 0;
    for (long i = 0; i < ev.size(); ++i) {
        if (std::abs(ev(i)) < 1e-9) ++zeros;
        else nonzero.push_back(ev(i));
    }
    if (zeros != ambient - inside) return std::nullopt;  // a cluster collided with 0
    Eigen::VectorXd nz(static_cast<long>(nonzero.size()));
    for (size_t i = 0; i < nonzero.size(); ++i) nz(static_cast<long>(i)) = nonzero[i];
    Clusters c = cluster_eigenvalues(nz, 1e-7);
    if (static_cast<long>(c.means.size()) != degree) return std::nullopt;
    for (long s : c.sizes)
        if (s != multiplicity) return std::nullopt;

    std::vector<Rat> lambdas;
    for (double m : c.means) {
        auto q = rationalize(m);
        if (!q) return std::nullopt;
        lambdas.push_back(*q);
    }
    std::sort(lambdas.begin(), lambdas.end());
    // exact Lagrange interpolation inside the corner algebra (unit chi_bar)
    std::vector<CycMatrix> parts;
    for (long i = 0; i < degree; ++i) {
        CycMatrix e = chi_bar;
        for (long j = 0; j < degree; ++j) {
            if (j == i) continue;
            Rat denom = lambdas[static_cast<size_t>(i)] - lambdas[static_cast<size_t>(j)];
            if (denom == 0) return std::nullopt;
            CycMatrix factor = (t - chi_bar.scaled(CycScalar::from_rational(lambdas[static_cast<size_t>(j)])))
                                   .scaled(CycScalar::from_rational(Rat(1) / denom));
            e = e * factor;
        }
        parts.push_back(std::move(e));
    }
    // exact verification
    CycMatrix sum = CycMatrix::zeros(t.rows(), t.cols());
    for (size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].is_hermitian()) return std::nullopt;
        if (!(parts[i] * parts[i] == parts[i])) return std::nullopt;
        if (mat_rank(parts[i]) != multiplicity) return std::nullopt;
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (!(parts[i] * parts[j]).is_zero()) return std::nullopt;
        sum = sum + parts[i];
    }
    if (sum != chi_bar) return std::nullopt;
    return parts;
}

}  // namespace

IdempotentSplit split_primitive_idempotents(const std::vector<CycMatrix>& algebra_gens,
                                            const CycMatrix& chi_bar, long degree,
                                            long multiplicity, uint64_t seed) {
    if (degree == 1) return IdempotentSplit{{chi_bar}, true};

    CycScalar iu = CycScalar::imag_unit();
    std::vector<CycMatrix> candidates;
    for (const auto& m : algebra_gens) {
        CycMatrix herm = chi_bar * (m + m.dagger()) * chi_bar;
        if (!herm.is_zero() && !is_proportional(herm, chi_bar)) candidates.push_back(herm);
        CycMatrix skew = chi_bar * ((m - m.dagger()).scaled(iu)) * chi_bar;
        if (!skew.is_zero() && !is_proportional(skew, chi_bar)) candidates.push_back(skew);
    }
    // seeded random rational combinations a_g (M_g + M_g^dagger), 8 redraws
    uint64_t s = seed * 0x2545f4914f6cdd1dull + 0x9e3779b97f4a7c15ull;
    for (int redraw = 0; redraw < 8; ++redraw) {
        CycMatrix acc = CycMatrix::zeros(chi_bar.rows(), chi_bar.cols());
        for (const auto& m : algebra_gens) {
            long num = static_cast<long>(splitmix64(s) % 19) - 9;
            if (num == 0) continue;
            acc = acc + (m + m.dagger()).scaled(CycScalar::from_rational(Rat(num)));
        }
        CycMatrix herm = chi_bar * acc * chi_bar;
        if (!herm.is_zero() && !is_proportional(herm, chi_bar)) candidates.push_back(herm);
    }

    for (const auto& t : candidates) {
        auto parts = try_exact_split(t, chi_bar, degree, multiplicity);
        if (parts) return IdempotentSplit{std::move(*parts), true};
    }

    // numeric-only fallback: spectral projectors at tolerance, kept as
    // rational approximations and flagged.
    for (const auto& t : candidates) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(t));
        if (es.info() != Eigen::Success) continue;
        Eigen::VectorXd ev = es.eigenvalues();
        long ambient = t.rows();
        std::vector<std::pair<double, long>> nonzero;
        for (long i = 0; i < ev.size(); ++i)
            if (std::abs(ev(i)) >= 1e-9) nonzero.push_back({ev(i), i});
        if (static_cast<long>(nonzero.size()) != degree * multiplicity) continue;
        // group indices into clusters
        std::vector<std::vector<long>> groups;
        for (auto& [val, idx] : nonzero) {
            if (groups.empty() || std::abs(ev(groups.back().back()) - val) > 1e-7)
                groups.push_back({});
            groups.back().push_back(idx);
        }
        if (static_cast<long>(groups.size()) != degree) continue;
        bool sizes_ok = true;
        for (auto& grp : groups)
            if (static_cast<long>(grp.size()) != multiplicity) sizes_ok = false;
        if (!sizes_ok) continue;
        std::vector<CycMatrix> parts;
        for (auto& grp : groups) {
            Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(ambient, ambient);
            for (long idx : grp) {
                Eigen::VectorXcd v = es.eigenvectors().col(idx);
                p += v * v.adjoint();
            }
            CycMatrix pm(ambient, ambient);
            for (long i = 0; i < ambient; ++i)
                for (long j = 0; j < ambient; ++j) {
                    auto re = rationalize(p(i, j).real(), 1e-12, 1 << 30);
                    auto im = rationalize(p(i, j).imag(), 1e-12, 1 << 30);
                    Rat rr = re ? *re : Rat(0), ri = im ? *im : Rat(0);
                    pm.at(i, j) = CycScalar::from_rational(rr) +
                                  CycScalar::imag_unit() * CycScalar::from_rational(ri);
                }
            parts.push_back(std::move(pm));
        }
        return IdempotentSplit{std::move(parts), false};
    }
    throw std::runtime_error("numeric splitting failed to separate eigenvalues at tolerance 1e-9 "
                             "(degree " + std::to_string(degree) + ", multiplicity " +
                             std::to_string(multiplicity) + ")");
}

IdempotentSplit primitive_idempotents(const ErrorGroup& eg, const NormalSubgroupCtx& n,
                                      const CharacterInstance& chi, uint64_t seed) {
    std::vector<CycMatrix> gens;
    gens.reserve(static_cast<size_t>(n.order()));
    for (int l = 0; l < n.order(); ++l) gens.push_back(n.matrix(eg, l));
    return split_primitive_idempotents(gens, chi.chi_bar, chi.degree, chi.multiplicity, seed);
}

// ---- code spaces ----

namespace {

CharacterInstance find_instance(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi) {
    for (auto& inst : induced_characters(eg, n))
        if (inst.chi_index == chi) return inst;
    throw std::invalid_argument("character does not appear in the ambient representation");
}

CodeSpace code_from_projector(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                              CycMatrix proj, CodeSpace::Kind kind, long which = -1) {
    CodeSpace code;
    code.ambient = eg.dim;
    code.logical = orthonormalize_columns(column_space_basis(proj));
    code.projector = std::move(proj);
    code.kind = kind;
    code.normal_subgroup = n.elems;
    code.chi_index = chi;
    code.idempotent_index = which;
    return code;
}

}  // namespace

CodeSpace build_character_code(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi) {
    CharacterInstance inst = find_instance(eg, n, chi);
    return code_from_projector(eg, n, chi, inst.chi_bar, CodeSpace::Kind::character);
}

CodeSpace build_idempotent_code(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                long which, uint64_t seed) {
    CharacterInstance inst = find_instance(eg, n, chi);
    IdempotentSplit split = primitive_idempotents(eg, n, inst, seed);
    if (!split.exact)
        throw std::runtime_error("idempotent code requested but splitting is numeric-only");
    if (which < 0 || which >= static_cast<long>(split.parts.size()))
        throw std::invalid_argument("idempotent index out of range");
    return code_from_projector(eg, n, chi, split.parts[static_cast<size_t>(which)],
                               CodeSpace::Kind::idempotent, which);
}

std::optional<CycScalar> is_detectable(const CodeSpace& code, const CycMatrix& e) {
    if (e.rows() != code.ambient || e.cols() != code.ambient)
        throw std::invalid_argument("operator shape differs from the ambient dimension");
    return is_proportional(code.projector * e * code.projector, code.projector);
}

CorrectableReport is_correctable_set(const CodeSpace& code, const std::vector<CycMatrix>& ops) {
    CorrectableReport rep;
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = 0; j < ops.size(); ++j)
            if (!is_detectable(code, ops[i].dagger() * ops[j])) {
                rep.correctable = false;
                rep.failures.push_back({static_cast<long>(i), static_cast<long>(j)});
            }
    return rep;
}

std::vector<int> representation_center(const NormalSubgroupCtx& n, long chi) {
    long d = n.table.dims[static_cast<size_t>(chi)];
    CycScalar dsq = CycScalar::from_int(d * d);
    std::vector<int> c;
    for (int l = 0; l < n.order(); ++l) {
        CycScalar v = n.table.value(chi, l);
        if (v * v.conj() == dsq) c.push_back(n.view.to_parent(l));
    }
    std::sort(c.begin(), c.end());
    return c;
}

ErrorClassification classify_errors(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                                    uint64_t seed) {
    const AbstractGroup& big = eg.group.structure;
    InertiaData inertia = inertia_subgroup(eg, n, chi);
    CharacterInstance inst = find_instance(eg, n, chi);
    CodeSpace chi_code = code_from_projector(eg, n, chi, inst.chi_bar, CodeSpace::Kind::character);

    IdempotentSplit split = primitive_idempotents(eg, n, inst, seed);
    std::vector<CodeSpace> e_codes;
    if (split.exact)
        for (size_t i = 0; i < split.parts.size(); ++i)
            e_codes.push_back(code_from_projector(eg, n, chi, split.parts[i],
                                                  CodeSpace::Kind::idempotent, static_cast<long>(i)));

    std::set<int> tset(inertia.subgroup.begin(), inertia.subgroup.end());
    std::set<int> nset(n.elems.begin(), n.elems.end());
    std::vector<int> rc = representation_center(n, chi);
    std::set<int> cset(rc.begin(), rc.end());

    ErrorClassification out;
    out.cls.resize(static_cast<size_t>(big.order));
    out.in_rep_center.assign(static_cast<size_t>(big.order), false);
    for (int g = 0; g < big.order; ++g) {
        const CycMatrix& mg = eg.matrix(g);
        if (!tset.count(g)) {
            out.cls[static_cast<size_t>(g)] = ErrClass::outside_inertia;
            ++out.outside_count;
            // Theorem: chi_bar g chi_bar = 0 and e_i g e_i = 0
            auto lam = is_detectable(chi_code, mg);
            if (!lam || !lam->is_zero())
                throw std::logic_error("element outside T(chi) is not annihilated by chi_bar");
            for (const auto& ec : e_codes) {
                auto el = is_detectable(ec, mg);
                if (!el || !el->is_zero())
                    throw std::logic_error("element outside T(chi) is not annihilated by e_i");
            }
        } else if (nset.count(g)) {
            out.cls[static_cast<size_t>(g)] = ErrClass::in_subgroup;
            ++out.subgroup_count;
            for (const auto& ec : e_codes)
                if (!is_detectable(ec, mg))
                    throw std::logic_error("element of N is not detectable by an idempotent code");
            if (cset.count(g)) {
                out.in_rep_center[static_cast<size_t>(g)] = true;
                if (!is_detectable(chi_code, mg))
                    throw std::logic_error("central element of the chi-representation not detectable by C(chi)");
            }
        } else {
            out.cls[static_cast<size_t>(g)] = ErrClass::inertia_other;
            ++out.other_count;
        }
    }

    // anti-commutation shortcut agreement: h g = omega g h with omega != 1
    // and chi(h) != 0 forces g outside T(chi)
    for (int g = 0; g < big.order; ++g) {
        bool anti = false;
        for (int hl = 0; hl < n.order() && !anti; ++hl) {
            int h = n.view.to_parent(hl);
            int hg = big.mul(h, g), gh = big.mul(g, h);
            if (hg == gh) continue;
            int z = big.mul(hg, big.inverse_of(gh));
            auto scalar = eg.matrix(z).scalar_of_identity();
            if (scalar && !scalar->is_one() && !n.table.value(chi, hl).is_zero()) anti = true;
        }
        if (anti && out.cls[static_cast<size_t>(g)] != ErrClass::outside_inertia)
            throw std::logic_error("anti-commutation shortcut disagrees with the inertia classification");
    }
    return out;
}

DetectableSpanReport detectable_span_dimension(const ErrorGroup& eg, const NormalSubgroupCtx& n,
                                               long chi) {
    const long nn = eg.dim;
    std::vector<CharacterInstance> insts = induced_characters(eg, n);
    const CharacterInstance* mine = nullptr;
    for (auto& inst : insts)
        if (inst.chi_index == chi) mine = &inst;
    if (!mine) throw std::invalid_argument("character does not appear in the ambient representation");

    InertiaData inertia = inertia_subgroup(eg, n, chi);
    const long r = inertia.r;
    const CycMatrix& proj = mine->chi_bar;
    const long m = mine->multiplicity * mine->degree;  // dim C(chi)

    // detectable operators form the nullspace of
    //   E |-> Pi E Pi - (tr(Pi E Pi)/m) Pi
    CycMatrix psi(nn * nn, nn * nn);
    CycScalar inv_m = CycScalar::from_rational(Rat(1, m));
    for (long a = 0; a < nn; ++a)
        for (long b = 0; b < nn; ++b) {
            // Pi E_ab Pi = (col a of Pi) (row b of Pi); trace = Pi[b][a]
            CycScalar tr_coeff = proj.at(b, a) * inv_m;
            long col = b * nn + a;  // vec is column-major: E_ab has 1 at (a, b)
            for (long i = 0; i < nn; ++i)
                for (long j = 0; j < nn; ++j) {
                    CycScalar v = proj.at(i, a) * proj.at(b, j) - tr_coeff * proj.at(i, j);
                    psi.at(j * nn + i, col) = v;
                }
        }
    long rank_psi = mat_rank(psi);
    DetectableSpanReport rep;
    rep.rank = nn * nn - rank_psi;
    if ((nn * nn) % (r * r) != 0)
        throw std::logic_error("r^2 does not divide n^2");
    rep.formula = nn * nn - (nn * nn / (r * r) - 1);
    rep.d_dim_formula = nn * nn / r - nn * nn / (r * r) + 1;

    // D: operators preserving each isotypic component, scalar on C(chi)
    std::vector<CycMatrix> d_basis;
    for (auto& inst : insts) {
        if (inst.chi_index == chi) continue;
        for (long a = 0; a < nn; ++a)
            for (long b = 0; b < nn; ++b) {
                CycMatrix unit = CycMatrix::zeros(nn, nn);
                unit.at(a, b) = CycScalar::one();
                CycMatrix blk = inst.chi_bar * unit * inst.chi_bar;
                if (!blk.is_zero()) d_basis.push_back(std::move(blk));
            }
    }
    d_basis.push_back(proj);
    rep.d_dim = span_rank(d_basis);
    if (rep.d_dim != rep.d_dim_formula)
        throw std::logic_error("block-scalar family dimension " + std::to_string(rep.d_dim) +
                               " differs from the count " + std::to_string(rep.d_dim_formula));

    // outside elements: detectable, trace-orthogonal to D, and the union
    // spans exactly the detectable operators
    CodeSpace code = code_from_projector(eg, n, chi, proj, CodeSpace::Kind::character);
    std::set<int> tset(inertia.subgroup.begin(), inertia.subgroup.end());
    std::vector<CycMatrix> outside;
    for (int g = 0; g < eg.order(); ++g)
        if (!tset.count(g)) outside.push_back(eg.matrix(g));
    rep.outside_rank = span_rank(outside);
    if (rep.outside_rank != nn * nn - nn * nn / r)
        throw std::logic_error("span of elements outside T(chi) has unexpected dimension");
    for (const auto& e : outside)
        if (!is_detectable(code, e)) throw std::logic_error("element outside T(chi) not detectable");
    for (const auto& d : d_basis) {
        if (!is_detectable(code, d)) throw std::logic_error("block-scalar operator not detectable");
        for (const auto& e : outside)
            if (!(d.dagger() * e).trace().is_zero())
                throw std::logic_error("block-scalar family not trace-orthogonal to outside elements");
    }
    std::vector<CycMatrix> unioned = d_basis;
    for (auto& e : outside) unioned.push_back(e);
    long union_rank = span_rank(unioned);
    if (union_rank != rep.rank)
        throw std::logic_error("D together with elements outside T(chi) does not span the "
                               "detectable operators: " + std::to_string(union_rank) + " vs " +
                               std::to_string(rep.rank));
    if (rep.rank != rep.formula)
        throw std::logic_error("detectable span rank " + std::to_string(rep.rank) +
                               " differs from the counting formula " + std::to_string(rep.formula));
    return rep;
}

// ---- syndrome frames and recovery ----

namespace {

// Completes orthonormal columns to a full orthonormal basis, deterministically
// trying standard basis vectors in index order.
CycMatrix complete_basis(const CycMatrix& cols) {
    long nn = cols.rows();
    std::vector<CycMatrix> basis;
    for (long j = 0; j < cols.cols(); ++j) basis.push_back(column(cols, j));
    for (long k = 0; k < nn && static_cast<long>(basis.size()) < nn; ++k) {
        CycMatrix v(nn, 1);
        v.at(k, 0) = CycScalar::one();
        for (const auto& u : basis) {
            CycScalar coef = inner(u, v);
            if (coef.is_zero()) continue;
            for (long i = 0; i < nn; ++i) v.at(i, 0) -= coef * u.at(i, 0);
        }
        CycScalar ns = norm_sq(v);
        if (ns.is_zero()) continue;
        auto q = ns.as_rational();
        if (!q) throw std::domain_error("basis completion hit a non-rational squared norm");
        basis.push_back(v.scaled(CycScalar::sqrt_of_rational(*q).inverse()));
    }
    if (static_cast<long>(basis.size()) != nn)
        throw std::logic_error("failed to complete an orthonormal basis");
    CycMatrix out(nn, nn);
    for (long j = 0; j < nn; ++j)
        for (long i = 0; i < nn; ++i) out.at(i, j) = basis[static_cast<size_t>(j)].at(i, 0);
    return out;
}

// Unitary agreeing with `partial` on the subspace spanned by the orthonormal
// columns `domain` (partial * domain must be orthonormal as well).
CycMatrix unitary_extension(const CycMatrix& partial, const CycMatrix& domain) {
    CycMatrix images = partial * domain;
    if (!(images.dagger() * images).is_identity())
        throw std::logic_error("unitary extension: images are not orthonormal");
    CycMatrix dom_full = complete_basis(domain);
    CycMatrix img_full = complete_basis(images);
    CycMatrix u = img_full * dom_full.dagger();
    if (!u.is_unitary()) throw std::logic_error("unitary extension failed");
    return u;
}

}  // namespace

SyndromeFrame syndrome_frame(const ErrorGroup& eg, const NormalSubgroupCtx& n, long chi,
                             const std::optional<std::vector<int>>& intended,
                             CodeSpace::Kind kind, uint64_t seed, std::optional<int> bias) {
    const AbstractGroup& big = eg.group.structure;
    SyndromeFrame frame;
    frame.inertia = inertia_subgroup(eg, n, chi);
    CharacterInstance inst = find_instance(eg, n, chi);
    frame.rep_center = representation_center(n, chi);

    std::set<int> tset(frame.inertia.subgroup.begin(), frame.inertia.subgroup.end());
    std::set<int> cset(frame.rep_center.begin(), frame.rep_center.end());

    CodeSpace chi_code = code_from_projector(eg, n, chi, inst.chi_bar, CodeSpace::Kind::character);
    std::vector<int>& reps = frame.inertia.coset_reps;

    if (intended) {
        // S^dagger S must be detectable by C(chi)
        for (int s1 : *intended)
            for (int s2 : *intended) {
                CycMatrix prod = eg.matrix(eg.group.inverse_table[static_cast<size_t>(s1)]) * eg.matrix(s2);
                if (!is_detectable(chi_code, prod))
                    throw std::invalid_argument("intended set: S^dagger S is not detectable");
            }
        // coset -> members of S
        auto coset_index = [&](int g) {
            for (size_t i = 0; i < reps.size(); ++i) {
                int d = big.mul(big.inverse_of(reps[i]), g);
                if (tset.count(d)) return static_cast<long>(i);
            }
            throw std::logic_error("element not covered by coset representatives");
        };
        std::vector<std::vector<int>> members(reps.size());
        for (int s : *intended) members[static_cast<size_t>(coset_index(s))].push_back(s);
        for (size_t i = 0; i < members.size(); ++i) {
            if (members[i].empty()) continue;
            std::sort(members[i].begin(), members[i].end());
            for (size_t a = 0; a + 1 < members[i].size(); ++a) {
                int d = big.mul(big.inverse_of(members[i][a]), members[i][a + 1]);
                if (!cset.count(d))
                    throw std::logic_error("intended set meets a T(chi)-coset in elements from "
                                           "different C-cosets");
            }
            reps[i] = members[i].front();
        }
    }
    if (bias) {
        if (!tset.count(*bias)) throw std::invalid_argument("bias representative must lie in T(chi)");
        reps[0] = *bias;
    }

    if (kind == CodeSpace::Kind::character) {
        frame.code = chi_code;
        for (size_t i = 0; i < reps.size(); ++i) {
            Syndrome s;
            s.coset = static_cast<int>(i);
            s.idem = 0;
            const CycMatrix& gi = eg.matrix(reps[i]);
            s.projector = gi * inst.chi_bar * gi.dagger();
            s.recovery = eg.matrix(eg.group.inverse_table[static_cast<size_t>(reps[i])]);
            frame.syndromes.push_back(std::move(s));
        }
    } else {
        IdempotentSplit split = primitive_idempotents(eg, n, inst, seed);
        frame.exact_idempotents = split.exact;
        if (!split.exact)
            throw std::runtime_error("idempotent frame requested but splitting is numeric-only");
        frame.idempotents = split.parts;
        frame.code = code_from_projector(eg, n, chi, split.parts[0], CodeSpace::Kind::idempotent, 0);

        // matrix units e_{1j} by sweeping algebra elements of N
        const long d = inst.degree;
        std::vector<CycMatrix> e1j(static_cast<size_t>(d));
        e1j[0] = split.parts[0];
        for (long j = 1; j < d; ++j) {
            bool found = false;
            for (int l = 0; l < n.order() && !found; ++l) {
                CycMatrix w = split.parts[0] * n.matrix(eg, l) * split.parts[static_cast<size_t>(j)];
                if (w.is_zero()) continue;
                auto c = is_proportional(w * w.dagger(), split.parts[0]);
                if (!c || c->is_zero()) continue;
                auto q = c->as_rational();
                if (!q || *q <= 0) continue;
                CycMatrix unit = w.scaled(CycScalar::sqrt_of_rational(*q).inverse());
                if (unit * unit.dagger() != split.parts[0]) continue;
                e1j[static_cast<size_t>(j)] = std::move(unit);
                found = true;
            }
            if (!found)
                throw std::runtime_error("failed to construct matrix unit e_{1j} from single "
                                         "algebra elements");
        }
        frame.units.assign(static_cast<size_t>(d), std::vector<CycMatrix>(static_cast<size_t>(d)));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
                frame.units[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    e1j[static_cast<size_t>(i)].dagger() * e1j[static_cast<size_t>(j)];
        // e_{ij} e_k e_{ij}^dagger = delta_{jk} e_i
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j)
                for (long k = 0; k < d; ++k) {
                    CycMatrix lhs = frame.units[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                                    split.parts[static_cast<size_t>(k)] *
                                    frame.units[static_cast<size_t>(i)][static_cast<size_t>(j)].dagger();
                    CycMatrix rhs = (j == k) ? split.parts[static_cast<size_t>(i)]
                                             : CycMatrix::zeros(eg.dim, eg.dim);
                    if (lhs != rhs) throw std::logic_error("matrix unit system fails its defining law");
                }

        CycMatrix code_basis = frame.code.logical;
        for (size_t i = 0; i < reps.size(); ++i) {
            const CycMatrix& gi = eg.matrix(reps[i]);
            const CycMatrix gi_inv = eg.matrix(eg.group.inverse_table[static_cast<size_t>(reps[i])]);
            for (long j = 0; j < d; ++j) {
                Syndrome s;
                s.coset = static_cast<int>(i);
                s.idem = static_cast<int>(j);
                s.projector = gi * split.parts[static_cast<size_t>(j)] * gi.dagger();
                // unitary extension of e_{1j} g_i^{-1} on g_i C(e_j)
                CycMatrix ej_basis = orthonormalize_columns(
                    column_space_basis(split.parts[static_cast<size_t>(j)]));
                CycMatrix domain = gi * ej_basis;
                CycMatrix partial = frame.units[0][static_cast<size_t>(j)] * gi_inv;
                s.recovery = unitary_extension(partial, domain);
                frame.syndromes.push_back(std::move(s));
            }
        }
    }

    // the g_i C partition the space: pairwise orthogonal, summing to identity
    CycMatrix sum = CycMatrix::zeros(eg.dim, eg.dim);
    for (size_t i = 0; i < frame.syndromes.size(); ++i) {
        sum = sum + frame.syndromes[i].projector;
        for (size_t j = i + 1; j < frame.syndromes.size(); ++j)
            if (!(frame.syndromes[i].projector * frame.syndromes[j].projector).is_zero())
                throw std::logic_error("syndrome subspaces are not orthogonal");
    }
    if (!sum.is_identity()) throw std::logic_error("syndrome subspaces do not partition the space");
    return frame;
}

std::vector<RecoveryBranch> recover(const SyndromeFrame& frame, const CycMatrix& state) {
    if (state.cols() != 1 || state.rows() != frame.code.ambient)
        throw std::invalid_argument("state must be an ambient-dimension column vector");
    CycScalar ns = norm_sq(state);
    if (!ns.is_one()) throw std::invalid_argument("state is not exactly normalized");
    std::vector<RecoveryBranch> branches;
    Rat total(0);
    for (const auto& s : frame.syndromes) {
        CycMatrix p = s.projector * state;
        CycScalar q = norm_sq(p);
        if (q.is_zero()) continue;
        auto prob = q.as_rational();
        if (!prob)
            throw std::domain_error("branch probability is not rational: " + q.str());
        CycMatrix post = (s.recovery * p).scaled(CycScalar::sqrt_of_rational(*prob).inverse());
        total += *prob;
        branches.push_back(RecoveryBranch{*prob, std::move(post)});
    }
    if (total != 1) throw std::logic_error("branch probabilities do not sum to one");
    return branches;
}

std::vector<NumericBranch> recover_numeric(const SyndromeFrame& frame,
                                           const std::vector<std::complex<double>>& state) {
    if (static_cast<long>(state.size()) != frame.code.ambient)
        throw std::invalid_argument("state dimension mismatch");
    Eigen::VectorXcd psi(frame.code.ambient);
    for (long i = 0; i < frame.code.ambient; ++i) psi(i) = state[static_cast<size_t>(i)];
    if (std::abs(psi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("state is not normalized within 1e-12");
    std::vector<NumericBranch> branches;
    for (const auto& s : frame.syndromes) {
        Eigen::VectorXcd p = to_eigen(s.projector) * psi;
        double q = p.squaredNorm();
        if (q < 1e-12) continue;
        Eigen::VectorXcd post = to_eigen(s.recovery) * p / std::sqrt(q);
        NumericBranch b;
        b.probability = q;
        b.state.assign(post.data(), post.data() + post.size());
        branches.push_back(std::move(b));
    }
    return branches;
}

CorrectableSet correctable_set(const ErrorGroup& eg, const SyndromeFrame& frame) {
    const AbstractGroup& big = eg.group.structure;
    CorrectableSet out;
    std::set<int> predicted;
    const std::vector<int>& tail = (frame.code.kind == CodeSpace::Kind::character)
                                       ? frame.rep_center
                                       : frame.code.normal_subgroup;
    for (int rep : frame.inertia.coset_reps)
        for (int c : tail) predicted.insert(big.mul(rep, c));
    out.predicted.assign(predicted.begin(), predicted.end());

    // test states: logical basis plus the uniform superposition
    std::vector<CycMatrix> states;
    const CycMatrix& basis = frame.code.logical;
    for (long j = 0; j < basis.cols(); ++j) states.push_back(column(basis, j));
    if (basis.cols() > 1) {
        CycMatrix sup(basis.rows(), 1);
        for (long j = 0; j < basis.cols(); ++j)
            for (long i = 0; i < basis.rows(); ++i) sup.at(i, 0) += basis.at(i, j);
        auto q = norm_sq(sup).as_rational();
        if (!q) throw std::domain_error("superposition norm not rational");
        states.push_back(sup.scaled(CycScalar::sqrt_of_rational(*q).inverse()));
    }

    for (int g = 0; g < big.order; ++g) {
        bool ok = true;
        for (const auto& psi : states) {
            CycMatrix corrupted = eg.matrix(g) * psi;
            std::vector<RecoveryBranch> branches;
            try {
                branches = recover(frame, corrupted);
            } catch (const std::domain_error&) {
                ok = false;  // irrational branch probability: cannot certify
                break;
            }
            for (const auto& b : branches) {
                auto lam = is_proportional(b.state, psi);
                if (!lam || lam->is_zero()) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) out.verified.push_back(g);
    }
    for (int p : out.predicted)
        if (!std::binary_search(out.verified.begin(), out.verified.end(), p))
            throw std::logic_error("predicted correctable element failed recovery simulation");
    return out;
}

}  // namespace nicebase
