"""Exhaustive small-instance verification suites.

Every algebraic law the library promises is checked here on bounded index
ranges, with exact equality everywhere.  The suites are pure functions of a
Bounds value, so the command line can run them at quick defaults while the
acceptance tests run them at full depth.

Operator identities are verified on the power-sum basis elements of each
degree: the checks are linear in the input, so equality on a spanning
family is equality of operators.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator, TextIO

from . import polyoracle, tableaux, vertex
from .partitions import (
    Partition,
    add_columns,
    binomial,
    compositions_of,
    conjugate,
    count_partitions,
    insert_parts,
    mult_count,
    partitions_of,
    remove_parts,
    straighten,
    z_value,
)
from .ring import (
    BASES,
    SymFunc,
    basis_element,
    en,
    expand,
    hn,
    inner_product,
    omega,
    pn,
    r_coefficient,
    skew,
)


@dataclass(frozen=True)
class Bounds:
    """Index ranges for the verification sweeps."""

    degree: int = 4  # partition size for action laws and pairing tables
    identity_degree: int = 4  # total degree for operator/adjointness identities
    a_max: int = 2
    k_max: int = 2
    pairs_n: int = 8
    pairs_k: int = 4
    lemma_n: int = 5
    lemma_k: int = 3
    rsform_n: int = 4
    rsform_k: int = 2
    oracle_degree: int = 4
    oracle_vars: int = 4

    @classmethod
    def for_degree(cls, d: int) -> "Bounds":
        deep = d >= 6
        return cls(
            degree=d,
            identity_degree=min(d, 6),
            a_max=3 if deep else 2,
            k_max=4 if deep else 2,
            pairs_n=max(d + 2, 6),
            pairs_k=5 if deep else 3,
            lemma_n=min(d + 1, 8),
            lemma_k=4 if deep else 3,
            rsform_n=min(d, 6),
            rsform_k=3 if deep else 2,
            oracle_degree=min(d, 6),
            oracle_vars=min(max(d, 2), 6),
        )


Check = tuple[str, int, list[str]]  # (name, cases run, failure messages)


def _parts_upto(n: int, max_length: int | None = None) -> Iterator[Partition]:
    for d in range(n + 1):
        yield from partitions_of(d, max_length=max_length)


def _basis_upto(b: str, n: int) -> Iterator[tuple[Partition, SymFunc]]:
    for lam in _parts_upto(n):
        yield lam, basis_element(b, lam)


def _check(name: str, failures: list[str], cases: int) -> Check:
    return (name, cases, failures)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


def check_conjugate_involution(b: Bounds) -> Check:
    bad, cases = [], 0
    for lam in _parts_upto(max(b.degree, 12)):
        cases += 1
        if conjugate(conjugate(lam)) != lam:
            bad.append(f"conjugate not an involution at {lam}")
    return _check("partitions: conjugate involution", bad, cases)


def check_add_columns_size(b: Bounds) -> Check:
    bad, cases = [], 0
    for lam in _parts_upto(b.degree):
        for a in range(b.a_max + 1):
            for k in range(b.k_max + 1):
                cases += 1
                col = add_columns(lam, a, k)
                if col is None:
                    if len(lam) <= k:
                        bad.append(f"add_columns({lam},{a},{k}) unexpectedly undefined")
                elif sum(col) != sum(lam) + a * k:
                    bad.append(f"|{lam} + {a}^{k}| wrong")
    return _check("partitions: add_columns size law", bad, cases)


def check_insert_remove_roundtrip(b: Bounds) -> Check:
    bad, cases = [], 0
    n = min(b.degree, 8)
    for lam in _parts_upto(n):
        for mu in _parts_upto(n):
            cases += 1
            if remove_parts(insert_parts(lam, mu), mu) != lam:
                bad.append(f"insert/remove roundtrip failed at {lam}, {mu}")
    return _check("partitions: insert/remove roundtrip", bad, cases)


def check_straighten_permutations(b: Bounds) -> Check:
    from itertools import permutations

    bad, cases = [], 0
    for lam in _parts_upto(min(b.degree, 6), max_length=4):
        shifted = [lam[j] - (j + 1) for j in range(len(lam))]
        for perm in permutations(range(len(lam))):
            cases += 1
            seq = [shifted[perm[j]] + (j + 1) for j in range(len(lam))]
            inv = sum(
                1
                for x in range(len(perm))
                for y in range(x + 1, len(perm))
                if perm[x] > perm[y]
            )
            res = straighten(seq)
            if res.is_zero or res.shape != lam or res.sign != (-1) ** inv:
                bad.append(f"straighten({seq}) != {(-1)**inv} * {lam}")
    return _check("partitions: straighten of permuted index sequences", bad, cases)


def check_partition_counts(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(max(b.degree, 9) + 1):
        cases += 1
        got = sum(1 for _ in partitions_of(n))
        if got != count_partitions(n):
            bad.append(f"p({n}) = {got}, pentagonal recurrence says {count_partitions(n)}")
    return _check("partitions: enumeration count vs recurrence", bad, cases)


def check_composition_counts(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(max(b.degree, 6) + 1):
        for k in range(1, b.pairs_k + 1):
            cases += 1
            got = sum(1 for _ in compositions_of(n, k))
            seen = set(compositions_of(n, k))
            if got != comb(n + k - 1, k - 1) or len(seen) != got:
                bad.append(f"compositions_of({n},{k}) count wrong")
    return _check("partitions: composition count (stars and bars)", bad, cases)


# ---------------------------------------------------------------------------
# core ring
# ---------------------------------------------------------------------------

_DUAL_PAIRS = (("m", "h"), ("f", "e"), ("s", "s"))


def check_dual_pairings(b: Bounds) -> Check:
    bad, cases = [], 0
    shapes = list(_parts_upto(b.degree))
    for lam in shapes:
        for mu in shapes:
            delta = Fraction(1 if lam == mu else 0)
            cases += 3
            for b1, b2 in _DUAL_PAIRS:
                got = inner_product(basis_element(b1, lam), basis_element(b2, mu))
                if got != delta:
                    bad.append(f"<{b1}_{lam}, {b2}_{mu}> = {got}")
            cases += 1
            got = inner_product(
                basis_element("p", lam), basis_element("p", mu) * Fraction(1, z_value(mu))
            )
            if got != delta:
                bad.append(f"<p_{lam}, p_{mu}/z> = {got}")
    return _check("ring: dual-basis pairing tables", bad, cases)


def check_omega(b: Bounds) -> Check:
    bad, cases = [], 0
    for base in BASES:
        for lam, g in _basis_upto(base, b.degree):
            cases += 1
            if omega(omega(g)) != g:
                bad.append(f"omega^2 != id on {base}_{lam}")
    for lam in _parts_upto(b.degree):
        cases += 3
        if omega(basis_element("h", lam)) != basis_element("e", lam):
            bad.append(f"omega h_{lam} != e_{lam}")
        if omega(basis_element("m", lam)) != basis_element("f", lam):
            bad.append(f"omega m_{lam} != f_{lam}")
        if omega(basis_element("s", lam)) != basis_element("s", conjugate(lam)):
            bad.append(f"omega s_{lam} != s_{conjugate(lam)}")
    return _check("ring: omega involution and basis swaps", bad, cases)


def check_expand_roundtrip(b: Bounds) -> Check:
    bad, cases = [], 0
    for src in BASES:
        for lam, g in _basis_upto(src, b.degree):
            for dst in BASES:
                cases += 1
                if expand(g, dst).to_symfunc() != g:
                    bad.append(f"expand roundtrip {src}_{lam} via {dst}")
    return _check("ring: expansion/rebuild roundtrip", bad, cases)


def check_jacobi_trudi(b: Bounds) -> Check:
    def naive_det(lam: Partition) -> SymFunc:
        size = len(lam)

        def minor(rows: list[int], cols: list[int]) -> SymFunc:
            if not cols:
                return SymFunc.one()
            out = SymFunc.zero()
            i = rows[0]
            for t, j in enumerate(cols):
                idx = lam[j] - (j + 1) + i
                if idx < 0:
                    continue
                sub = minor(rows[1:], cols[:t] + cols[t + 1 :])
                term = hn(idx) * sub
                out = out + (term if t % 2 == 0 else -term)
            return out

        return minor(list(range(1, size + 1)), list(range(size)))

    bad, cases = [], 0
    for lam in _parts_upto(min(b.degree, 8)):
        cases += 1
        if basis_element("s", lam) != naive_det(lam):
            bad.append(f"Jacobi-Trudi mismatch at {lam}")
    return _check("ring: Schur = naive h-determinant", bad, cases)


def check_alternating_eh(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(1, max(b.degree, 8) + 1):
        cases += 1
        total = SymFunc.zero()
        for r in range(n + 1):
            term = en(r) * hn(n - r)
            total = total + (term if r % 2 == 0 else -term)
        if not total.is_zero:
            bad.append(f"sum_r (-1)^r e_r h_(n-r) != 0 at n={n}")
    return _check("ring: alternating e/h convolution vanishes", bad, cases)


def check_e_to_h(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(1, max(b.degree, 8) + 1):
        cases += 1
        total = SymFunc.zero()
        for mu in partitions_of(n):
            total = total + r_coefficient(mu) * basis_element("h", mu)
        if total != en(n):
            bad.append(f"e_{n} != sum r_mu h_mu")
    return _check("ring: e_n as signed multinomial h-combination", bad, cases)


def check_alternating_r_sum(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(1, max(b.degree, 8) + 1):
        for mu in partitions_of(n):
            cases += 1
            total = r_coefficient(mu)  # j = 0 term
            for j in range(1, n + 1):
                reduced = remove_parts(mu, Partition((j,)))
                if reduced is not None:
                    total += (-1) ** j * r_coefficient(reduced)
            if total != 0:
                bad.append(f"alternating r-sum != 0 at {mu}")
    return _check("ring: alternating r-coefficient sum vanishes", bad, cases)


def check_skew_adjointness(b: Bounds) -> Check:
    bad, cases = [], 0
    n = b.identity_degree
    for d1 in range(n + 1):
        for d2 in range(n - d1 + 1):
            for glam in partitions_of(d1):
                g = basis_element("p", glam)
                for qlam in partitions_of(d2):
                    q = basis_element("p", qlam)
                    gq = g * q
                    for plam in partitions_of(d1 + d2):
                        p = basis_element("p", plam)
                        cases += 1
                        if inner_product(skew(g, p), q) != inner_product(p, gq):
                            bad.append(f"adjointness fails at g={glam} P={plam} Q={qlam}")
    return _check("ring: skew adjointness on power-sum triples", bad, cases)


def check_coproduct_rules(b: Bounds) -> Check:
    bad, cases = [], 0
    n = b.identity_degree
    for d1 in range(n + 1):
        for lam1 in partitions_of(d1):
            p1 = basis_element("p", lam1)
            for d2 in range(n - d1 + 1):
                for lam2 in partitions_of(d2):
                    p2 = basis_element("p", lam2)
                    prod = p1 * p2
                    for k in range(1, d1 + d2 + 1):
                        cases += 3
                        want_h = SymFunc.zero()
                        want_e = SymFunc.zero()
                        for i in range(k + 1):
                            want_h = want_h + skew(hn(i), p1) * skew(hn(k - i), p2)
                            want_e = want_e + skew(en(i), p1) * skew(en(k - i), p2)
                        if skew(hn(k), prod) != want_h:
                            bad.append(f"h_{k} coproduct rule fails at {lam1},{lam2}")
                        if skew(en(k), prod) != want_e:
                            bad.append(f"e_{k} coproduct rule fails at {lam1},{lam2}")
                        want_p = skew(pn(k), p1) * p2 + p1 * skew(pn(k), p2)
                        if skew(pn(k), prod) != want_p:
                            bad.append(f"p_{k} derivation rule fails at {lam1},{lam2}")
    return _check("ring: coproduct product rules for h/e/p skews", bad, cases)


# ---------------------------------------------------------------------------
# skew-commutation lemmas and the monomial product rule
# ---------------------------------------------------------------------------


def check_h_skew_commutation(b: Bounds) -> Check:
    bad, cases = [], 0
    n = b.identity_degree
    for dl in range(n + 1):
        for lam in partitions_of(dl):
            mlam = basis_element("m", lam)
            for dp in range(n - dl + 1):
                for plam in partitions_of(dp):
                    target = basis_element("p", plam)
                    for k in range(1, n + 1):
                        cases += 1
                        lhs = skew(hn(k), mlam * target)
                        rhs = SymFunc.zero()
                        for i in range(k + 1):
                            reduced = lam if i == 0 else remove_parts(lam, Partition((i,)))
                            if reduced is None:
                                continue
                            rhs = rhs + basis_element("m", reduced) * skew(hn(k - i), target)
                        if lhs != rhs:
                            bad.append(f"h_{k} skew-commutation fails at {lam},{plam}")
    return _check("lemmas: h-skew past a monomial factor", bad, cases)


def check_e_skew_commutation(b: Bounds) -> Check:
    bad, cases = [], 0
    n = b.identity_degree
    for dl in range(n + 1):
        for lam in partitions_of(dl):
            mlam = basis_element("m", lam)
            for dp in range(n - dl + 1):
                for plam in partitions_of(dp):
                    target = basis_element("p", plam)
                    for k in range(1, n + 1):
                        cases += 1
                        lhs = skew(en(k), mlam * target)
                        rhs = SymFunc.zero()
                        for i in range(k + 1):
                            for mu in partitions_of(i):
                                reduced = remove_parts(lam, mu)
                                if reduced is None:
                                    continue
                                rhs = rhs + (
                                    r_coefficient(mu)
                                    * basis_element("m", reduced)
                                    * skew(en(k - i), target)
                                )
                        if lhs != rhs:
                            bad.append(f"e_{k} skew-commutation fails at {lam},{plam}")
    return _check("lemmas: e-skew past a monomial factor", bad, cases)


def check_monomial_product_rule(b: Bounds) -> Check:
    bad, cases = [], 0
    for k in range(1, min(b.k_max + 2, 5)):
        for n in range(b.identity_degree + 1):
            for lam in partitions_of(n):
                cases += 1
                lhs = basis_element("m", Partition((k,))) * basis_element("m", lam)
                rhs = SymFunc.zero()
                for i in range(n + 1):
                    reduced = lam if i == 0 else remove_parts(lam, Partition((i,)))
                    if reduced is None:
                        continue
                    shape = insert_parts(reduced, Partition((k + i,)))
                    rhs = rhs + (1 + mult_count(lam, k + i)) * basis_element("m", shape)
                if lhs != rhs:
                    bad.append(f"m_({k}) * m_{lam} product rule fails")
    return _check("lemmas: one-part monomial product rule", bad, cases)


# ---------------------------------------------------------------------------
# vertex operator action laws
# ---------------------------------------------------------------------------


def check_cp_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        g = basis_element("p", mu)
        for a in range(b.a_max + 1):
            for k in range(len(mu) + 1, b.k_max + 1):
                cases += 1
                col = add_columns(mu, a, k)
                if vertex.cp_column(a, k, g) != basis_element("p", col):
                    bad.append(f"CP_{a}^{k} p_{mu}")
    return _check("actions: power column adder (strictly short inputs)", bad, cases)


def check_ch_ce_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        gh = basis_element("h", mu)
        ge = basis_element("e", mu)
        for k in range(max(len(mu), 1), b.k_max + 1):
            col = add_columns(mu, 1, k)
            cases += 2
            if vertex.ch_column(k, gh) != basis_element("h", col):
                bad.append(f"CH_1^{k} h_{mu}")
            if vertex.ce_column(k, ge) != basis_element("e", col):
                bad.append(f"CE_1^{k} e_{mu}")
    return _check("actions: homogeneous/elementary column adders", bad, cases)


def check_rm_family_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        gm = basis_element("m", mu)
        for a in range(1, b.a_max + 1):
            row = insert_parts(mu, Partition((a,)))
            cases += 2
            if vertex.rm_row_one(a, gm) != (1 + mult_count(mu, a)) * basis_element("m", row):
                bad.append(f"RM1_{a} m_{mu}")
            if vertex.rm_row(a, gm) != basis_element("m", row):
                bad.append(f"RM_{a} m_{mu}")
            for k in range(b.k_max + 1):
                cases += 1
                shape = insert_parts(mu, Partition((a,) * k))
                want = binomial(mult_count(mu, a) + k, k) * basis_element("m", shape)
                if vertex.rm_rows(a, k, gm) != want:
                    bad.append(f"RMK_{a}^{k} m_{mu}")
    return _check("actions: monomial row adders (coefficient laws)", bad, cases)


def check_rf_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        gf = basis_element("f", mu)
        for a in range(1, b.a_max + 1):
            cases += 1
            if vertex.rf_row(a, gf) != basis_element("f", insert_parts(mu, Partition((a,)))):
                bad.append(f"RF_{a} f_{mu}")
    return _check("actions: forgotten row adder", bad, cases)


def check_cm_cf_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        gm = basis_element("m", mu)
        gf = basis_element("f", mu)
        for a in range(b.a_max + 1):
            for k in range(1, b.k_max + 1):
                col = add_columns(mu, a, k)
                cases += 2
                resm = vertex.cm_column(a, k, gm)
                resf = vertex.cf_column(a, k, gf)
                if col is None:
                    if not resm.is_zero:
                        bad.append(f"CM_{a}^{k} m_{mu} not 0")
                    if not resf.is_zero:
                        bad.append(f"CF_{a}^{k} f_{mu} not 0")
                else:
                    if resm != basis_element("m", col):
                        bad.append(f"CM_{a}^{k} m_{mu}")
                    if resf != basis_element("f", col):
                        bad.append(f"CF_{a}^{k} f_{mu}")
    return _check("actions: monomial/forgotten column adders with vanishing", bad, cases)


def check_rs_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        g = basis_element("s", mu)
        for a in range(b.a_max + 1):
            cases += 1
            got = vertex.rs_row(a, g)
            if a >= (mu[0] if mu else 0):
                want = basis_element("s", insert_parts(mu, Partition((a,) if a else ())))
                if got != want:
                    bad.append(f"RS_{a} s_{mu} (dominant row)")
            else:
                res = straighten((a,) + tuple(mu))
                want = (
                    SymFunc.zero()
                    if res.is_zero
                    else res.sign * basis_element("s", res.shape)
                )
                if got != want:
                    bad.append(f"RS_{a} s_{mu} (straightened)")
    return _check("actions: Schur row adder incl. straightening", bad, cases)


def check_cs_action(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu in _parts_upto(b.degree):
        g = basis_element("s", mu)
        for a in range(b.a_max + 1):
            for k in range(b.k_max + 1):
                cases += 1
                col = add_columns(mu, a, k)
                got = vertex.cs_column(a, k, g)
                if col is None:
                    if not got.is_zero:
                        bad.append(f"CS_{a}^{k} s_{mu} not 0 for tall shape")
                elif got != basis_element("s", col):
                    bad.append(f"CS_{a}^{k} s_{mu}")
    return _check("actions: Schur column adder with vanishing", bad, cases)


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------


def _p_span(n: int) -> list[tuple[Partition, SymFunc]]:
    return [(lam, basis_element("p", lam)) for lam in _parts_upto(n)]


# Operator images of single basis elements recur across the relation checks;
# memoize them (SymFunc values are immutable, sharing is safe).
@lru_cache(maxsize=None)
def _ce_on_e(k: int, lam: Partition) -> SymFunc:
    return vertex.ce_column(k, basis_element("e", lam))


@lru_cache(maxsize=None)
def _ch_on_h(k: int, lam: Partition) -> SymFunc:
    return vertex.ch_column(k, basis_element("h", lam))


@lru_cache(maxsize=None)
def _rmk_on_m(a: int, k: int, lam: Partition) -> SymFunc:
    return vertex.rm_rows(a, k, basis_element("m", lam))


@lru_cache(maxsize=None)
def _cm_on_m(a: int, k: int, lam: Partition) -> SymFunc:
    return vertex.cm_column(a, k, basis_element("m", lam))


@lru_cache(maxsize=None)
def _cs_on_s(a: int, k: int, lam: Partition) -> SymFunc:
    return vertex.cs_column(a, k, basis_element("s", lam))


@lru_cache(maxsize=None)
def _rsk_on_s(a: int, k: int, lam: Partition) -> SymFunc:
    return vertex.rs_rows(a, k, basis_element("s", lam))


def check_rs_anticommutation(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu, g in _basis_upto("s", b.identity_degree):
        for a in range(b.a_max + 1):
            for bb in range(1, b.a_max + 1):
                cases += 1
                lhs = vertex.rs_row(a, vertex.rs_row(bb, g))
                rhs = vertex.rs_row(bb - 1, vertex.rs_row(a + 1, g))
                if lhs != -1 * rhs:
                    bad.append(f"RS_{a} RS_{bb} != -RS_{bb-1} RS_{a+1} on s_{mu}")
            cases += 1
            if not vertex.rs_row(a, vertex.rs_row(a + 1, g)).is_zero:
                bad.append(f"RS_{a} RS_{a+1} != 0 on s_{mu}")
    return _check("identities: Schur row adder anticommutation", bad, cases)


def check_rsk_vs_composition(b: Bounds) -> Check:
    bad, cases = [], 0
    for mu, g in _basis_upto("s", b.identity_degree):
        for a in range(b.a_max + 1):
            for k in range(min(b.k_max, 3) + 1):
                cases += 1
                composed = g
                for _ in range(k):
                    composed = vertex.rs_row(a, composed)
                if vertex.rs_rows(a, k, g) != composed:
                    bad.append(f"RSK_{a}^{k} != RS_{a} composed {k} times on s_{mu}")
    return _check("identities: closed-form Schur power vs composition", bad, cases)


def check_rm1_power_law(b: Bounds) -> Check:
    bad, cases = [], 0
    n = min(b.identity_degree, 5)
    for lam, g in _p_span(n):
        for a in range(1, b.a_max + 1):
            for k in range(min(b.k_max, 3) + 1):
                cases += 1
                powered = g
                for _ in range(k):
                    powered = vertex.rm_row_one(a, powered)
                if powered != factorial(k) * vertex.rm_rows(a, k, g):
                    bad.append(f"RM1^{k} != {k}! RMK on p_{lam}, a={a}")
    return _check("identities: iterated one-row adder vs k-row adder", bad, cases)


def check_rm_commutativity(b: Bounds) -> Check:
    bad, cases = [], 0
    n = min(b.identity_degree, 5)
    for lam in _parts_upto(n):
        g = basis_element("m", lam)
        for a in range(1, b.a_max + 1):
            for a2 in range(a, b.a_max + 1):
                cases += 1
                if vertex.rm_row(a, vertex.rm_row(a2, g)) != vertex.rm_row(
                    a2, vertex.rm_row(a, g)
                ):
                    bad.append(f"RM_{a} RM_{a2} not commuting on m_{lam}")
    return _check("identities: monomial row adders commute", bad, cases)


def check_omega_conjugation(b: Bounds) -> Check:
    bad, cases = [], 0
    for lam, g in _p_span(b.identity_degree):
        for k in range(1, b.k_max + 1):
            cases += 1
            if vertex.ce_column(k, g) != omega(vertex.ch_column(k, omega(g))):
                bad.append(f"CE != omega CH omega on p_{lam}, k={k}")
            for a in range(b.a_max + 1):
                cases += 1
                if vertex.cf_column(a, k, g) != omega(vertex.cm_column(a, k, omega(g))):
                    bad.append(f"CF != omega CM omega on p_{lam}, a={a}, k={k}")
        for a in range(1, b.a_max + 1):
            cases += 1
            if vertex.rf_row(a, g) != omega(vertex.rm_row(a, omega(g))):
                bad.append(f"RF != omega RM omega on p_{lam}, a={a}")
    return _check("identities: omega conjugation for CE/CF/RF", bad, cases)


def check_eerie_he(b: Bounds) -> Check:
    bad, cases = [], 0
    for k in range(1, b.k_max + 1):
        for lam, g in _p_span(b.identity_degree):
            cases += 2
            deg = g.degree()
            lhs1 = vertex.ch_column(k, g)
            rhs1 = SymFunc.zero()
            lhs2 = vertex.ce_column(k, g)
            rhs2 = SymFunc.zero()
            for mu in _parts_upto(deg, max_length=k):
                sign = -1 if sum(mu) % 2 else 1
                sk_m = skew(basis_element("m", mu), g)
                if not sk_m.is_zero:
                    rhs1 = rhs1 + sign * _ce_on_e(k, mu) * sk_m
                sk_f = skew(basis_element("f", mu), g)
                if not sk_f.is_zero:
                    rhs2 = rhs2 + sign * _ch_on_h(k, mu) * sk_f
            if lhs1 != rhs1:
                bad.append(f"CH != sum CE(e) m-skew at k={k}, p_{lam}")
            if lhs2 != rhs2:
                bad.append(f"CE != sum CH(h) f-skew at k={k}, p_{lam}")
    return _check("identities: paired h/e column-adder relation", bad, cases)


def check_eerie_cm(b: Bounds) -> Check:
    bad, cases = [], 0
    for a in range(1, b.a_max + 1):
        for k in range(1, b.k_max + 1):
            for lam, g in _p_span(b.identity_degree):
                cases += 2
                deg = g.degree()
                lhs1 = vertex.cm_column(a, k, g)
                rhs1 = SymFunc.zero()
                lhs2 = vertex.rm_rows(a, k, g)
                rhs2 = SymFunc.zero()
                for mu in _parts_upto(deg):
                    sign = -1 if sum(mu) % 2 else 1
                    sk = skew(basis_element("e", mu), g)
                    if sk.is_zero:
                        continue
                    rhs1 = rhs1 + sign * _rmk_on_m(a, k, mu) * sk
                    rhs2 = rhs2 + sign * _cm_on_m(a, k, mu) * sk
                if lhs1 != rhs1:
                    bad.append(f"CM != sum RMK(m) e-skew at a={a}, k={k}, p_{lam}")
                if lhs2 != rhs2:
                    bad.append(f"RMK != sum CM(m) e-skew at a={a}, k={k}, p_{lam}")
    return _check("identities: paired monomial row/column relation", bad, cases)


def check_eerie_cs(b: Bounds) -> Check:
    bad, cases = [], 0
    for a in range(b.a_max + 1):
        for k in range(b.k_max + 1):
            for lam, g in _p_span(b.identity_degree):
                cases += 2
                deg = g.degree()
                lhs1 = vertex.rs_rows(a, k, g)
                rhs1 = SymFunc.zero()
                lhs2 = vertex.cs_column(a, k, g)
                rhs2 = SymFunc.zero()
                for mu in _parts_upto(deg):
                    sign = -1 if sum(mu) % 2 else 1
                    sk = skew(basis_element("s", conjugate(mu)), g)
                    if sk.is_zero:
                        continue
                    rhs1 = rhs1 + sign * _cs_on_s(a, k, mu) * sk
                    rhs2 = rhs2 + sign * _rsk_on_s(a, k, mu) * sk
                if lhs1 != rhs1:
                    bad.append(f"RSK != sum CS(s) s'-skew at a={a}, k={k}, p_{lam}")
                if lhs2 != rhs2:
                    bad.append(f"CS != sum RSK(s) s'-skew at a={a}, k={k}, p_{lam}")
    return _check("identities: paired Schur row/column relation", bad, cases)


def check_cs_everything(b: Bounds) -> Check:
    bad, cases = [], 0

    def assignment(a: int, k: int) -> Callable[[Partition], SymFunc]:
        def image(mu: Partition) -> SymFunc:
            col = add_columns(mu, a, k)
            return SymFunc.zero() if col is None else basis_element("s", col)

        return image

    for a in range(b.a_max + 1):
        for k in range(b.k_max + 1):
            for lam, g in _p_span(b.identity_degree):
                cases += 1
                if vertex.cs_column(a, k, g) != vertex.everything_op(
                    "s", assignment(a, k), g
                ):
                    bad.append(f"CS != everything-operator at a={a}, k={k}, p_{lam}")
    return _check("identities: Schur column adder via everything operator", bad, cases)


def check_tx_forms(b: Bounds) -> Check:
    bad, cases = [], 0
    for base in BASES:
        for lam, g in _basis_upto(base, b.degree):
            want = vertex.t_minus_x(g)
            for pair in ("ss", "hm", "ef", "pz"):
                cases += 1
                if vertex.t_minus_x_sum(g, pair) != want:
                    bad.append(f"constant-term sum form ({pair}) on {base}_{lam}")
    return _check("identities: constant-term operator sum forms", bad, cases)


def check_schur_skew_h1n(b: Bounds) -> Check:
    bad, cases = [], 0
    top = min(max(b.identity_degree, 7), 7)
    for n in range(top + 1):
        h1n = hn(1) ** n
        for d in range(n + 1):
            for lam in partitions_of(d):
                cases += 1
                got = skew(basis_element("s", lam), h1n)
                want = (
                    comb(n, d) * tableaux.syt_count(lam) * hn(1) ** (n - d)
                )
                if got != want:
                    bad.append(f"s_{lam}-skew of h_1^{n}")
    return _check("identities: Schur skew of h_1^n counts tableaux", bad, cases)


def check_power_commutation(b: Bounds) -> Check:
    bad, cases = [], 0
    n = b.identity_degree
    for mu, g in _p_span(n):
        for k in range(1, n + 1):
            for j in range(1, n + 1):
                cases += 1
                lhs = skew(pn(k), pn(j) * g) - pn(j) * skew(pn(k), g)
                want = k * g if k == j else SymFunc.zero()
                if lhs != want:
                    bad.append(f"p_{k}-skew / p_{j}-multiply commutator on p_{mu}")
    for mu, g in _p_span(n):
        for lam in _parts_upto(n):
            plam = basis_element("p", lam)
            for k in range(1, n + 1):
                cases += 1
                lhs = skew(plam, pn(k) * g)
                rhs = pn(k) * skew(plam, g)
                cnt = mult_count(lam, k)
                if cnt:
                    rhs = rhs + k * cnt * skew(
                        basis_element("p", remove_parts(lam, Partition((k,)))), g
                    )
                if lhs != rhs:
                    bad.append(f"p_lam-skew commutation at lam={lam}, k={k}, p_{mu}")
    return _check("ring: power skew/multiply commutation", bad, cases)


# ---------------------------------------------------------------------------
# tableaux application
# ---------------------------------------------------------------------------


def check_pairs_agreement(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(b.pairs_n + 1):
        for k in range(1, b.pairs_k + 1):
            cases += 1
            closed = tableaux.bounded_height_pairs(n, k, "closed")
            det = tableaux.bounded_height_pairs(n, k, "det")
            brute = tableaux.bounded_height_pairs(n, k, "brute")
            if not (closed == det == brute):
                bad.append(f"pair counts disagree at n={n}, k={k}: {closed},{det},{brute}")
    return _check("tableaux: closed/det/brute pair counts agree", bad, cases)


CATALAN_FIRST_ELEVEN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796)


def check_pairs_catalan(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(b.pairs_n + 1):
        cases += 1
        got = tableaux.bounded_height_pairs(n, 2, "closed")
        if got != tableaux.catalan(n):
            bad.append(f"height-2 count is not Catalan at n={n}")
        if n < len(CATALAN_FIRST_ELEVEN) and got != CATALAN_FIRST_ELEVEN[n]:
            bad.append(f"height-2 count differs from frozen Catalan value at n={n}")
    return _check("tableaux: height-2 pair counts are Catalan numbers", bad, cases)


def check_pairs_one_row(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(b.pairs_n + 1):
        cases += 1
        if tableaux.bounded_height_pairs(n, 1, "closed") != 1:
            bad.append(f"height-1 count != 1 at n={n}")
    return _check("tableaux: height-1 pair count is 1", bad, cases)


def check_pairs_saturation(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(min(b.pairs_n, 8) + 1):
        for k in range(n, n + 2):
            if k < 1:
                continue
            cases += 1
            if tableaux.bounded_height_pairs(n, k, "closed") != factorial(n):
                bad.append(f"unbounded-height count != n! at n={n}, k={k}")
    return _check("tableaux: pair count saturates at n!", bad, cases)


def check_schur_sum_lemma(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(b.lemma_n + 1):
        for k in range(1, b.lemma_k + 1):
            cases += 1
            formula = tableaux.bounded_height_schur_sum(n, k, "formula")
            operator = tableaux.bounded_height_schur_sum(n, k, "operator")
            direct = SymFunc.zero()
            for lam in partitions_of(n, max_length=k):
                direct = direct + tableaux.syt_count(lam) * basis_element("s", lam)
            if not (formula == operator == direct):
                bad.append(f"bounded-height Schur sum mismatch at n={n}, k={k}")
    return _check("tableaux: bounded-height Schur sum, three routes", bad, cases)


def check_rsform(b: Bounds) -> Check:
    bad, cases = [], 0
    for n in range(b.rsform_n + 1):
        for k in range(1, b.rsform_k + 1):
            cases += 1
            if tableaux.rs0_power_expansion(n, k) != vertex.rs_rows(0, k, hn(1) ** n):
                bad.append(f"width-zero power expansion mismatch at n={n}, k={k}")
    return _check("tableaux: width-zero Schur power expansion", bad, cases)


def check_theta(b: Bounds) -> Check:
    bad, cases = [], 0
    n = b.identity_degree
    for base in BASES:
        for d1 in range(n + 1):
            for lam1 in partitions_of(d1):
                g1 = basis_element(base, lam1)
                for d2 in range(n - d1 + 1):
                    for lam2 in partitions_of(d2):
                        cases += 1
                        g2 = basis_element(base, lam2)
                        if tableaux.theta(g1 * g2) != tableaux.theta(g1) * tableaux.theta(g2):
                            bad.append(f"theta not multiplicative at {base}, {lam1},{lam2}")
    for lam in _parts_upto(max(b.degree, 8)):
        cases += 1
        d = sum(lam)
        want = tableaux.UniPoly({d: Fraction(tableaux.syt_count(lam), factorial(d))})
        if tableaux.theta(basis_element("s", lam)) != want:
            bad.append(f"theta(s_{lam}) wrong")
    for nn in range(max(b.degree, 8) + 1):
        cases += 1
        if tableaux.theta(hn(nn)) != tableaux.UniPoly({nn: Fraction(1, factorial(nn))}):
            bad.append(f"theta(h_{nn}) wrong")
    return _check("tableaux: exponential specialization", bad, cases)


def check_syt_brute(b: Bounds) -> Check:
    bad, cases = [], 0
    for lam in _parts_upto(max(b.degree, 8)):
        cases += 1
        if tableaux.syt_count(lam) != tableaux.syt_count_brute(lam):
            bad.append(f"hook count != enumeration at {lam}")
    return _check("tableaux: hook-length count vs enumeration", bad, cases)


# ---------------------------------------------------------------------------
# polynomial oracle
# ---------------------------------------------------------------------------


def check_oracle_conversions(b: Bounds) -> Check:
    bad, cases = [], 0
    for base in BASES:
        for lam in _parts_upto(b.oracle_degree):
            cases += 1
            if not polyoracle.check_conversion(base, lam, b.oracle_vars):
                mismatch = polyoracle.first_mismatch(base, lam, b.oracle_vars)
                bad.append(f"conversion of {base}_{lam} off at monomial {mismatch}")
    return _check("oracle: basis conversions vs direct realizations", bad, cases)


def check_oracle_ring_hom(b: Bounds) -> Check:
    bad, cases = [], 0
    v = b.oracle_vars
    n = b.oracle_degree
    for base in BASES:
        for d1 in range(n + 1):
            for lam1 in partitions_of(d1):
                g1 = basis_element(base, lam1)
                r1 = polyoracle.realize_symfunc(g1, v)
                for d2 in range(n - d1 + 1):
                    for lam2 in partitions_of(d2):
                        cases += 1
                        g2 = basis_element(base, lam2)
                        lhs = polyoracle.realize_symfunc(g1 * g2, v)
                        if lhs != r1 * polyoracle.realize_symfunc(g2, v):
                            bad.append(f"realization not multiplicative at {base}, {lam1},{lam2}")
    return _check("oracle: realization is a ring homomorphism", bad, cases)


def check_oracle_symmetry(b: Bounds) -> Check:
    bad, cases = [], 0
    v = min(b.oracle_vars, 5)
    for base in BASES:
        for lam in _parts_upto(min(b.oracle_degree, 5)):
            poly = polyoracle.realize(base, lam, v)
            for i in range(v - 1):
                cases += 1
                if poly.swap_vars(i, i + 1) != poly:
                    bad.append(f"realization of {base}_{lam} not symmetric in x{i+1},x{i+2}")
    return _check("oracle: realizations are symmetric polynomials", bad, cases)


# ---------------------------------------------------------------------------
# command-line surface
# ---------------------------------------------------------------------------


def _run_cli(argv: list[str]) -> tuple[int, str, str]:
    import contextlib
    import io

    from . import cli

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def check_cli_examples(b: Bounds) -> Check:
    bad, cases = [], 0

    cases += 1
    code, out, _ = _run_cli(["expand", "--basis", "h", "e[2]"])
    if code != 0 or out != "h[1,1] - h[2]\n":
        bad.append(f"expand example produced {out!r} (exit {code})")

    cases += 1
    code, out, _ = _run_cli(["count", "--n", "4", "--k", "2"])
    if code != 0 or out != "14\n":
        bad.append(f"count example produced {out!r} (exit {code})")

    cases += 1
    code, out, _ = _run_cli(
        ["apply", "--op", "CS", "--a", "0", "--k", "2", "h[1]^4", "--basis", "s"]
    )
    want = SymFunc.zero()
    for lam in partitions_of(4, max_length=2):
        want = want + tableaux.syt_count(lam) * basis_element("s", lam)
    if code != 0 or out != expand(want, "s").to_text() + "\n":
        bad.append(f"apply example produced {out!r} (exit {code})")

    cases += 1
    code, out, _ = _run_cli(["verify", "--suite", "partitions"])
    if code != 0:
        bad.append(f"verify --suite partitions exited {code}")

    cases += 1
    code, _, err = _run_cli(["expand", "h[2,"])
    if code != 2 or "position" not in err:
        bad.append(f"parse error should exit 2 with a position, got {code}, {err!r}")

    cases += 1
    out1 = _run_cli(["expand", "--basis", "s", "--json", "h[2]*e[2]"])
    out2 = _run_cli(["expand", "--basis", "s", "--json", "h[2]*e[2]"])
    if out1 != out2 or out1[0] != 0:
        bad.append("JSON output not byte-stable across runs")

    return _check("cli: documented example invocations", bad, cases)


def check_cli_roundtrip(b: Bounds) -> Check:
    from .expressions import parse_expression

    bad, cases = [], 0
    for base in BASES:
        for lam, g in _basis_upto(base, min(b.degree, 6)):
            for dst in BASES:
                cases += 1
                text = expand(g, dst).to_text()
                if parse_expression(text) != g:
                    bad.append(f"print/parse roundtrip of {base}_{lam} via {dst}")
    return _check("cli: expansion text parses back to the same function", bad, cases)


def check_cli_default_verify(b: Bounds) -> Check:
    code, out, _ = _run_cli(["verify"])
    bad = [] if code == 0 else [f"default verify exited {code}:\n{out}"]
    return _check("cli: default verify run exits 0", bad, 1)


# ---------------------------------------------------------------------------
# suite registry and runner
# ---------------------------------------------------------------------------

SUITES: dict[str, list[Callable[[Bounds], Check]]] = {
    "partitions": [
        check_conjugate_involution,
        check_add_columns_size,
        check_insert_remove_roundtrip,
        check_straighten_permutations,
        check_partition_counts,
        check_composition_counts,
    ],
    "ring": [
        check_dual_pairings,
        check_omega,
        check_expand_roundtrip,
        check_jacobi_trudi,
        check_alternating_eh,
        check_e_to_h,
        check_alternating_r_sum,
        check_skew_adjointness,
        check_coproduct_rules,
        check_power_commutation,
    ],
    "lemmas": [
        check_h_skew_commutation,
        check_e_skew_commutation,
        check_monomial_product_rule,
    ],
    "actions": [
        check_cp_action,
        check_ch_ce_action,
        check_rm_family_action,
        check_rf_action,
        check_cm_cf_action,
        check_rs_action,
        check_cs_action,
    ],
    "identities": [
        check_rs_anticommutation,
        check_rsk_vs_composition,
        check_rm1_power_law,
        check_rm_commutativity,
        check_omega_conjugation,
        check_eerie_he,
        check_eerie_cm,
        check_eerie_cs,
        check_cs_everything,
        check_tx_forms,
        check_schur_skew_h1n,
    ],
    "tableaux": [
        check_pairs_agreement,
        check_pairs_catalan,
        check_pairs_one_row,
        check_pairs_saturation,
        check_schur_sum_lemma,
        check_rsform,
        check_theta,
        check_syt_brute,
    ],
    "oracle": [
        check_oracle_conversions,
        check_oracle_ring_hom,
        check_oracle_symmetry,
    ],
    "cli": [
        check_cli_examples,
        check_cli_roundtrip,
    ],
}

DEFAULT_SUITES = (
    "partitions",
    "ring",
    "lemmas",
    "actions",
    "identities",
    "tableaux",
    "oracle",
    "cli",
)

# The acceptance gate: criterion number, description, checks, bounds.
# Everything is exact equality; the bounds are part of the contract.
ACCEPTANCE: tuple[tuple[int, str, tuple[Callable[[Bounds], Check], ...], Bounds], ...] = (
    (
        1,
        "vertex-operator action laws, |lam| <= 8, a <= 3, k <= 4",
        tuple(SUITES["actions"]),
        Bounds(degree=8, a_max=3, k_max=4),
    ),
    (
        2,
        "operator identities on basis elements of degree <= 6",
        tuple(SUITES["identities"]),
        Bounds(degree=8, identity_degree=6, a_max=3, k_max=4),
    ),
    (
        3,
        "core-ring properties: pairing tables to degree 8, identities to total degree 6",
        tuple(SUITES["ring"] + SUITES["lemmas"]),
        Bounds(degree=8, identity_degree=6, a_max=3, k_max=4),
    ),
    (
        4,
        "bounded-height pair counts agree and hit Catalan/1/n!, n <= 10, k <= 5",
        (
            check_pairs_agreement,
            check_pairs_catalan,
            check_pairs_one_row,
            check_pairs_saturation,
        ),
        Bounds(pairs_n=10, pairs_k=5),
    ),
    (
        5,
        "bounded-height Schur sum (n <= 8, k <= 4) and width-zero expansion (n <= 6, k <= 3)",
        (check_schur_sum_lemma, check_rsform),
        Bounds(lemma_n=8, lemma_k=4, rsform_n=6, rsform_k=3),
    ),
    (
        6,
        "polynomial-oracle sweep, all bases, degree <= 6 in six variables",
        tuple(SUITES["oracle"]),
        Bounds(oracle_degree=6, oracle_vars=6),
    ),
    (
        7,
        "command-line examples byte-exact and default verify exits 0",
        (check_cli_examples, check_cli_roundtrip, check_cli_default_verify),
        Bounds(degree=6),
    ),
)


def run_checks(
    checks: Iterable[Callable[[Bounds], Check]], bounds: Bounds
) -> tuple[list[Check], bool]:
    results = [fn(bounds) for fn in checks]
    return results, all(not failures for _, _, failures in results)


def run_suites(
    names: Iterable[str], bounds: Bounds, out: TextIO = sys.stdout
) -> bool:
    ok = True
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        results, suite_ok = run_checks(SUITES[name], bounds)
        for check_name, cases, failures in results:
            if failures:
                out.write(f"FAIL {check_name} [{cases} cases]\n")
                for msg in failures[:5]:
                    out.write(f"     {msg}\n")
                if len(failures) > 5:
                    out.write(f"     ... and {len(failures) - 5} more\n")
            else:
                out.write(f"ok   {check_name} [{cases} cases]\n")
        ok = ok and suite_ok
    return ok
