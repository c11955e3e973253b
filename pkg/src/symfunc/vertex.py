"""Vertex operators: row and column adders for the six classical bases.

Each operator is a linear map written as a sum of terms (multiply by a fixed
symmetric function) o (skew by another).  The defining sums are infinite but
a skew by anything of degree greater than deg(input) annihilates, so every
application truncates the index partition to |lam| <= deg(input).  All
arithmetic is exact.

Row adders insert one part of size a into the indexing partition; column
adders add a to each of its first k parts.  The action laws, in brief:

  cp_column(a, k):   p_mu -> p_{mu + a^k}            for l(mu) < k
  ch_column(k):      h_lam -> h_{lam + 1^k}          for l(lam) <= k
  ce_column(k):      e_lam -> e_{lam + 1^k}          for l(lam) <= k
  rm_row_one(a):     m_lam -> (1 + n_a(lam)) m_{lam + (a)}       (a >= 1)
  rm_rows(a, k):     m_lam -> C(n_a(lam) + k, k) m_{lam + (a^k)} (a >= 1)
  rm_row(a):         m_lam -> m_{lam + (a)}                      (a >= 1)
  rf_row(a):         f_lam -> f_{lam + (a)}                      (a >= 1)
  cm_column(a, k):   m_lam -> m_{lam + a^k}  (0 when l(lam) > k)
  cf_column(a, k):   f_lam -> f_{lam + a^k}  (0 when l(lam) > k)
  rs_row(a):         s_lam -> s_{lam + (a)} for a >= lam_1, else the
                     straightened signed Schur function or 0
  rs_rows(a, k):     the k-th power of rs_row(a) in closed form
  cs_column(a, k):   s_lam -> s_{lam + a^k}  (0 when l(lam) > k)
  t_minus_x:         constant-term extraction
  everything_op:     b_mu -> assignment(mu), linearly

Here lam + (a) inserts a part and lam + a^k adds a column of height k.  No
coefficient normalization of the row adders' action survives at a = 0, so
rm_row_one, rm_row and rf_row reject it (rm_rows still evaluates its
defining sum there).  The column adders handle a = 0: cm/cf through their
everything-operator reduction, which projects the basis expansion onto
terms of length <= k, and cs directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Optional, Union

from .partitions import (
    Partition,
    add_columns,
    binomial,
    conjugate,
    insert_parts,
    mult_count,
    partitions_of,
    z_value,
)
from .ring import SymFunc, basis_element, en, expand, hn, omega, pn, skew


def _indices(max_size: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    for n in range(max_size + 1):
        yield from partitions_of(n, max_length=max_length)


def _sign(lam: Partition) -> int:
    return -1 if sum(lam) % 2 else 1


def cp_column(a: int, k: int, g: SymFunc) -> SymFunc:
    """Add a column a^k to power-sum indices:

        sum over l(lam) <= k of  p_a^{k - l(lam)}
            * prod_i (p_{lam_i + a} - p_{lam_i} p_a) * p_lam^perp / z_lam.

    Sends p_mu to p_{mu + a^k} whenever l(mu) < k; the action at l(mu) = k
    and beyond is whatever the sum produces.  k = 0 is the identity, and so
    is a = 0 (setting p_0 = 1 collapses every term but lam = empty).
    """
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    if k == 0 or a == 0 or g.is_zero:
        return g
    out = SymFunc.zero()
    deg = g.degree()
    for lam in _indices(deg, max_length=k):
        skewed = skew(basis_element("p", lam), g)
        if skewed.is_zero:
            continue
        coeff = pn(a) ** (k - len(lam))
        for part in lam:
            coeff = coeff * (pn(part + a) - pn(part) * pn(a))
        out = out + coeff * skewed * Fraction(1, z_value(lam))
    return out


def ch_column(k: int, g: SymFunc) -> SymFunc:
    """Add a column 1^k to homogeneous indices:
    sum over l(lam) <= k of (-1)^{|lam|} e_{lam + 1^k} m_lam^perp."""
    if k < 1:
        raise ValueError("k must be positive")
    out = SymFunc.zero()
    for lam in _indices(g.degree(), max_length=k):
        skewed = skew(basis_element("m", lam), g)
        if skewed.is_zero:
            continue
        col = add_columns(lam, 1, k)
        out = out + _sign(lam) * basis_element("e", col) * skewed
    return out


def ce_column(k: int, g: SymFunc) -> SymFunc:
    """Add a column 1^k to elementary indices:
    sum over l(lam) <= k of (-1)^{|lam|} h_{lam + 1^k} f_lam^perp.

    Equal to omega o ch_column(k) o omega as an operator.
    """
    if k < 1:
        raise ValueError("k must be positive")
    out = SymFunc.zero()
    for lam in _indices(g.degree(), max_length=k):
        skewed = skew(basis_element("f", lam), g)
        if skewed.is_zero:
            continue
        col = add_columns(lam, 1, k)
        out = out + _sign(lam) * basis_element("h", col) * skewed
    return out


def rm_row_one(a: int, g: SymFunc) -> SymFunc:
    """Coefficient-carrying monomial row adder:
    sum over i >= 0 of (-1)^i m_{(a+i)} e_i^perp, for a >= 1.

    Sends m_lam to (1 + n_a(lam)) m_{lam + (a)}.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    out = SymFunc.zero()
    for i in range(g.degree() + 1):
        skewed = skew(en(i), g)
        if skewed.is_zero:
            continue
        term = basis_element("m", Partition((a + i,))) * skewed
        out = out + (term if i % 2 == 0 else -term)
    return out


def rm_rows(a: int, k: int, g: SymFunc) -> SymFunc:
    """k-row monomial adder:
    sum over l(lam) <= k of (-1)^{|lam|} m_{lam + a^k} e_lam^perp.

    For a >= 1 it sends m_lam to C(n_a(lam) + k, k) m_{lam + (a^k)} and
    equals rm_row_one(a)^k / k!.  k = 0 is the identity.  The sum is still
    defined at a = 0 (each m_{lam + 0^k} is just m_lam), but no coefficient
    normalization of the action survives there, so the law above is stated
    for a >= 1 only.
    """
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    if k == 0:
        return g
    out = SymFunc.zero()
    for lam in _indices(g.degree(), max_length=k):
        skewed = skew(basis_element("e", lam), g)
        if skewed.is_zero:
            continue
        col = add_columns(lam, a, k)
        out = out + _sign(lam) * basis_element("m", col) * skewed
    return out


def rm_row(a: int, g: SymFunc) -> SymFunc:
    """Monomial row adder without coefficient, for a >= 1:

        sum over k >= 0, l(lam) <= k + 1 of
            (-1)^{|lam| + k} m_{lam + a^{k+1}} e_lam^perp (h_a^k)^perp.

    Sends m_lam to m_{lam + (a)}.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    out = SymFunc.zero()
    deg = g.degree()
    k = 0
    while a * k <= deg:
        inner = skew(basis_element("h", Partition((a,) * k)), g)
        if not inner.is_zero:
            for lam in _indices(deg - a * k, max_length=k + 1):
                skewed = skew(basis_element("e", lam), inner)
                if skewed.is_zero:
                    continue
                col = add_columns(lam, a, k + 1)
                term = basis_element("m", col) * skewed
                out = out + (term if (sum(lam) + k) % 2 == 0 else -term)
        k += 1
    return out


def rf_row(a: int, g: SymFunc) -> SymFunc:
    """Forgotten row adder, for a >= 1:

        sum over k >= 0, l(lam) <= k + 1 of
            (-1)^{|lam| + k} f_{lam + a^{k+1}} h_lam^perp (e_a^k)^perp.

    Sends f_lam to f_{lam + (a)}; equals omega o rm_row(a) o omega.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    out = SymFunc.zero()
    deg = g.degree()
    k = 0
    while a * k <= deg:
        inner = skew(basis_element("e", Partition((a,) * k)), g)
        if not inner.is_zero:
            for lam in _indices(deg - a * k, max_length=k + 1):
                skewed = skew(basis_element("h", lam), inner)
                if skewed.is_zero:
                    continue
                col = add_columns(lam, a, k + 1)
                term = basis_element("f", col) * skewed
                out = out + (term if (sum(lam) + k) % 2 == 0 else -term)
        k += 1
    return out


def cm_column(a: int, k: int, g: SymFunc) -> SymFunc:
    """Column adder for monomial indices:

        sum over lam of (-1)^{|lam|} C(n_a(lam) + k, k) m_{lam + (a^k)} e_lam^perp

    for a >= 1.  Sends m_lam to m_{lam + a^k} when l(lam) <= k and to 0
    otherwise.  At a = 0 the displayed coefficient has no consistent
    reading, but the everything-operator construction this sum reduces from
    still applies, and there it collapses to projecting the monomial
    expansion onto terms of length <= k; that is how a = 0 is computed.
    """
    if a < 0 or k < 1:
        raise ValueError("need a >= 0 and k >= 1")
    if a == 0:
        kept = {
            mu: c for mu, c in expand(g, "m").terms.items() if len(mu) <= k
        }
        out = SymFunc.zero()
        for mu, c in kept.items():
            out = out + c * basis_element("m", mu)
        return out
    out = SymFunc.zero()
    for lam in _indices(g.degree()):
        skewed = skew(basis_element("e", lam), g)
        if skewed.is_zero:
            continue
        coeff = binomial(mult_count(lam, a) + k, k)
        shape = insert_parts(lam, Partition((a,) * k))
        out = out + _sign(lam) * coeff * basis_element("m", shape) * skewed
    return out


def cf_column(a: int, k: int, g: SymFunc) -> SymFunc:
    """Column adder for forgotten indices, mirror of cm_column:

        sum over lam of (-1)^{|lam|} C(n_a(lam) + k, k) f_{lam + (a^k)} h_lam^perp

    for a >= 1; a = 0 projects the forgotten expansion onto length <= k.
    Sends f_lam to f_{lam + a^k} (0 for l(lam) > k); equals
    omega o cm_column(a, k) o omega.
    """
    if a < 0 or k < 1:
        raise ValueError("need a >= 0 and k >= 1")
    if a == 0:
        kept = {
            mu: c for mu, c in expand(g, "f").terms.items() if len(mu) <= k
        }
        out = SymFunc.zero()
        for mu, c in kept.items():
            out = out + c * basis_element("f", mu)
        return out
    out = SymFunc.zero()
    for lam in _indices(g.degree()):
        skewed = skew(basis_element("h", lam), g)
        if skewed.is_zero:
            continue
        coeff = binomial(mult_count(lam, a) + k, k)
        shape = insert_parts(lam, Partition((a,) * k))
        out = out + _sign(lam) * coeff * basis_element("f", shape) * skewed
    return out


def rs_row(a: int, g: SymFunc) -> SymFunc:
    """Schur row adder (Bernstein operator):
    sum over i >= 0 of (-1)^i h_{a+i} e_i^perp.

    Sends s_lam to s_{lam + (a)} when a >= lam_1; for smaller a the result
    is the straightened signed Schur function (possibly 0), matching
    ``straighten((a,) + lam)``.  The sum makes sense for any integer a
    (h of negative index is 0); the action law is stated for a >= 0.
    """
    out = SymFunc.zero()
    for i in range(g.degree() + 1):
        if a + i < 0:
            continue
        skewed = skew(en(i), g)
        if skewed.is_zero:
            continue
        term = hn(a + i) * skewed
        out = out + (term if i % 2 == 0 else -term)
    return out


def rs_rows(a: int, k: int, g: SymFunc) -> SymFunc:
    """Closed form of the k-th power of the Schur row adder:
    sum over l(lam) <= k of (-1)^{|lam|} s_{lam + a^k} s_{lam'}^perp."""
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    if k == 0:
        return g
    out = SymFunc.zero()
    for lam in _indices(g.degree(), max_length=k):
        skewed = skew(basis_element("s", conjugate(lam)), g)
        if skewed.is_zero:
            continue
        col = add_columns(lam, a, k)
        out = out + _sign(lam) * basis_element("s", col) * skewed
    return out


@lru_cache(maxsize=None)
def _rs_rows_on_schur(a: int, k: int, lam: Partition) -> SymFunc:
    return rs_rows(a, k, basis_element("s", lam))


def cs_column(a: int, k: int, g: SymFunc) -> SymFunc:
    """Column adder for Schur indices:

        sum over lam of (-1)^{|lam|} (rs_rows(a, k) s_lam) s_{lam'}^perp.

    Sends s_lam to s_{lam + a^k} when l(lam) <= k and to 0 when l(lam) > k.
    With a = 0 it therefore projects a Schur expansion onto shapes of at
    most k rows.  k = 0 reduces to constant-term extraction.
    """
    if a < 0 or k < 0:
        raise ValueError("a and k must be non-negative")
    out = SymFunc.zero()
    for lam in _indices(g.degree()):
        skewed = skew(basis_element("s", conjugate(lam)), g)
        if skewed.is_zero:
            continue
        image = _rs_rows_on_schur(a, k, lam)
        if image.is_zero:
            continue
        out = out + _sign(lam) * image * skewed
    return out


def t_minus_x(g: SymFunc) -> SymFunc:
    """Constant-term extraction (the degree-0 component of ``g``).

    This is what the operator sum over (-1)^{|lam|} s_lam s_{lam'}^perp
    evaluates to; see ``t_minus_x_sum`` for that form, kept as an oracle.
    """
    return g.homogeneous_part(0)


_TX_PAIRS = ("ss", "hm", "ef", "pz")


def t_minus_x_sum(g: SymFunc, pair: str = "ss") -> SymFunc:
    """Constant-term extraction via the operator sum
    sum over lam of (-1)^{|lam|} omega(a_lam) b_lam^perp
    for a chosen dual pair (a, b): "ss", "hm", "ef" or "pz"."""
    if pair not in _TX_PAIRS:
        raise ValueError(f"pair must be one of {_TX_PAIRS}")
    out = SymFunc.zero()
    for lam in _indices(g.degree()):
        if pair == "ss":
            mult, skew_by = basis_element("s", lam), basis_element("s", conjugate(lam))
        elif pair == "hm":
            mult, skew_by = basis_element("e", lam), basis_element("m", lam)
        elif pair == "ef":
            mult, skew_by = basis_element("h", lam), basis_element("f", lam)
        else:
            mult = omega(basis_element("p", lam)) * Fraction(1, z_value(lam))
            skew_by = basis_element("p", lam)
        skewed = skew(skew_by, g)
        if skewed.is_zero:
            continue
        out = out + _sign(lam) * mult * skewed
    return out


AssignmentLike = Union[Mapping[Partition, SymFunc], Callable[[Partition], SymFunc]]


def everything_op(b: str, assignment: AssignmentLike, g: SymFunc) -> SymFunc:
    """The operator sending the basis element b_mu to assignment(mu), applied
    linearly to ``g``.  Raises LookupError naming any partition present in
    the expansion of ``g`` for which the assignment is undefined."""
    expansion = expand(g, b)
    out = SymFunc.zero()
    for mu, c in expansion.terms.items():
        if callable(assignment):
            image = assignment(mu)
        else:
            try:
                image = assignment[mu]
            except KeyError:
                image = None
        if image is None:
            raise LookupError(f"assignment undefined for partition {mu}")
        out = out + c * image
    return out


# ---------------------------------------------------------------------------
# Named dispatch for the CLI.
# ---------------------------------------------------------------------------

# name -> (takes a, takes k)
OPERATOR_PARAMS: dict[str, tuple[bool, bool]] = {
    "CP": (True, True),
    "CH": (False, True),
    "CE": (False, True),
    "RM1": (True, False),
    "RMK": (True, True),
    "RM": (True, False),
    "RF": (True, False),
    "CM": (True, True),
    "CF": (True, True),
    "RS": (True, False),
    "RSK": (True, True),
    "CS": (True, True),
    "TX": (False, False),
    "EVERY": (False, False),
}


@dataclass(frozen=True)
class OperatorSpec:
    """A named operator with its width/height parameters."""

    name: str
    a: Optional[int] = None
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if self.name not in OPERATOR_PARAMS:
            raise ValueError(f"unknown operator {self.name!r}")
        takes_a, takes_k = OPERATOR_PARAMS[self.name]
        if takes_a and self.a is None:
            raise ValueError(f"operator {self.name} requires --a")
        if not takes_a and self.a is not None:
            raise ValueError(f"operator {self.name} takes no --a")
        if takes_k and self.k is None:
            raise ValueError(f"operator {self.name} requires --k")
        if not takes_k and self.k is not None:
            raise ValueError(f"operator {self.name} takes no --k")
        if (self.a is not None and self.a < 0) or (self.k is not None and self.k < 0):
            raise ValueError("operator parameters must be non-negative")


def apply_operator(
    spec: OperatorSpec, g: SymFunc, assignment: Optional[AssignmentLike] = None
) -> SymFunc:
    """Apply the operator named by ``spec`` to ``g``."""
    name, a, k = spec.name, spec.a, spec.k
    if name == "CP":
        return cp_column(a, k, g)
    if name == "CH":
        return ch_column(k, g)
    if name == "CE":
        return ce_column(k, g)
    if name == "RM1":
        return rm_row_one(a, g)
    if name == "RMK":
        return rm_rows(a, k, g)
    if name == "RM":
        return rm_row(a, g)
    if name == "RF":
        return rf_row(a, g)
    if name == "CM":
        return cm_column(a, k, g)
    if name == "CF":
        return cf_column(a, k, g)
    if name == "RS":
        return rs_row(a, g)
    if name == "RSK":
        return rs_rows(a, k, g)
    if name == "CS":
        return cs_column(a, k, g)
    if name == "TX":
        return t_minus_x(g)
    if name == "EVERY":
        if assignment is None:
            raise ValueError("EVERY requires an assignment")
        return everything_op("p", assignment, g)
    raise AssertionError(name)
