"""Standard Young tableaux counting and bounded-height pair enumeration.

The headline quantity is

    pairs(n, k) = sum of f_lam^2 over partitions lam of n with at most k rows,

the number of pairs of same-shape standard tableaux of height <= k.  Three
independent routes compute it:

  closed  a composition-indexed multinomial/Vandermonde formula,
  det     the exponential specialization applied to the bounded-height Schur
          sum, reading off n! times the x^n coefficient,
  brute   literal enumeration: square the hook-length count per shape.

The bounded-height Schur generating function itself also has two routes
(direct composition-indexed determinant sum, or the Schur column adder at
width zero), which the test suite plays against each other.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping

from .partitions import (
    Composition,
    Partition,
    compositions_of,
    conjugate,
    partitions_of,
)
from .ring import SymFunc, hn, jacobi_trudi
from .vertex import cs_column

ONE_ROW_METHODS = ("closed", "det", "brute")


class UniPoly:
    """A polynomial in one variable with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction | int] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for exp, c in coeffs.items():
                if exp < 0:
                    raise ValueError("exponents must be non-negative")
                c = Fraction(c)
                if c:
                    clean[exp] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls({0: 1})

    def coefficient(self, exp: int) -> Fraction:
        return self._coeffs.get(exp, Fraction(0))

    def items(self):
        return iter(sorted(self._coeffs.items()))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        return max(self._coeffs, default=0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                del out[exp]
        res = UniPoly.__new__(UniPoly)
        res._coeffs = out
        return res

    def __mul__(self, other: "UniPoly | Fraction | int") -> "UniPoly":
        out: dict[int, Fraction] = {}
        if isinstance(other, UniPoly):
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    v = out.get(e1 + e2, 0) + c1 * c2
                    if v:
                        out[e1 + e2] = v
                    else:
                        del out[e1 + e2]
        else:
            c = Fraction(other)
            if c:
                out = {e: v * c for e, v in self._coeffs.items()}
        res = UniPoly.__new__(UniPoly)
        res._coeffs = out
        return res

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(
            f"{c}" if e == 0 else (f"{c}*x^{e}" if c != 1 else f"x^{e}")
            for e, c in sorted(self._coeffs.items())
        )


def syt_count(lam: Partition) -> int:
    """Number of standard tableaux of shape ``lam``, by hook lengths."""
    lam = Partition(lam)
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row + conj[j] - i - j - 1
    count, rem = divmod(math.factorial(n), hooks)
    assert rem == 0, f"hook product does not divide {n}! for shape {lam}"
    return count


def syt_count_brute(lam: Partition) -> int:
    """Count standard tableaux by backtracking over valid insertion corners.

    Exponential; test oracle only.
    """
    lam = Partition(lam)
    n = sum(lam)
    fills = [0] * len(lam)  # cells already filled per row

    def place(step: int) -> int:
        if step > n:
            return 1
        total = 0
        for i, row in enumerate(lam):
            if fills[i] < row and (i == 0 or fills[i - 1] > fills[i]):
                fills[i] += 1
                total += place(step + 1)
                fills[i] -= 1
        return total

    return place(1)


def theta(g: SymFunc) -> UniPoly:
    """The exponential specialization: the algebra map with h_n -> x^n / n!.

    In power-sum coordinates it keeps exactly the all-ones indices, sending
    p_{1^m} to x^m and every other power-sum monomial to zero; a Schur
    function s_lam maps to f_lam x^{|lam|} / |lam|!.
    """
    coeffs: dict[int, Fraction] = {}
    for lam, c in g.items():
        if all(part == 1 for part in lam):
            exp = len(lam)
            v = coeffs.get(exp, 0) + c
            if v:
                coeffs[exp] = v
            else:
                del coeffs[exp]
    poly = UniPoly.__new__(UniPoly)
    poly._coeffs = coeffs
    return poly


def _multinomial(n: int, parts: Composition) -> int:
    out = math.factorial(n)
    for s in parts:
        out //= math.factorial(s)
    return out


def bounded_height_schur_sum(n: int, k: int, method: str = "formula") -> SymFunc:
    """sum of f_lam * s_lam over partitions lam of n with l(lam) <= k.

    method="formula": the composition-indexed determinant sum
        sum over s in compositions of n into k parts of
            multinomial(n; s) * det|h_{s_j - j + i}|;
    method="operator": apply the width-zero Schur column adder to h_1^n.
    """
    if method == "operator":
        return cs_column(0, k, hn(1) ** n)
    if method != "formula":
        raise ValueError("method must be 'formula' or 'operator'")
    out = SymFunc.zero()
    for s in compositions_of(n, k):
        det = jacobi_trudi(s)
        if not det.is_zero:
            out = out + _multinomial(n, s) * det
    return out


def rs0_power_expansion(n: int, k: int) -> SymFunc:
    """Expansion of the k-th power of the width-zero Schur row adder on h_1^n:

        sum over 0 <= l <= n, s a composition of n - l into k parts of
            (-1)^{n-l} * multinomial(n; l, s) * h_1^l * det|h_{s_j - j + i}|.

    Must agree with rs_rows(0, k, h_1^n).
    """
    out = SymFunc.zero()
    h1 = hn(1)
    for l in range(n + 1):
        sign = -1 if (n - l) % 2 else 1
        lead = h1 ** l
        for s in compositions_of(n - l, k):
            det = jacobi_trudi(s)
            if det.is_zero:
                continue
            coeff = sign * _multinomial(n, (l,) + tuple(s))
            out = out + coeff * lead * det
    return out


def bounded_height_pairs(n: int, k: int, method: str = "brute") -> int:
    """Number of pairs of same-shape standard tableaux with at most k rows.

    closed: sum over compositions s of n into k parts of
        multinomial(n; s) * prod_{i<j} (s_j + j - (s_i + i))
                          / prod_i (s_i + i - 1)!  * n!
    det:    n! times the x^n coefficient of theta(bounded_height_schur_sum).
    brute:  sum the squared hook-length counts directly.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if method == "brute":
        return sum(syt_count(lam) ** 2 for lam in partitions_of(n, max_length=k))
    if method == "det":
        poly = theta(bounded_height_schur_sum(n, k, method="formula"))
        value = poly.coefficient(n) * math.factorial(n)
        assert value.denominator == 1, "pair count came out non-integral"
        return int(value)
    if method != "closed":
        raise ValueError("method must be one of 'closed', 'det', 'brute'")
    total = Fraction(0)
    for s, term in _closed_form_terms(n, k):
        total += term
    assert total.denominator == 1, "pair count came out non-integral"
    return int(total)


def _closed_form_terms(n: int, k: int) -> Iterator[tuple[Composition, Fraction]]:
    """Per-composition contributions of the closed-form pair count."""
    nfact = math.factorial(n)
    for s in compositions_of(n, k):
        vandermonde = 1
        for i in range(k):
            for j in range(i + 1, k):
                vandermonde *= (s[j] + j + 1) - (s[i] + i + 1)
        if not vandermonde:
            yield s, Fraction(0)
            continue
        denom = 1
        for i in range(k):
            denom *= math.factorial(s[i] + i)
        yield s, Fraction(_multinomial(n, s) * vandermonde * nfact, denom)


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n + 1)."""
    return math.comb(2 * n, n) // (n + 1)
