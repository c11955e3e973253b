"""The graded ring of symmetric functions over the rationals.

Every symmetric function is stored in power-sum coordinates: a SymFunc is a
finite map {partition -> nonzero Fraction} representing sum c_lam * p_lam.
In these coordinates the product is a multiset union of indices, the Hall
inner product is diagonal (<p_lam, p_mu> = z_lam * delta), the involution
omega is a sign flip, and skewing by p_k is the derivation k * d/dp_k, so
all operations are exact.

Six classical bases are supported, named by single letters:

  p  power sums            h  complete homogeneous   e  elementary
  s  Schur                 m  monomial               f  forgotten

h and e are multiplicative with the standard power-sum expansions; s comes
from the Jacobi-Trudi determinant over h; m is produced degree by degree by
solving the duality relation <m_lam, h_mu> = delta against power-sum
coordinates (f = omega m).  Conversions are cached per index, so repeated
use is cheap.  SymFunc values are immutable once built and all functions
are pure; concurrent readers are safe and cache refills are idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .partitions import (
    EMPTY,
    Partition,
    _wrap,
    partitions_of,
    z_value,
)

Scalar = Fraction
ScalarLike = Union[Fraction, int]

BASES = ("p", "m", "e", "h", "s", "f")

# Dual basis of each basis under the Hall inner product ("z" marks p/z_lam).
DUAL_BASIS = {"p": "z", "m": "h", "h": "m", "e": "f", "f": "e", "s": "s"}

_PDict = dict  # {Partition: Fraction}, no zero values


def _omega_sign(lam: tuple[int, ...]) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def _dict_add(dst: _PDict, src: Mapping, scale: Fraction = Fraction(1)) -> None:
    if not scale:
        return
    for lam, c in src.items():
        v = dst.get(lam, 0) + c * scale
        if v:
            dst[lam] = v
        else:
            dst.pop(lam, None)


def _dict_mul(a: Mapping, b: Mapping) -> _PDict:
    out: _PDict = {}
    for lam, ca in a.items():
        for mu, cb in b.items():
            key = _wrap(tuple(sorted(lam + mu, reverse=True)))
            v = out.get(key, 0) + ca * cb
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def _dict_skew_pk(k: int, d: Mapping) -> _PDict:
    # p_k^perp acting as k * d/dp_k on power-sum monomials.
    out: _PDict = {}
    for mu, c in d.items():
        n = mu.count(k)
        if n:
            i = mu.index(k)
            key = _wrap(mu[:i] + mu[i + 1 :])
            v = out.get(key, 0) + c * k * n
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def _dict_pair(a: Mapping, b: Mapping) -> Fraction:
    if len(a) > len(b):
        a, b = b, a
    total = Fraction(0)
    for lam, ca in a.items():
        cb = b.get(lam)
        if cb:
            total += ca * cb * z_value(lam)
    return total


class SymFunc:
    """A symmetric function in power-sum coordinates.  Immutable by contract."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, ScalarLike] | None = None):
        clean: _PDict = {}
        if terms:
            for lam, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[Partition(lam)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: _PDict) -> "SymFunc":
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw({EMPTY: Fraction(1)})

    def items(self) -> Iterator[tuple[Partition, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, lam: Iterable[int]) -> Fraction:
        return self._terms.get(Partition(lam), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Top degree present (0 for the zero function)."""
        return max((sum(lam) for lam in self._terms), default=0)

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self._terms.items() if sum(lam) == d})

    def constant_term(self) -> Fraction:
        return self._terms.get(EMPTY, Fraction(0))

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self._terms)
        _dict_add(out, other._terms)
        return SymFunc._raw(out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self._terms)
        _dict_add(out, other._terms, Fraction(-1))
        return SymFunc._raw(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({lam: -c for lam, c in self._terms.items()})

    def __mul__(self, other: Union["SymFunc", ScalarLike]) -> "SymFunc":
        if isinstance(other, SymFunc):
            return SymFunc._raw(_dict_mul(self._terms, other._terms))
        c = Fraction(other)
        if not c:
            return SymFunc.zero()
        return SymFunc._raw({lam: v * c for lam, v in self._terms.items()})

    def __rmul__(self, other: ScalarLike) -> "SymFunc":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "SymFunc":
        if n < 0:
            raise ValueError("negative power")
        out = SymFunc.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return expand(self, "p").to_text() if self._terms else "0"


def term_sort_key(lam: Partition) -> tuple[int, tuple[int, ...]]:
    """Canonical display order: by degree, then lexicographically by parts."""
    return (sum(lam), tuple(lam))


@dataclass(frozen=True)
class BasisExpansion:
    """A symmetric function written in one named basis."""

    basis: str
    terms: Mapping[Partition, Fraction] = field(default_factory=dict)

    def sorted_terms(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: term_sort_key(kv[0]))

    def to_symfunc(self) -> SymFunc:
        out: _PDict = {}
        for lam, c in self.terms.items():
            _dict_add(out, _basis_p(self.basis, lam), c)
        return SymFunc._raw(out)

    def to_text(self) -> str:
        """Render in the expression grammar, e.g. ``3/2*s[2,1] - p[3]``."""
        parts = []
        for lam, c in self.sorted_terms():
            mag = c if c > 0 else -c
            if not lam:
                body = str(mag)
            elif mag == 1:
                body = f"{self.basis}{lam}"
            else:
                body = f"{mag}*{self.basis}{lam}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{' + ' if c > 0 else ' - '}{body}")
        return "".join(parts) if parts else "0"

    def to_json_obj(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": str(c)} for lam, c in self.sorted_terms()
            ],
        }

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BasisExpansion):
            return self.basis == other.basis and dict(self.terms) == dict(other.terms)
        return NotImplemented


# ---------------------------------------------------------------------------
# Basis conversions into power-sum coordinates (raw dicts, cached & shared).
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _hn_p(n: int) -> _PDict:
    # h_n = sum over mu |- n of p_mu / z_mu
    if n == 0:
        return {EMPTY: Fraction(1)}
    return {mu: Fraction(1, z_value(mu)) for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def _en_p(n: int) -> _PDict:
    # e_n = sum over mu |- n of (-1)^{n - l(mu)} p_mu / z_mu
    if n == 0:
        return {EMPTY: Fraction(1)}
    return {
        mu: Fraction(-1 if (n - len(mu)) % 2 else 1, z_value(mu)) for mu in partitions_of(n)
    }


@lru_cache(maxsize=None)
def _h_p(lam: Partition) -> _PDict:
    if not lam:
        return {EMPTY: Fraction(1)}
    return _dict_mul(_hn_p(lam[0]), _h_p(_wrap(lam[1:])))


@lru_cache(maxsize=None)
def _e_p(lam: Partition) -> _PDict:
    if not lam:
        return {EMPTY: Fraction(1)}
    return _dict_mul(_en_p(lam[0]), _e_p(_wrap(lam[1:])))


def _jt_dp(seq: tuple[int, ...]) -> _PDict:
    """det|h_{seq_j - j + i}| for 1 <= i, j <= len(seq), by Laplace expansion
    along the last used row with memoization over column subsets."""
    size = len(seq)
    if size == 0:
        return {EMPTY: Fraction(1)}
    dets: dict[int, _PDict] = {0: {EMPTY: Fraction(1)}}
    for mask in sorted(range(1, 1 << size), key=lambda m: m.bit_count()):
        rows = mask.bit_count()
        total: _PDict = {}
        rank = 0
        for j in range(size):
            if not (mask >> j) & 1:
                continue
            rank += 1
            idx = seq[j] - (j + 1) + rows
            if idx < 0:
                continue
            sub = dets[mask ^ (1 << j)]
            sign = Fraction(1 if (rows + rank) % 2 == 0 else -1)
            if idx == 0:
                _dict_add(total, sub, sign)
            else:
                _dict_add(total, _dict_mul(_hn_p(idx), sub), sign)
        dets[mask] = total
    return dets[(1 << size) - 1]


def jacobi_trudi(seq: Iterable[int]) -> "SymFunc":
    """The determinant det|h_{seq_j - j + i}| as a symmetric function.

    On a partition this is the Schur function; an arbitrary integer sequence
    straightens to a signed Schur function or vanishes.
    """
    return SymFunc._raw(_jt_dp(tuple(seq)))


@lru_cache(maxsize=None)
def _s_p(lam: Partition) -> _PDict:
    # Schur function via the Jacobi-Trudi determinant over h.
    return _jt_dp(tuple(lam))


@lru_cache(maxsize=None)
def _pairing_rows(n: int):
    """For degree n: partitions ordered with length ascending, and for each
    mu the row {nu: <h_mu, p_nu>}.  A nonzero entry forces nu to refine mu,
    so the rows are triangular in this order."""
    order = sorted(partitions_of(n), key=len)
    rows = [{nu: c * z_value(nu) for nu, c in _h_p(mu).items()} for mu in order]
    return order, rows


@lru_cache(maxsize=None)
def _m_p(lam: Partition) -> _PDict:
    """Monomial symmetric function: solve <m_lam, h_mu> = delta by back
    substitution over the triangular pairing rows of its degree."""
    n = sum(lam)
    if n == 0:
        return {EMPTY: Fraction(1)}
    order, rows = _pairing_rows(n)
    coords: _PDict = {}
    for i in range(len(order) - 1, -1, -1):
        mu = order[i]
        row = rows[i]
        acc = Fraction(1 if mu == lam else 0)
        for nu, g in row.items():
            if nu != mu:
                x = coords.get(nu)
                if x:
                    acc -= g * x
        if acc:
            coords[mu] = acc / row[mu]
    return coords


@lru_cache(maxsize=None)
def _f_p(lam: Partition) -> _PDict:
    return {mu: c * _omega_sign(mu) for mu, c in _m_p(lam).items()}


def _basis_p(b: str, lam: Partition) -> _PDict:
    if b == "p":
        return {lam: Fraction(1)}
    if b == "h":
        return _h_p(lam)
    if b == "e":
        return _e_p(lam)
    if b == "s":
        return _s_p(lam)
    if b == "m":
        return _m_p(lam)
    if b == "f":
        return _f_p(lam)
    raise ValueError(f"unknown basis {b!r}; expected one of {BASES}")


# ---------------------------------------------------------------------------
# Public operations.
# ---------------------------------------------------------------------------


def basis_element(b: str, lam: Iterable[int]) -> SymFunc:
    """The basis element b_lam as a SymFunc (power-sum coordinates)."""
    return SymFunc._raw(_basis_p(b, Partition(lam)))


def multiply(g1: SymFunc, g2: SymFunc) -> SymFunc:
    return g1 * g2


def inner_product(g1: SymFunc, g2: SymFunc) -> Fraction:
    """Hall inner product, diagonal in power-sum coordinates."""
    return _dict_pair(g1._terms, g2._terms)


def omega(g: SymFunc) -> SymFunc:
    """The involution: p_lam -> (-1)^{|lam| - l(lam)} p_lam.

    Consequently omega h = e, omega m = f and omega s_lam = s_{lam'}.
    """
    return SymFunc._raw({lam: c * _omega_sign(lam) for lam, c in g._terms.items()})


def skew(g: SymFunc, target: SymFunc) -> SymFunc:
    """Apply g^perp, the Hall-adjoint of multiplication by g, to ``target``."""
    out: _PDict = {}
    for lam, c in g._terms.items():
        cur = target._terms
        for k in lam:
            cur = _dict_skew_pk(k, cur)
            if not cur:
                break
        if cur:
            _dict_add(out, cur, c)
    return SymFunc._raw(out)


def expand(g: SymFunc, b: str) -> BasisExpansion:
    """Expansion of ``g`` in basis ``b`` via pairing against the dual basis."""
    if b not in BASES:
        raise ValueError(f"unknown basis {b!r}; expected one of {BASES}")
    if b == "p":
        return BasisExpansion("p", dict(g._terms))
    dual = DUAL_BASIS[b]
    terms: _PDict = {}
    for d in sorted(g.degrees()):
        component = {lam: c for lam, c in g._terms.items() if sum(lam) == d}
        for lam in partitions_of(d):
            c = _dict_pair(component, _basis_p(dual, lam))
            if c:
                terms[lam] = c
    return BasisExpansion(b, terms)


@lru_cache(maxsize=None)
def r_coefficient(mu: Partition) -> int:
    """Signed multinomial (-1)^{|mu|-l(mu)} * l(mu)! / prod_i n_i(mu)!.

    These are the coefficients of the expansion e_k = sum_{mu |- k} r_mu h_mu.
    """
    mu = Partition(mu)
    num = 1
    for j in range(2, len(mu) + 1):
        num *= j
    i = 0
    run = 0
    for p in mu:
        if p == i:
            run += 1
        else:
            i, run = p, 1
        num //= run
    return -num if (sum(mu) - len(mu)) % 2 else num


def hn(n: int) -> SymFunc:
    return SymFunc._raw(_hn_p(n))


def en(n: int) -> SymFunc:
    return SymFunc._raw(_en_p(n))


def pn(n: int) -> SymFunc:
    if n == 0:
        return SymFunc.one()
    return SymFunc._raw({_wrap((n,)): Fraction(1)})
