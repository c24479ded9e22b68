"""Schur-basis symmetric function arithmetic: inner products, LR products,
power-sum plethysm p_k o f and its adjoint phi_k.

Coefficients are Python ints, so there is no overflow to guard against.
"""

from __future__ import annotations

import re
from functools import cache
from typing import Iterable, Mapping, Optional, Sequence

from .partitions import (Partition, PartitionError, contains, conjugate, partition,
                         partitions_of, horizontal_strips_below, r_core, r_quotient,
                         r_sign, trim)
from .tableaux import enumerate_ssyt, lr_filter


class SymFuncError(ValueError):
    pass


class SchurExpansion:
    """Finite integer combination of Schur functions, homogeneous of one degree."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None):
        clean: dict[Partition, int] = {}
        for key, c in (terms or {}).items():
            key = partition(key)
            c = int(c)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        degrees = {sum(k) for k in clean}
        if len(degrees) > 1:
            raise SymFuncError(f"inhomogeneous expansion with degrees {sorted(degrees)}")
        self._terms = clean

    @classmethod
    def schur(cls, p: Sequence[int], coeff: int = 1) -> "SchurExpansion":
        return cls({tuple(p): coeff})

    @property
    def terms(self) -> dict[Partition, int]:
        return dict(self._terms)

    @property
    def degree(self) -> Optional[int]:
        return sum(next(iter(self._terms))) if self._terms else None

    def coeff(self, p: Sequence[int]) -> int:
        return self._terms.get(trim(p), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SchurExpansion) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return SchurExpansion(out)

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "SchurExpansion":
        return SchurExpansion({k: scalar * c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_times(other, self)
        return schur_product(self, other)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def __repr__(self) -> str:
        return f"SchurExpansion({format_expansion(self)!r})"

    def __str__(self) -> str:
        return format_expansion(self)


def scalar_times(c: int, f: SchurExpansion) -> SchurExpansion:
    return SchurExpansion({k: c * v for k, v in f.terms.items()})


def inner_product(f: SchurExpansion, g: SchurExpansion) -> int:
    ft, gt = f.terms, g.terms
    return sum(c * gt.get(k, 0) for k, c in ft.items())


@cache
def lr_coefficient(mu: Partition, nu: Partition, lam: Partition) -> int:
    """c^lam_{mu,nu}: Yamanouchi skew tableaux of shape lam/mu, content nu."""
    mu, nu, lam = trim(mu), trim(nu), trim(lam)
    if not contains(lam, mu) or sum(lam) != sum(mu) + sum(nu):
        return 0
    if not contains(lam, nu):
        return 0
    return len(lr_filter(enumerate_ssyt(lam, mu, nu)))


@cache
def _product_basis(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for lam in partitions_of(sum(mu) + sum(nu), max_parts=len(mu) + len(nu)):
        if lam and lam[0] > (mu[0] if mu else 0) + (nu[0] if nu else 0):
            continue
        c = lr_coefficient(mu, nu, lam)
        if c:
            out.append((lam, c))
    return tuple(out)


def schur_product(f: SchurExpansion, g: SchurExpansion) -> SchurExpansion:
    out: dict[Partition, int] = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            key = (mu, nu) if mu >= nu else (nu, mu)
            for lam, c in _product_basis(*key):
                out[lam] = out.get(lam, 0) + a * b * c
    return SchurExpansion(out)


def product_of(factors: Iterable[SchurExpansion]) -> SchurExpansion:
    result = SchurExpansion({(): 1})
    for f in factors:
        result = schur_product(result, f)
    return result


# --- monomial basis --------------------------------------------------------------

@cache
def kostka(shape: Partition, weight: tuple[int, ...]) -> int:
    """Number of SSYT of the given shape and content, by peeling horizontal
    strips of the largest letter."""
    shape = trim(shape)
    weight = tuple(weight)
    while weight and weight[-1] == 0:
        weight = weight[:-1]
    if sum(shape) != sum(weight):
        return 0
    if not weight:
        return 1
    return sum(kostka(q, weight[:-1]) for q in horizontal_strips_below(shape, weight[-1]))


def to_monomial(f: SchurExpansion, nvars: Optional[int] = None) -> dict[Partition, int]:
    """Coefficients of the monomial symmetric functions m_alpha (alpha of
    length <= nvars)."""
    if not f:
        return {}
    n = f.degree
    out: dict[Partition, int] = {}
    for alpha in partitions_of(n, max_parts=nvars):
        c = sum(coef * kostka(lam, alpha) for lam, coef in f.terms.items())
        if c:
            out[alpha] = c
    return out


def from_monomial(mono: Mapping[Sequence[int], int], nvars: Optional[int] = None
                  ) -> SchurExpansion:
    """Invert :func:`to_monomial` by repeatedly subtracting the Schur function
    of the lexicographically largest surviving term."""
    rest = {trim(k): c for k, c in mono.items() if c}
    out: dict[Partition, int] = {}
    while rest:
        lead = max(rest)
        c = rest[lead]
        out[lead] = c
        n = sum(lead)
        for alpha in partitions_of(n, max_parts=nvars):
            k = kostka(lead, alpha)
            if k:
                v = rest.get(alpha, 0) - c * k
                if v:
                    rest[alpha] = v
                else:
                    rest.pop(alpha, None)
        if rest.get(lead):
            raise SymFuncError("monomial data is not symmetric in the given variables")
    return SchurExpansion(out)


def plethysm_power(k: int, f: SchurExpansion) -> SchurExpansion:
    """Schur expansion of p_k o f = f(x_1^k, x_2^k, ...).

    f is realised in k*deg(f) variables as a monomial symmetric polynomial;
    substituting x_i -> x_i^k sends m_alpha to m_{k alpha}, and the result is
    expanded back onto Schur polynomials in the same number of variables.
    """
    if k < 1:
        raise SymFuncError("k must be positive")
    if not f:
        return SchurExpansion()
    if k == 1:
        return f
    nvars = k * f.degree
    mono = to_monomial(f, nvars)
    scaled = {tuple(k * a for a in alpha): c for alpha, c in mono.items()}
    return from_monomial(scaled, nvars)


def phi_adjoint(k: int, lam: Sequence[int]) -> SchurExpansion:
    """phi_k(s_lam) = sign_k(lam) * prod_i s_{lam^(i)} over the k-quotient,
    and 0 when the k-core is nonempty."""
    if k < 1:
        raise SymFuncError("k must be positive")
    lam = partition(lam)
    if r_core(lam, k):
        return SchurExpansion()
    quotient = r_quotient(lam, k)
    return scalar_times(r_sign(lam, k), product_of(SchurExpansion.schur(q) for q in quotient))


def power_of(f: SchurExpansion, d: int) -> SchurExpansion:
    return product_of([f] * d)


def plethysm_coefficient(n: int, d: int, mu: Sequence[int], lam: Sequence[int]) -> int:
    """<p_{n/d}^d o s_mu, s_lam> = <(p_{n/d} o s_mu)^d, s_lam>."""
    if n < 1 or d < 1 or n % d:
        raise SymFuncError(f"d={d} must be a positive divisor of n={n}")
    mu, lam = partition(mu), partition(lam)
    if n * sum(mu) != sum(lam):
        raise SymFuncError("need n * |mu| = |lam|")
    return _pleth_power_expansion(n // d, d, mu).coeff(lam)


@cache
def _pleth_power_expansion(k: int, d: int, mu: Partition) -> SchurExpansion:
    return power_of(plethysm_power(k, SchurExpansion.schur(mu)), d)


# --- text format ---------------------------------------------------------------

def format_expansion(f: SchurExpansion) -> str:
    """"+1*[4] -1*[3,1] +1*[2,2]"; terms in reverse lexicographic order."""
    if not f:
        return "0"
    return " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*[{','.join(map(str, p))}]"
                    for p, c in f.items())


_TERM = re.compile(r"([+-])\s*(\d+)\s*\*\s*\[([\d,\s]*)\]")


def parse_expansion(text: str) -> SchurExpansion:
    text = text.strip()
    if text == "0":
        return SchurExpansion()
    pos = 0
    out: dict[Partition, int] = {}
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise SymFuncError(f"cannot parse expansion {text!r}")
        sign = 1 if m.group(1) == "+" else -1
        body = m.group(3).strip()
        p = partition(int(x) for x in body.split(",")) if body else ()
        out[p] = out.get(p, 0) + sign * int(m.group(2))
        pos = m.end()
    if text[pos:].strip() or not out and text:
        raise SymFuncError(f"cannot parse expansion {text!r}")
    return SchurExpansion(out)
