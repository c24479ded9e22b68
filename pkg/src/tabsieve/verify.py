"""Fixed-point counts of evacuation and promotion powers on Yamanouchi
tableaux, checked against signed plethysm coefficients and ribbon tableau
counts."""

from __future__ import annotations

import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .jdt import evacuate, promotion_power
from .partitions import (Partition, format_partition, pad, partition, partitions_of,
                         r_core, r_sign)
from .ribbon import enumerate_ribbon_tableaux
from .symfunc import SchurExpansion, inner_product, plethysm_coefficient, power_of
from .tableaux import SkewTableau, enumerate_ssyt, is_yamanouchi, reading_word

log = logging.getLogger(__name__)


class VerifyError(ValueError):
    """Violated precondition, or an action escaping the set it should preserve."""


Sign = Union[int, str]


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    inputs: tuple[tuple[str, object], ...]
    lhs: int
    rhs: int
    sign: Sign
    coefficient: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict:
        inputs = {k: list(v) if isinstance(v, tuple) else v for k, v in self.inputs}
        return {"theorem": self.theorem, "inputs": inputs, "lhs": self.lhs,
                "rhs": self.rhs, "sign": self.sign, "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    def inputs_text(self) -> str:
        return ";".join(f"{k}={format_partition(v) if isinstance(v, tuple) else v}"
                        for k, v in self.inputs)

    def to_tsv(self) -> str:
        return "\t".join([self.theorem, self.inputs_text(), str(self.lhs), str(self.rhs),
                          str(self.sign), "pass" if self.passed else "FAIL"])

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{status} {self.theorem} {self.inputs_text()} lhs={self.lhs} rhs={self.rhs} sign={self.sign}"


TSV_HEADER = "theorem\tinputs\tlhs\trhs\tsign\tpass"


# --- the tableau sets --------------------------------------------------------------

def _padded(p: Sequence[int], length: int, what: str) -> tuple[int, ...]:
    p = partition(p)
    if len(p) > length:
        raise VerifyError(f"{what} {p} has more than {length} parts")
    return pad(p, length)


def evac_content(mu: Sequence[int], m: int) -> tuple[int, ...]:
    """mu reversed followed by mu, both padded to m parts."""
    mu = _padded(mu, m, "mu")
    return tuple(reversed(mu)) + mu


def prom_content(mu: Sequence[int], m: int, n: int) -> tuple[int, ...]:
    return _padded(mu, m, "mu") * n


def _evac_args(lam, mu, m) -> tuple[Partition, tuple[int, ...]]:
    if m < 1:
        raise VerifyError("m must be positive")
    lam = partition(lam)
    _padded(lam, 2 * m, "lambda")
    content = evac_content(mu, m)
    if sum(lam) != sum(content):
        raise VerifyError("need |lambda| = 2|mu|")
    return lam, content


def _prom_args(lam, mu, m, n) -> tuple[Partition, tuple[int, ...]]:
    if m < 1 or n < 1:
        raise VerifyError("m and n must be positive")
    lam = partition(lam)
    _padded(lam, m * n, "lambda")
    content = prom_content(mu, m, n)
    if sum(lam) != sum(content):
        raise VerifyError("need |lambda| = n|mu|")
    return lam, content


def is_eyt(t: SkewTableau, m: int) -> bool:
    w = reading_word(t)
    return is_yamanouchi(w, 1, m, anti=True) and is_yamanouchi(w, m + 1, 2 * m)


def is_pyt(t: SkewTableau, m: int, n: int) -> bool:
    w = reading_word(t)
    return all(is_yamanouchi(w, k * m + 1, (k + 1) * m) for k in range(n))


def enumerate_eytab(lam: Sequence[int], mu: Sequence[int], m: int) -> list[SkewTableau]:
    """Tableaux of shape lam, content mu-bar mu, whose reading word is
    anti-Yamanouchi in 1..m and Yamanouchi in m+1..2m."""
    lam, content = _evac_args(lam, mu, m)
    return [t for t in enumerate_ssyt(lam, (), content) if is_eyt(t, m)]


def enumerate_pytab(lam: Sequence[int], mu: Sequence[int], m: int, n: int) -> list[SkewTableau]:
    """Tableaux of shape lam, content mu^n, Yamanouchi in every block
    km+1..(k+1)m."""
    lam, content = _prom_args(lam, mu, m, n)
    return [t for t in enumerate_ssyt(lam, (), content) if is_pyt(t, m, n)]


# --- fixed points ----------------------------------------------------------------

def evac_fixed_count(lam: Sequence[int], mu: Sequence[int], m: int,
                     restricted: bool = True) -> int:
    lam, content = _evac_args(lam, mu, m)
    s = 2 * m
    if restricted:
        tabs = enumerate_eytab(lam, mu, m)
    else:
        tabs = enumerate_ssyt(lam, (), content)
    members = set(tabs)
    fixed = 0
    for t in tabs:
        u = evacuate(t, s)
        if restricted and u not in members:
            raise VerifyError(f"evacuation maps {t} outside the restricted set")
        fixed += u == t
    return fixed


def require_full_rectangle(lam: Sequence[int], parts: int,
                           allow_padded: bool = False) -> Partition:
    """lam must have exactly ``parts`` positive parts, all equal.  A rectangle
    with fewer rows (padded with zero parts) is rejected unless
    ``allow_padded`` is set."""
    lam = partition(lam)
    rows_ok = len(lam) == parts or (allow_padded and 0 < len(lam) <= parts)
    if not rows_ok or len(set(lam)) != 1:
        raise VerifyError(f"{format_partition(lam)} is not a rectangle with exactly {parts} equal positive parts")
    return lam


def promotion_cycle_lengths(lam: Sequence[int], mu: Sequence[int], m: int, n: int,
                            restricted: bool = True) -> dict[SkewTableau, int]:
    """Orbit length of every tableau under j = pr^m; lam may be any nonempty
    rectangle with at most mn rows."""
    lam, content = _prom_args(lam, mu, m, n)
    require_full_rectangle(lam, m * n, allow_padded=True)
    tabs = enumerate_pytab(lam, mu, m, n) if restricted else enumerate_ssyt(lam, (), content)
    members = set(tabs)
    image = {}
    for t in tabs:
        u = promotion_power(t, m * n, m)
        if u not in members:
            raise VerifyError(f"j maps {t} outside the tableau set")
        image[t] = u
    lengths: dict[SkewTableau, int] = {}
    for t in tabs:
        if t in lengths:
            continue
        orbit = [t]
        u = image[t]
        while u != t:
            orbit.append(u)
            u = image[u]
        for x in orbit:
            lengths[x] = len(orbit)
    return lengths


def power_fixed_count(lam, mu, m: int, n: int, ell: int, restricted: bool = True) -> int:
    """#{T : j^ell(T) = T} for any integer ell."""
    lengths = promotion_cycle_lengths(lam, mu, m, n, restricted)
    return sum(1 for c in lengths.values() if ell % c == 0)


def prom_fixed_count(lam, mu, m: int, n: int, d: int, restricted: bool = True) -> int:
    if d < 1 or n % d:
        raise VerifyError(f"d={d} must be a positive divisor of n={n}")
    return power_fixed_count(lam, mu, m, n, d, restricted)


def _signed(lam: Partition, k: int, coeff: int, lhs: int) -> tuple[int, Sign]:
    if r_core(lam, k):
        # no k-ribbon tiling: the coefficient should vanish and no sign exists
        return coeff, "indeterminate"
    eps = r_sign(lam, k)
    rhs = eps * coeff
    return rhs, (eps if (rhs or lhs) else "indeterminate")


def _inputs(**kw) -> tuple[tuple[str, object], ...]:
    return tuple((k, tuple(v) if isinstance(v, (list, tuple)) else v) for k, v in kw.items())


# --- theorem checks -------------------------------------------------------------

def check_mainevac(lam, mu, m: int) -> VerificationReport:
    lam, _ = _evac_args(lam, mu, m)
    mu = partition(mu)
    lhs = evac_fixed_count(lam, mu, m, restricted=True)
    coeff = plethysm_coefficient(2, 1, mu, lam)
    rhs, sign = _signed(lam, 2, coeff, lhs)
    return VerificationReport("mainevac", _inputs(lam=lam, mu=mu, m=m), lhs, rhs, sign, coeff)


def check_mainprom(lam, mu, m: int, n: int, d: int,
                   allow_padded: bool = False) -> VerificationReport:
    lam, _ = _prom_args(lam, mu, m, n)
    require_full_rectangle(lam, m * n, allow_padded)
    mu = partition(mu)
    lhs = prom_fixed_count(lam, mu, m, n, d, restricted=True)
    coeff = plethysm_coefficient(n, d, mu, lam)
    rhs, sign = _signed(lam, n // d, coeff, lhs)
    return VerificationReport("mainprom", _inputs(lam=lam, mu=mu, m=m, n=n, d=d),
                              lhs, rhs, sign, coeff)


def check_corprom(lam, mu, m: int, n: int, ell: int,
                  allow_padded: bool = False) -> VerificationReport:
    """j^ell is compared with the d = gcd(n, ell) coefficient; the left side
    is computed with the exponent ell itself."""
    lam, _ = _prom_args(lam, mu, m, n)
    require_full_rectangle(lam, m * n, allow_padded)
    mu = partition(mu)
    g = math.gcd(n, ell)
    lhs = power_fixed_count(lam, mu, m, n, ell, restricted=True)
    coeff = plethysm_coefficient(n, g, mu, lam)
    rhs, sign = _signed(lam, n // g, coeff, lhs)
    return VerificationReport("corprom", _inputs(lam=lam, mu=mu, m=m, n=n, ell=ell),
                              lhs, rhs, sign, coeff)


def check_stembridge(lam, mu, m: int) -> VerificationReport:
    lam, _ = _evac_args(lam, mu, m)
    mu = partition(mu)
    lhs = evac_fixed_count(lam, mu, m, restricted=False)
    rhs = 0 if r_core(lam, 2) else len(enumerate_ribbon_tableaux(lam, 2, pad(mu, m)))
    return VerificationReport("stembridge", _inputs(lam=lam, mu=mu, m=m), lhs, rhs,
                              1 if (lhs or rhs) else "indeterminate")


def check_rhoades(lam, mu, m: int, n: int, d: int) -> VerificationReport:
    lam, _ = _prom_args(lam, mu, m, n)
    mu = partition(mu)
    lhs = prom_fixed_count(lam, mu, m, n, d, restricted=False)
    r = n // d
    rhs = 0 if r_core(lam, r) else len(enumerate_ribbon_tableaux(lam, r, pad(mu, m) * d))
    return VerificationReport("rhoades", _inputs(lam=lam, mu=mu, m=m, n=n, d=d), lhs, rhs,
                              1 if (lhs or rhs) else "indeterminate")


def check_lr_evac(lam, mu, m: int) -> VerificationReport:
    """|EYTab(lam, mu-bar mu)| against <s_mu^2, s_lam>."""
    lam, _ = _evac_args(lam, mu, m)
    mu = partition(mu)
    lhs = len(enumerate_eytab(lam, mu, m))
    rhs = inner_product(power_of(SchurExpansion.schur(mu), 2), SchurExpansion.schur(lam))
    return VerificationReport("lr-evac", _inputs(lam=lam, mu=mu, m=m), lhs, rhs, 1)


def check_lr_prom(lam, mu, m: int, n: int) -> VerificationReport:
    """|PYTab(lam, mu^n)| against <s_mu^n, s_lam>."""
    lam, _ = _prom_args(lam, mu, m, n)
    mu = partition(mu)
    lhs = len(enumerate_pytab(lam, mu, m, n))
    rhs = inner_product(power_of(SchurExpansion.schur(mu), n), SchurExpansion.schur(lam))
    return VerificationReport("lr-prom", _inputs(lam=lam, mu=mu, m=m, n=n), lhs, rhs, 1)


# --- sweeps ------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepBounds:
    """max_weight bounds |lambda|; max_mu_weight, when set, additionally
    bounds |mu|.  With ``padded`` the promotion sweeps also take rectangles
    with fewer than mn rows."""

    max_weight: int = 6
    ms: tuple[int, ...] = (1, 2)
    ns: tuple[int, ...] = (2, 3)
    max_mu_weight: Optional[int] = None
    padded: bool = False

    def __post_init__(self):
        if self.max_weight < 0 or any(x < 1 for x in self.ms + self.ns):
            raise VerifyError("bounds must be positive")

    def mu_ok(self, k: int) -> bool:
        return self.max_mu_weight is None or k <= self.max_mu_weight


def load_bounds(path: str, base: SweepBounds = SweepBounds()) -> SweepBounds:
    """key=value lines (max_weight, m, n, max_mu_weight, padded); '#' starts a
    comment.  m and n take comma-separated lists."""
    values = {"max_weight": base.max_weight, "ms": base.ms, "ns": base.ns,
              "max_mu_weight": base.max_mu_weight, "padded": base.padded}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise VerifyError(f"{path}:{lineno}: expected key=value")
            key, val = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            try:
                if key in ("m", "n"):
                    values[key + "s"] = tuple(int(x) for x in val.split(","))
                elif key in ("max_weight", "max_mu_weight"):
                    values[key] = int(val)
                elif key == "padded":
                    if val.lower() not in ("true", "false", "1", "0", "yes", "no"):
                        raise ValueError(val)
                    values[key] = val.lower() in ("true", "1", "yes")
                else:
                    raise VerifyError(f"{path}:{lineno}: unknown key {key!r}")
            except ValueError as exc:
                if isinstance(exc, VerifyError):
                    raise
                raise VerifyError(f"{path}:{lineno}: bad value {val!r}") from None
    return SweepBounds(**values)


def evac_instances(b: SweepBounds) -> Iterator[tuple]:
    for m in b.ms:
        for k in range(0, b.max_weight // 2 + 1):
            if not b.mu_ok(k):
                continue
            for mu in partitions_of(k, max_parts=m):
                for lam in partitions_of(2 * k, max_parts=2 * m):
                    yield (lam, mu, m)


def prom_instances(b: SweepBounds) -> Iterator[tuple]:
    """(lam, mu, m, n) with lam = (c^{mn}) and c*mn = n|mu|.  Rectangles with
    fewer than mn rows are included only when ``b.padded`` is set; otherwise
    they are logged and skipped."""
    for n in b.ns:
        for m in b.ms:
            for k in range(1, b.max_weight // n + 1):
                if not b.mu_ok(k):
                    continue
                for rows in range(1, m * n + 1):
                    if (n * k) % rows:
                        continue
                    lam = (n * k // rows,) * rows
                    if rows < m * n and not b.padded:
                        log.info("skipping padded rectangle %s for m=%d n=%d",
                                 format_partition(lam), m, n)
                        continue
                    for mu in partitions_of(k, max_parts=m):
                        yield (lam, mu, m, n)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def sweep_jobs(theorem: str, b: SweepBounds) -> list[tuple[Callable, tuple]]:
    jobs: list[tuple[Callable, tuple]] = []
    if theorem == "mainevac":
        jobs = [(check_mainevac, inst) for inst in evac_instances(b)]
    elif theorem == "stembridge":
        jobs = [(check_stembridge, inst) for inst in evac_instances(b)]
    elif theorem == "lr-evac":
        jobs = [(check_lr_evac, inst) for inst in evac_instances(b)]
    elif theorem == "mainprom":
        jobs = [(check_mainprom, inst + (d, b.padded)) for inst in prom_instances(b)
                for d in _divisors(inst[3])]
    elif theorem == "rhoades":
        jobs = [(check_rhoades, inst + (d,)) for inst in prom_instances(b)
                for d in _divisors(inst[3])]
    elif theorem == "corprom":
        jobs = [(check_corprom, inst + (ell, b.padded)) for inst in prom_instances(b)
                for ell in range(inst[3])]
    elif theorem == "lr-prom":
        jobs = [(check_lr_prom, inst) for inst in prom_instances(b)]
    else:
        raise VerifyError(f"unknown theorem {theorem!r}")
    return jobs


THEOREMS = ("mainevac", "mainprom", "corprom", "stembridge", "rhoades", "lr-evac", "lr-prom")


def worker_count() -> int:
    """TF_THREADS caps the pool; unset means serial."""
    raw = os.environ.get("TF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise VerifyError(f"TF_THREADS={raw!r} is not an integer") from None


def _run(job: tuple[Callable, tuple]) -> VerificationReport:
    fn, args = job
    return fn(*args)


def run_sweep(theorems: Iterable[str], bounds: SweepBounds,
              workers: Optional[int] = None) -> list[VerificationReport]:
    """Reports for every instance, in generation order (independent of the
    worker count)."""
    jobs = [job for th in theorems for job in sweep_jobs(th, bounds)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) < 2:
        return [_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run, jobs, chunksize=4))


def sign_violations(reports: Iterable[VerificationReport]) -> list[VerificationReport]:
    """Reports whose empirical sign lhs / coefficient disagrees with the
    predicted sign.  Instances with a zero coefficient carry no sign and are
    skipped."""
    bad = []
    for r in reports:
        if r.coefficient is None or r.coefficient == 0 or r.sign == "indeterminate":
            continue
        if r.lhs != r.sign * r.coefficient:
            bad.append(r)
    return bad
