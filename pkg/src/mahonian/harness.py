"""Brute-force sums, the identity registry and the verification engine.

Each registered identity pairs a closed form from :mod:`mahonian.formulas`
with an exhaustive left-hand side: either a :class:`BruteSpec` summed by the
enumeration kernel, or a composite oracle (fibers, shuffles, bijections,
parity checks) that reports its own mismatches.

>>> brute_sum(BruteSpec("s", "derangements", "maj-nat"), 3).render()
'q + q^2'
>>> verify("der-s", 5).passed
True
"""

from __future__ import annotations

import enum
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional, Sequence

from . import _core, _pykernel, formulas
from .errors import InvalidSpec, UnknownIdentity
from .golden import GOLDEN
from .maps import (chow_gamma, derangement_part, fiber, fiber_by_insertion,
                   fibers_by_dp, psi_bar, shuffles, shuffles_sb)
from .qalg import ZERO, QPoly, q_binomial, substitute
from .stats import LengthType, des, fmaj, length, maj
from .weyl import MAX_N, GroupFamily, Word, chunk_keys, derangements, iterate

__all__ = [
    "BruteSpec", "brute_sum", "partial_sums", "Status", "Problem", "NResult",
    "VerificationReport", "IdentityDescriptor", "REGISTRY", "identity",
    "verify", "verify_all", "closed_form", "WORKED_SETS",
]


# -- brute sums ----------------------------------------------------------------

_RESTRICT_ALIASES = {
    "all": "all", "derangements": "derangements", "der": "derangements",
    "even": "even", "even-length-derangements": "even", "even-derangements": "even",
}
_SIGN_ALIASES = {
    "none": "none", "len-a": "len-a", "len-b": "len-b", "len-d": "len-d",
    "length-a": "len-a", "length-b": "len-b", "length-d": "len-d",
}


@dataclass(frozen=True)
class BruteSpec:
    """What to sum: ``sum of sign(w) * q^stat(w)`` over one subset of a family.

    ``substitution=(s, p)`` replaces ``q`` by ``s*q^p`` in the accumulated
    polynomial.
    """

    family: GroupFamily
    restriction: str = "all"
    statistic: str = "maj-nat"
    sign: str = "none"
    substitution: Optional[tuple[int, int]] = None
    boundary: str = "none"

    def __post_init__(self):
        try:
            fam = GroupFamily.parse(self.family)
        except ValueError as exc:
            raise InvalidSpec(str(exc)) from None
        object.__setattr__(self, "family", fam)
        restriction = _RESTRICT_ALIASES.get(str(self.restriction).lower())
        sign = _SIGN_ALIASES.get(str(self.sign).lower())
        if restriction is None:
            raise InvalidSpec(f"unknown restriction {self.restriction!r}")
        if sign is None:
            raise InvalidSpec(f"unknown sign {self.sign!r}")
        if self.statistic not in _core.STATS:
            raise InvalidSpec(f"unknown statistic {self.statistic!r}")
        if self.boundary not in _core.BOUNDARIES:
            raise InvalidSpec(f"unknown boundary {self.boundary!r}")
        object.__setattr__(self, "restriction", restriction)
        object.__setattr__(self, "sign", sign)
        for name in (self.statistic, sign):
            if name == "len-a" and fam is not GroupFamily.S:
                raise InvalidSpec(f"{name} is only defined on S_n, not {fam.value}")
            if name in ("len-d", "dmaj") and fam is not GroupFamily.D:
                raise InvalidSpec(f"{name} is only defined on D_n, not {fam.value}")
        if self.substitution is not None:
            s, p = self.substitution
            if s not in (1, -1) or int(p) != p or p < 1:
                raise InvalidSpec(f"bad substitution {self.substitution!r}")

    def check(self, n: int) -> None:
        if not 1 <= n <= MAX_N:
            raise InvalidSpec(f"n must lie in 1..{MAX_N}, got {n}")
        if self.boundary == "type-d" and n < 2:
            raise InvalidSpec("the type D boundary needs n >= 2")

    def codes(self) -> tuple[int, int, int, int, int]:
        return (_core.FAMILIES.index(self.family.value),
                _core.STATS.index(self.statistic),
                _core.SIGNS.index(self.sign),
                _core.RESTRICTS.index(self.restriction),
                _core.BOUNDARIES.index(self.boundary))

    def finish(self, poly: QPoly) -> QPoly:
        if self.substitution is None:
            return poly
        return substitute(poly, *self.substitution)


def _chunk(args) -> list[int]:
    n, fam, stat, sign, restrict, boundary, first = args
    return _core.histogram(n, fam, stat, sign, restrict, boundary, first)


def partial_sums(spec: BruteSpec, n: int) -> dict[int, QPoly]:
    """Unsubstituted partial sums keyed by first letter."""
    spec.check(n)
    fam, stat, sign, restrict, boundary = spec.codes()
    return {k: QPoly(_core.histogram(n, fam, stat, sign, restrict, boundary, k))
            for k in chunk_keys(spec.family, n)}


def brute_sum(spec: BruteSpec, n: int, workers: Optional[int] = None) -> QPoly:
    """Exact signed sum of ``q^stat`` over the set ``spec`` describes.

    With ``workers > 1`` the enumeration is split by first letter; the
    compiled kernel releases the GIL so threads suffice there, the Python
    fallback uses processes.
    """
    spec.check(n)
    fam, stat, sign, restrict, boundary = spec.codes()
    if not workers or workers <= 1:
        return spec.finish(QPoly(_core.histogram(n, fam, stat, sign, restrict, boundary, 0)))
    jobs = [(n, fam, stat, sign, restrict, boundary, k) for k in chunk_keys(spec.family, n)]
    pool_cls = ThreadPoolExecutor if _core.BACKEND == "cython" else ProcessPoolExecutor
    total = ZERO
    with pool_cls(max_workers=workers) as pool:
        for hist in pool.map(_chunk, jobs):
            total = total + QPoly(hist)
    return spec.finish(total)


def _witness(spec: BruteSpec, n: int, degree: int) -> Optional[Word]:
    """First element whose term lands on ``degree`` after substitution."""
    power = spec.substitution[1] if spec.substitution else 1
    if degree % power:
        return None
    for w, e, _ in _pykernel.members(n, *spec.codes()):
        if e == degree // power:
            return w
    return None


# -- reports ---------------------------------------------------------------------

class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass
class Problem:
    """One failed comparison inside a check; ``diff`` is lhs - rhs when defined."""

    label: str
    diff: Optional[QPoly] = None
    witness: Optional[Word] = None

    def first_degree(self) -> Optional[int]:
        if self.diff is None or self.diff.is_zero():
            return None
        return self.diff.min_degree

    def describe(self) -> str:
        out = self.label
        if self.diff is not None:
            out += f"; diff {self.diff.render()}; first mismatch at degree {self.first_degree()}"
        if self.witness is not None:
            out += f"; witness {' '.join(map(str, self.witness))}"
        return out


@dataclass
class NResult:
    n: int
    status: Status
    seconds: float = 0.0
    eps: Optional[int] = None
    problems: list[Problem] = field(default_factory=list)
    reason: str = ""

    @property
    def diff(self) -> Optional[QPoly]:
        for p in self.problems:
            if p.diff is not None:
                return p.diff
        return None

    def to_json(self) -> dict:
        diff = self.diff
        out = {"n": self.n, "status": self.status.value,
               "diff": diff.render() if diff is not None else None,
               "seconds": round(self.seconds, 6)}
        if self.eps is not None:
            out["eps"] = self.eps
        if self.problems:
            first = self.problems[0]
            out["first_degree"] = first.first_degree()
            out["witness"] = list(first.witness) if first.witness else None
            out["problems"] = [p.describe() for p in self.problems]
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class VerificationReport:
    id: str
    anchor: str
    results: list[NResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status is not Status.FAIL for r in self.results)

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Status}
        for r in self.results:
            out[r.status.value] += 1
        return out

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "passed": self.passed,
                "results": [r.to_json() for r in self.results]}

    def render(self) -> str:
        lines = [f"{self.id}: {'PASS' if self.passed else 'FAIL'}  ({self.anchor})"]
        for r in self.results:
            tag = f"n={r.n}" + (f" eps={r.eps:+d}" if r.eps is not None else "")
            line = f"  {tag:<14} {r.status.value}  {r.seconds:.3f}s"
            if r.reason:
                line += f"  {r.reason}"
            lines.append(line)
            for p in r.problems[:5]:
                lines.append(f"      {p.describe()}")
            if len(r.problems) > 5:
                lines.append(f"      ... {len(r.problems) - 5} more")
        return "\n".join(lines)


# -- descriptors -------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityDescriptor:
    """One registered identity.

    A brute descriptor has ``rhs(n, eps)`` and ``lhs``, a tuple of
    ``eps -> BruteSpec`` factories that must each equal the closed form. A
    composite descriptor has ``check(n)`` returning its list of problems.
    """

    id: str
    anchor: str
    n_range: tuple[int, int]
    quick_max: int
    rhs: Optional[Callable[[int, int], QPoly]] = None
    lhs: tuple[Callable[[int], BruteSpec], ...] = ()
    eps: tuple[int, ...] = (1,)
    check: Optional[Callable[[int], list[Problem]]] = None

    def run(self, n: int, workers: Optional[int] = None) -> list[NResult]:
        if self.check is not None:
            t0 = time.perf_counter()
            problems = self.check(n)
            status = Status.FAIL if problems else Status.PASS
            return [NResult(n, status, time.perf_counter() - t0, problems=problems)]
        out = []
        for eps in self.eps:
            t0 = time.perf_counter()
            expected = self.rhs(n, eps)
            problems = []
            for make in self.lhs:
                spec = make(eps)
                diff = brute_sum(spec, n, workers) - expected
                if not diff.is_zero():
                    wit = _witness(spec, n, diff.min_degree) if diff.min_degree >= 0 else None
                    problems.append(Problem(f"{spec.statistic} over {spec.family.value}",
                                            diff, wit))
            status = Status.FAIL if problems else Status.PASS
            tag = eps if len(self.eps) > 1 or eps != 1 else None
            out.append(NResult(n, status, time.perf_counter() - t0, tag, problems))
        return out


def _spec(family, restriction, statistic, sign_kind=None, **kw):
    """Factory ``eps -> BruteSpec`` that signs by ``sign_kind`` only when eps = -1."""
    def make(eps: int) -> BruteSpec:
        sign = sign_kind if (eps == -1 and sign_kind) else "none"
        return BruteSpec(family, restriction, statistic, sign, **kw)
    return make


def _no_eps(fn):
    return lambda n, _eps: fn(n)


# -- composite checks ------------------------------------------------------------

def _compare(label: str, lhs: QPoly, rhs: QPoly, witness=None) -> list[Problem]:
    diff = lhs - rhs
    return [] if diff.is_zero() else [Problem(label, diff, witness)]


def _derangement_list(family: str, k: int) -> list[Word]:
    return [()] if k == 0 else list(derangements(family, k))


_COUNT_ENUM = {"as": ("s", 7), "ab": ("b", 6), "ad": ("d", 6)}
_COUNT_POLY = {"as": formulas.even_derangement_S, "ab": formulas.even_derangement_B,
               "ad": formulas.even_derangement_D}
# values fixed by the recurrences' initial conditions
_COUNT_ANCHORS = {("ab", 2): 3, ("ad", 2): 1}


def _counts_check(family: str) -> Callable[[int], list[Problem]]:
    def check(n: int) -> list[Problem]:
        values = {m: formulas.even_derangement_count(family, n, m)
                  for m in ("closed", "rec1", "rec2")}
        values["q=1"] = _COUNT_POLY[family](n)(1)
        fam, limit = _COUNT_ENUM[family]
        if n <= limit:
            values["enumerate"] = sum(_core.histogram(
                n, _core.FAMILIES.index(fam), _core.STATS.index("neg"), 0, 2, 0, 0))
        if (family, n) in _COUNT_ANCHORS:
            values["anchor"] = _COUNT_ANCHORS[family, n]
        if len(set(values.values())) == 1:
            return []
        return [Problem("disagreement: " + ", ".join(f"{k}={v}" for k, v in values.items()))]
    return check


def _rel_bd(n: int) -> list[Problem]:
    problems = []
    for eps in (1, -1):
        sb = "len-b" if eps == -1 else "none"
        sd = "len-d" if eps == -1 else "none"
        lhs = brute_sum(BruteSpec("d", "derangements", "dmaj", sd), n)
        delta = brute_sum(BruteSpec("delta", "derangements", "fmaj", sb, (eps, 1)), n)
        b_plus = brute_sum(BruteSpec("b", "derangements", "fmaj", sb), n - 1)
        b_minus = brute_sum(BruteSpec("b", "derangements", "fmaj", sb, (-1, 1)), n - 1)
        problems += _compare(f"eps={eps:+d} enumerated", lhs,
                             delta + (b_plus - b_minus) * Fraction(eps, 2))
        d_b = formulas.derangement_B(n - 1, eps)
        rhs = (substitute(formulas.derangement_Delta(n, eps), eps, 1)
               + (d_b - substitute(d_b, -1, 1)) * Fraction(eps, 2))
        problems += _compare(f"eps={eps:+d} closed forms",
                             formulas.derangement_D(n, eps), rhs)
    return problems


_FIBER_KINDS = {
    # kind: (stat fn, length type, smallest k, largest k)
    "s": (maj, LengthType.A, 0, 4),
    "b": (fmaj, LengthType.B, 0, 3),
    "delta-less": (fmaj, LengthType.B, 2, 3),
}

WORKED_SETS = {
    "shuffle": (((-4, -1), (2, 3)), [
        (2, 3, -4, -1), (2, -4, 3, -1), (2, -4, -1, 3),
        (-4, 2, 3, -1), (-4, 2, -1, 3), (-4, -1, 2, 3)]),
    "shuffle-sb": (((4, -5, 1), (2, 3)), [
        (2, 3, 4, -5, 1), (2, 4, 3, -5, 1), (2, 4, -5, 3, 1),
        (4, 2, 3, -5, 1), (4, 2, -5, 3, 1), (4, -5, 2, 3, 1)]),
    "fiber-b": ((4, (-2, -1)), [
        (1, 2, -4, -3), (1, -4, 3, -2), (1, -3, -2, 4),
        (-4, 2, 3, -1), (-3, 2, -1, 4), (-2, -1, 3, 4)]),
    "fiber-delta-less": ((5, (2, -3, 1)), [
        (1, 2, 4, -5, 3), (1, 4, 3, -5, 2), (1, 3, -5, 4, 2),
        (4, 2, 3, -5, 1), (3, 2, -5, 4, 1), (2, -5, 3, 4, 1)]),
}


def _set_problem(label: str, got: Iterable[Word], want: Iterable[Word]) -> list[Problem]:
    got, want = sorted(got), sorted(want)
    return [] if got == want else [Problem(f"{label}: got {got}, expected {want}")]


def _fiber_check(kind: str) -> Callable[[int], list[Problem]]:
    stat, ltype, k_lo, k_hi = _FIBER_KINDS[kind]
    family = "s" if kind == "s" else kind

    def check(n: int) -> list[Problem]:
        groups = fibers_by_dp(family, n)
        problems = []
        for k in range(k_lo, min(k_hi, n) + 1):
            pool = _derangement_list("s" if kind == "s" else "b", k)
            if kind == "delta-less":
                pool = [s for s in pool if s[-1] > 0]
            for sigma in pool:
                members = groups.get(sigma, [])
                if sorted(members) != fiber_by_insertion(family, n, sigma):
                    problems.append(Problem(f"sigma={sigma}: filtering and insertion disagree"))
                for eps in (1, -1):
                    terms: dict[int, int] = {}
                    for p in members:
                        e = stat(p)
                        terms[e] = terms.get(e, 0) + eps ** length(p, ltype)
                    lhs = QPoly.from_dict(terms)
                    problems += _compare(f"sigma={sigma} eps={eps:+d}", lhs,
                                         formulas.fiber_rhs(kind, n, sigma, eps))
        worked = WORKED_SETS.get(f"fiber-{kind}")
        if worked and worked[0][0] == n:
            problems += _set_problem("worked fiber", fiber(kind, n, worked[0][1]), worked[1])
        return problems
    return check


def _parity_check(family: str, ltype: LengthType) -> Callable[[int], list[Problem]]:
    def check(n: int) -> list[Problem]:
        bad = [p for p in iterate(family, n)
               if (length(p, ltype) - length(derangement_part(p), ltype)) % 2]
        return [Problem("length parity changes under dp", witness=p) for p in bad[:5]]
    return check


def _chow_check(restricted: bool) -> Callable[[int], list[Problem]]:
    def check(n: int) -> list[Problem]:
        problems = []
        for k in range(1 if restricted else 0, min(3, n) + 1):
            pool = _derangement_list("b", k)
            if restricted:
                pool = [s for s in pool if s[-1] > 0]
            for sigma in pool:
                tilde, gamma = psi_bar(n, sigma), chow_gamma(n, sigma)
                source = fiber("delta-less" if restricted else "b", n, sigma)
                image = [psi_bar(n, p) for p in source]
                target = shuffles_sb(tilde, gamma) if restricted else shuffles(tilde, gamma)
                if len(set(image)) != len(image):
                    problems.append(Problem(f"sigma={sigma}: map is not injective"))
                problems += _set_problem(f"sigma={sigma}", image, target)
                for p, a in zip(source, image):
                    if fmaj(p) != fmaj(a):
                        problems.append(Problem(f"sigma={sigma}: fmaj not preserved", witness=p))
        return problems
    return check


_SHUFFLE_PAIRS_PER_SIZE = 30


def _special_key(x: int) -> tuple[int, int]:
    return (0, -x) if x < 0 else (1, x)


def random_pairs(kind: str, size: int, count: int = _SHUFFLE_PAIRS_PER_SIZE
                 ) -> list[tuple[Word, Word]]:
    """Deterministic disjoint pairs of total length ``size`` for shuffle checks."""
    rng = random.Random(f"{kind}:{size}")
    signed = kind in ("fmaj", "fmaj-sb")
    out = []
    for _ in range(count):
        m = rng.randint(1, size - 1)
        letters = rng.sample(range(1, size + 3), size)
        if signed:
            letters = [x if rng.random() < 0.5 else -x for x in letters]
        left, right = tuple(letters[:m]), tuple(letters[m:])
        if kind == "fmaj-sb" and _special_key(left[-1]) > _special_key(right[-1]):
            left, right = right, left
        if kind == "maj-refined" and left[-1] > right[-1]:
            left, right = right, left
        out.append((left, right))
    return out


def _shuffle_sum(words: Iterable[Word], stat) -> QPoly:
    terms: dict[int, int] = {}
    for a in words:
        e = stat(a)
        terms[e] = terms.get(e, 0) + 1
    return QPoly.from_dict(terms)


def _shuffle_check(kind: str) -> Callable[[int], list[Problem]]:
    def check(size: int) -> list[Problem]:
        problems = []
        for left, right in random_pairs(kind, size):
            label = f"{left} | {right}"
            if kind == "maj-unsigned":
                all_ = shuffles(left, right)
                if len(all_) != comb(size, len(left)):
                    problems.append(Problem(f"{label}: wrong number of shuffles"))
                problems += _compare(label, _shuffle_sum(all_, maj),
                                     formulas.shuffle_rhs(kind, left, right))
            elif kind == "fmaj":
                problems += _compare(label, _shuffle_sum(shuffles(left, right), fmaj),
                                     formulas.shuffle_rhs(kind, left, right))
            elif kind == "fmaj-sb":
                problems += _compare(label, _shuffle_sum(shuffles_sb(left, right), fmaj),
                                     formulas.shuffle_rhs(kind, left, right))
            else:
                restricted = shuffles_sb(left, right)
                for k in range(size):
                    lhs = _shuffle_sum((a for a in restricted if des(a) == k), maj)
                    problems += _compare(f"{label} k={k}", lhs,
                                         formulas.shuffle_rhs(kind, left, right, k))
        key = {"fmaj": "shuffle", "fmaj-sb": "shuffle-sb"}.get(kind)
        if key:
            (left, right), want = WORKED_SETS[key]
            if len(left) + len(right) == size:
                got = shuffles(left, right) if key == "shuffle" else shuffles_sb(left, right)
                problems += _set_problem("worked set", got, want)
        return problems
    return check


def _qchuvan(n: int) -> list[Problem]:
    problems = []
    for m in range(11):
        for h in range(11):
            lhs = ZERO
            for k in range(h + 1):
                term = q_binomial(n, k) * q_binomial(m, h - k)
                if not term.is_zero():
                    lhs = lhs + term.shift((n - k) * (h - k))
            problems += _compare(f"m={m} h={h}", lhs, q_binomial(m + n, h))
    return problems


_GOLDEN_SOURCES = {
    "AS": (formulas.even_derangement_S, BruteSpec("s", "even", "maj-nat")),
    "AB": (formulas.even_derangement_B, BruteSpec("b", "even", "fmaj")),
    "D": (lambda n: formulas.derangement_D(n, 1), BruteSpec("d", "derangements", "dmaj")),
    "AD": (formulas.even_derangement_D, BruteSpec("d", "even", "dmaj")),
}


def _golden(n: int) -> list[Problem]:
    problems = []
    for (fam, m), text in GOLDEN.items():
        if m != n:
            continue
        closed, spec = _GOLDEN_SOURCES[fam]
        for source, value in (("closed form", closed(n)), ("enumeration", brute_sum(spec, n))):
            if value.render() != text:
                problems.append(Problem(f"{fam} n={n} {source}: {value.render()!r} != {text!r}",
                                        value - QPoly.parse(text)))
    return problems


# -- registry ----------------------------------------------------------------------

F = formulas


def _brute(id_, anchor, n_range, quick, rhs, lhs, eps=(1,)):
    return IdentityDescriptor(id_, anchor, n_range, quick, rhs=rhs, lhs=tuple(lhs), eps=eps)


def _composite(id_, anchor, n_range, quick, check):
    return IdentityDescriptor(id_, anchor, n_range, quick, check=check)


_DESCRIPTORS = [
    # type A
    _brute("poincare-s", "MacMahon: maj and inv both have generating function [n]_q!",
           (1, 8), 6, F.mahonian_S,
           [_spec("s", "all", "maj-nat"), _spec("s", "all", "len-a")]),
    _brute("signed-s", "Gessel-Simion signed Mahonian polynomial over S_n",
           (1, 8), 6, F.mahonian_S, [_spec("s", "all", "maj-nat", "len-a")], (-1,)),
    _brute("der-s", "Wachs: maj over derangements in S_n",
           (1, 8), 6, F.derangement_S, [_spec("s", "derangements", "maj-nat")]),
    _brute("signed-der-s", "signed maj over derangements in S_n",
           (1, 8), 6, F.derangement_S,
           [_spec("s", "derangements", "maj-nat", "len-a")], (-1,)),
    _brute("even-der-s", "maj over even derangements in S_n",
           (1, 8), 6, _no_eps(F.even_derangement_S), [_spec("s", "even", "maj-nat")]),
    # type B
    _brute("poincare-b", "fmaj and length B both have generating function [2]_q[4]_q...[2n]_q",
           (1, 6), 4, F.mahonian_B,
           [_spec("b", "all", "fmaj"), _spec("b", "all", "len-b")]),
    _brute("signed-b", "Adin-Gessel-Roichman signed fmaj polynomial over B_n",
           (1, 6), 4, F.mahonian_B, [_spec("b", "all", "fmaj", "len-b")], (-1,)),
    _brute("der-b", "Chow: fmaj over derangements in B_n",
           (1, 6), 4, F.derangement_B, [_spec("b", "derangements", "fmaj")]),
    _brute("signed-der-b", "signed fmaj over derangements in B_n",
           (1, 6), 4, F.derangement_B,
           [_spec("b", "derangements", "fmaj", "len-b")], (-1,)),
    _brute("even-der-b", "fmaj over even derangements in B_n",
           (1, 6), 4, _no_eps(F.even_derangement_B), [_spec("b", "even", "fmaj")]),
    # type D
    _brute("poincare-d", "Biagioli-Caselli: Dmaj and length D share [2]_q...[2n-2]_q[n]_q",
           (2, 6), 5, F.mahonian_D,
           [_spec("d", "all", "dmaj"), _spec("d", "all", "len-d")]),
    _brute("signed-d", "Biagioli signed Dmaj polynomial over D_n",
           (2, 6), 5, F.mahonian_D, [_spec("d", "all", "dmaj", "len-d")], (-1,)),
    _brute("der-d", "Dmaj over derangements in D_n",
           (2, 6), 5, F.derangement_D, [_spec("d", "derangements", "dmaj")]),
    _brute("signed-der-d", "signed Dmaj over derangements in D_n",
           (2, 6), 5, F.derangement_D,
           [_spec("d", "derangements", "dmaj", "len-d")], (-1,)),
    _brute("even-der-d", "Dmaj over even derangements in D_n",
           (2, 6), 5, _no_eps(F.even_derangement_D), [_spec("d", "even", "dmaj")]),
    _brute("der-d-maja", "Chow: natural maj over derangements in D_n",
           (2, 6), 5, _no_eps(F.derangement_D_majA), [_spec("d", "derangements", "maj-a")]),
    # Delta sets
    _brute("delta", "(signed) fmaj over B_n elements with positive last letter",
           (1, 6), 5, F.mahonian_Delta, [_spec("delta", "all", "fmaj", "len-b")], (1, -1)),
    _brute("delta-less", "(signed) fmaj over B_n elements with last letter in 1..n-1",
           (1, 6), 5, F.mahonian_DeltaLess, [_spec("delta-less", "all", "fmaj", "len-b")], (1, -1)),
    _brute("der-delta", "(signed) fmaj over derangements with positive last letter",
           (1, 6), 5, F.derangement_Delta, [_spec("delta", "derangements", "fmaj", "len-b")], (1, -1)),
    # counts
    _composite("counts-as", "even-length derangements in S_n: closed form and two recurrences",
               (1, 12), 12, _counts_check("as")),
    _composite("counts-ab", "even-length derangements in B_n: closed form and two recurrences",
               (1, 12), 12, _counts_check("ab")),
    _composite("counts-ad", "even-length derangements in D_n: closed form and two recurrences",
               (1, 12), 12, _counts_check("ad")),
    # decompositions, fibers, shuffles, bijections
    _composite("rel-bd", "D_n derangements split into the positive-last part and a B_{n-1} part",
               (2, 6), 5, _rel_bd),
    _composite("fiber-s", "Wachs: fibers of dp over S_n, plain and signed",
               (1, 6), 5, _fiber_check("s")),
    _composite("fiber-b", "Chow: fibers of dp over B_n, plain and signed",
               (1, 5), 4, _fiber_check("b")),
    _composite("fiber-delta-less", "fibers of dp over elements with last letter in 1..n-1",
               (2, 5), 4, _fiber_check("delta-less")),
    _composite("shuffle-gg", "Garsia-Gessel: maj over all shuffles",
               (2, 8), 6, _shuffle_check("maj-unsigned")),
    _composite("shuffle-fmaj", "Chow: fmaj over all shuffles of signed words",
               (2, 8), 6, _shuffle_check("fmaj")),
    _composite("shuffle-sb", "fmaj over shuffles ending in the smaller final letter",
               (2, 8), 6, _shuffle_check("fmaj-sb")),
    _composite("shuffle-refined", "maj over restricted shuffles with a fixed descent count",
               (2, 8), 6, _shuffle_check("maj-refined")),
    _composite("qchuvan", "q-Chu-Vandermonde summation for m, h <= 10",
               (0, 10), 6, _qchuvan),
    _composite("parity-a", "length A parity is preserved by dp on S_n",
               (1, 7), 6, _parity_check("s", LengthType.A)),
    _composite("parity-b", "length B parity is preserved by dp on B_n",
               (1, 6), 5, _parity_check("b", LengthType.B)),
    _composite("chow-shuffle", "Chow: psi_bar maps a dp fiber onto a shuffle set, keeping fmaj",
               (1, 5), 4, _chow_check(False)),
    _composite("chow-shuffle-ref", "psi_bar maps a restricted dp fiber onto restricted shuffles",
               (1, 5), 4, _chow_check(True)),
    _composite("golden-polynomials", "tabulated even-derangement and D_n derangement polynomials",
               (1, 6), 5, _golden),
]

REGISTRY: dict[str, IdentityDescriptor] = {d.id: d for d in _DESCRIPTORS}


def identity(id_: str) -> IdentityDescriptor:
    try:
        return REGISTRY[id_]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {id_!r}; known: {', '.join(REGISTRY)}") from None


def closed_form(id_: str, n: int, eps: Optional[int] = None) -> QPoly:
    """The closed form behind a polynomial identity, or the count as a constant."""
    desc = identity(id_)
    if id_.startswith("counts-"):
        return QPoly([formulas.even_derangement_count(id_.split("-")[1], n)])
    if desc.rhs is None:
        raise UnknownIdentity(f"{id_} has no single closed form")
    return desc.rhs(n, desc.eps[0] if eps is None else eps)


def verify(id_: str, n_max: Optional[int] = None, quick: bool = False,
           workers: Optional[int] = None, deadline: Optional[float] = None
           ) -> VerificationReport:
    """Check one identity for every n in its range, up to ``n_max`` if given.

    ``deadline`` is a ``time.perf_counter()`` value after which the remaining
    n are reported as SKIP.
    """
    desc = identity(id_)
    lo, hi = desc.n_range
    if quick:
        hi = min(hi, desc.quick_max)
    if n_max is not None:
        hi = n_max
    report = VerificationReport(desc.id, desc.anchor)
    for n in range(lo, hi + 1):
        if deadline is not None and time.perf_counter() > deadline:
            report.results.append(NResult(n, Status.SKIP, reason="time budget exhausted"))
            continue
        report.results.extend(desc.run(n, workers))
    return report


def verify_all(budget: Optional[float] = None, quick: bool = False,
               workers: Optional[int] = None,
               ids: Optional[Sequence[str]] = None) -> list[VerificationReport]:
    """Run every registered identity; ``budget`` caps the total wall time in seconds."""
    deadline = None if budget is None else time.perf_counter() + budget
    return [verify(i, quick=quick, workers=workers, deadline=deadline)
            for i in (ids or REGISTRY)]


def default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))
