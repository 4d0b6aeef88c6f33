"""
Filename: jets.py
Created Date: 2026-10-18
Description: Jet constraint data models.

Lattice points of a scaled triangle are read as Laurent monomials x^i y^j.
A jet constraint is the value of a partial derivative at t0 = (1, 1), which
is linear in the monomial coefficients.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..algebra.core import falling_factorial, format_rational
from ..utils.error_handler import ValidationError
from .triangle import Triangle


class Monomial(NamedTuple):
    """Laurent monomial x^i y^j"""
    i: int
    j: int


class DerivativeTerm(NamedTuple):
    """coeff · ∂x^p ∂y^q"""
    coeff: Fraction
    p: int
    q: int


@dataclass(frozen=True)
class DerivativeOp:
    """Linear combination of partial derivatives"""
    terms: Tuple[DerivativeTerm, ...]

    def __post_init__(self):
        orders = [(t.p, t.q) for t in self.terms]
        if len(set(orders)) != len(orders):
            raise ValidationError("derivative operator has duplicate (p, q) terms")
        if any(t.p < 0 or t.q < 0 for t in self.terms):
            raise ValidationError("derivative orders must be non-negative")

    def coefficient(self, p: int, q: int) -> Fraction:
        for term in self.terms:
            if (term.p, term.q) == (p, q):
                return term.coeff
        return Fraction(0)

    def to_dict(self) -> Dict:
        return {"terms": [[format_rational(t.coeff), t.p, t.q] for t in self.terms]}


@dataclass(frozen=True)
class LemmaCheck:
    """Outcome of the two-set derivative check"""
    annihilates_s2: bool
    s1_value: Fraction

    def to_dict(self) -> Dict:
        return {"annihilates_s2": self.annihilates_s2, "s1_value": format_rational(self.s1_value)}


@dataclass(frozen=True)
class LemmaSuiteReport:
    """Grid sweeps of the derivative lemmas"""
    lemma22_cases: int
    lemma22_ok: bool
    lemma25_cases: int
    lemma25_ok: bool
    lemma23_cases: int
    lemma23_ok: bool
    failures: Tuple[str, ...] = ()

    @property
    def passes(self) -> bool:
        return self.lemma22_ok and self.lemma25_ok and self.lemma23_ok

    def to_dict(self) -> Dict:
        return {
            "lemma22": {"cases": self.lemma22_cases, "ok": self.lemma22_ok},
            "lemma25": {"cases": self.lemma25_cases, "ok": self.lemma25_ok},
            "lemma23": {"cases": self.lemma23_cases, "ok": self.lemma23_ok},
            "failures": list(self.failures),
            "passes": self.passes,
        }


@dataclass(frozen=True)
class ProofFrame:
    """Scaled triangle sheared to -2 < s2 < -1 and translated.

    The tested vertex sits at x = -2 and the right vertex on the x-axis.
    """
    original: Triangle
    triangle: Triangle
    shift: int
    reflected: bool
    m: int
    W: int
    n: int
    points: Tuple[Tuple[int, int], ...]
    vertex: Tuple[int, int]
    a: int
    b: int

    @property
    def vertex_index(self) -> int:
        return self.points.index(self.vertex)

    @property
    def original_vertex(self) -> Tuple[Fraction, Fraction]:
        """Tested vertex of m·Δ in the original coordinates"""
        t = self.original
        if self.reflected:
            return (self.m * t.x2, self.m * t.y2)
        return (self.m * t.x1, self.m * t.y1)


@dataclass(frozen=True)
class JetSystem:
    """Jet constraints of order below W on the monomials of a proof frame"""
    triangle: Triangle
    m: int
    W: int
    monomials: Tuple[Monomial, ...]
    orders: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_frame(cls, frame: ProofFrame) -> "JetSystem":
        orders = tuple((p, q) for p in range(frame.W) for q in range(frame.W - p))
        return cls(
            triangle=frame.triangle,
            m=frame.m,
            W=frame.W,
            monomials=tuple(Monomial(i, j) for i, j in frame.points),
            orders=orders,
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.orders), len(self.monomials))

    def entry(self, row: int, col: int) -> int:
        p, q = self.orders[row]
        mono = self.monomials[col]
        return falling_factorial(mono.i, p) * falling_factorial(mono.j, q)

    def dense_rows(self) -> List[List[int]]:
        """Exact constraint matrix, rows in the order of self.orders"""
        xs = {m.i for m in self.monomials}
        ys = {m.j for m in self.monomials}
        fx = {i: _falling_row(i, self.W) for i in xs}
        fy = {j: _falling_row(j, self.W) for j in ys}
        return [
            [fx[mono.i][p] * fy[mono.j][q] for mono in self.monomials]
            for p, q in self.orders
        ]


def _falling_row(k: int, length: int) -> List[int]:
    """[k]_0, [k]_1, ..., [k]_{length-1}"""
    values = [1]
    for l in range(1, length):
        values.append(values[-1] * (k - l + 1))
    return values[:length]


@dataclass(frozen=True)
class Verdict:
    """Result of the forced-vanishing oracle at one multiple m"""
    m: int
    W: int
    rows: int
    cols: int
    mode: str
    primes: Tuple[int, ...]
    rank_m: int
    rank_with_vertex: int
    forced_vanishing: bool
    column_sums_forced: bool
    primes_agree: bool
    reflected: bool
    vertex: Tuple[Fraction, Fraction]
    elapsed: float = 0.0
    doubled: Optional["Verdict"] = field(default=None, compare=False)

    def to_dict(self, include_timing: bool = True) -> Dict:
        data = {
            "m": self.m,
            "W": self.W,
            "rows": self.rows,
            "cols": self.cols,
            "mode": self.mode,
            "primes": list(self.primes),
            "rank_m": self.rank_m,
            "rank_with_vertex": self.rank_with_vertex,
            "forced_vanishing": self.forced_vanishing,
            "column_sums_forced": self.column_sums_forced,
            "primes_agree": self.primes_agree,
            "reflected": self.reflected,
            "vertex": [format_rational(c) for c in self.vertex],
        }
        if include_timing:
            data["elapsed"] = round(self.elapsed, 3)
        if self.doubled is not None:
            data["doubled"] = self.doubled.to_dict(include_timing)
        return data
