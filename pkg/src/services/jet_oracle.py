"""
Filename: jet_oracle.py
Created Date: 2026-10-18
Description: Jet oracle service module.

This module checks the derivative lemmas behind the triangle criterion
exactly and decides, by direct linear algebra, whether vanishing to order W
at t0 = (1, 1) forces the coefficient of a vertex monomial to be zero. The
exact mode certifies its answer with rational arithmetic; the modular mode
eliminates over random 64-bit primes.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import flint

from src.algebra.core import (
    binomial,
    ceil_rational,
    falling_factorial,
    floor_rational,
    format_rational,
)
from src.algebra.linalg import (
    certify_row_span,
    integer_determinant,
    kernel_from_rref,
    random_prime,
    rank_of_rows,
    rref_mod_p,
)
from src.config.settings import config
from src.models.jets import (
    DerivativeOp,
    DerivativeTerm,
    JetSystem,
    LemmaCheck,
    LemmaSuiteReport,
    Monomial,
    ProofFrame,
    Verdict,
)
from src.models.matrix import IntMatrix
from src.models.triangle import Triangle
from src.services.triangle import (
    check_triangle_criterion,
    lattice_points,
    minimal_multiple,
    reflect,
    second_column_count,
    shear,
)
from src.utils.error_handler import CriterionError, OracleError, ValidationError
from src.utils.helpers import timed
from src.utils.validation import require_positive
from src.utils.logger import get_logger

logger = get_logger("coxcheck.services.jet_oracle")

MODES = ("exact", "modular")


# Derivative lemmas


def eval_derivative_at_t0(op: DerivativeOp, mono: Monomial) -> Fraction:
    """Value of op applied to x^i y^j at (1, 1)."""
    return sum(
        (term.coeff * falling_factorial(mono.i, term.p) * falling_factorial(mono.j, term.q)
         for term in op.terms),
        Fraction(0),
    )


def lemma22_operator(n: int, a: int, b: int) -> DerivativeOp:
    """D = Σ α_i ∂x^(n-i) ∂y^i with α_i = [b+n-i-1]_(n-i) / [a+n-i-1]_(n-i) · C(n, i)."""
    require_positive(n=n, a=a, b=b)
    terms = []
    for i in range(n + 1):
        alpha = Fraction(
            falling_factorial(b + n - i - 1, n - i),
            falling_factorial(a + n - i - 1, n - i),
        ) * binomial(n, i)
        terms.append(DerivativeTerm(alpha, n - i, i))
    return DerivativeOp(tuple(terms))


def verify_lemma22(n: int, a: int, b: int) -> LemmaCheck:
    """Apply the lemma operator to both monomial sets."""
    op = lemma22_operator(n, a, b)
    annihilates = all(
        eval_derivative_at_t0(op, Monomial(-a, b + j)) == 0 for j in range(n)
    )
    s1_value = eval_derivative_at_t0(op, Monomial(-(a + 1), b + n + 1))
    return LemmaCheck(annihilates_s2=annihilates, s1_value=s1_value)


def lemma25_operator(n: int, b: int) -> DerivativeOp:
    """Σ (-1)^i (b+n-i-1)!/(b-1)! C(n, i) ∂y^i."""
    require_positive(n=n, b=b)
    return DerivativeOp(tuple(
        DerivativeTerm(Fraction((-1) ** i * falling_factorial(b + n - i - 1, n - i) * binomial(n, i)), 0, i)
        for i in range(n + 1)
    ))


def verify_lemma25(n: int, b: int) -> bool:
    op = lemma25_operator(n, b)
    return all(eval_derivative_at_t0(op, Monomial(0, b + j)) == 0 for j in range(n))


def verify_lemma23(p_coeffs: Sequence, n: int) -> bool:
    """Σ (-1)^i p(i) C(n, i) = 0 for p of degree below n."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}")
    coeffs = [Fraction(c) for c in p_coeffs]
    degree = max((k for k, c in enumerate(coeffs) if c != 0), default=-1)
    if degree >= n:
        raise ValidationError(f"polynomial degree {degree} is not below n = {n}")

    def p(x):
        return sum((c * x ** k for k, c in enumerate(coeffs)), Fraction(0))

    return sum(((-1) ** i * p(i) * binomial(n, i) for i in range(n + 1)), Fraction(0)) == 0


def lemma_suite(n_max: int = 5, ab_max: int = 12, lemma25_max: int = 8, lemma23_max: int = 10) -> LemmaSuiteReport:
    """Sweep the three lemmas over their grids."""
    failures = []
    cases22 = 0
    for n in range(1, n_max + 1):
        for a in range(1, ab_max + 1):
            for b in range(1, ab_max + 1):
                cases22 += 1
                check = verify_lemma22(n, a, b)
                degenerate = a * (n + 1) == b * n
                if not check.annihilates_s2 or (check.s1_value == 0) != degenerate:
                    failures.append(f"lemma22 n={n} a={a} b={b}")

    cases25 = 0
    for n in range(1, lemma25_max + 1):
        for b in range(1, lemma25_max + 1):
            cases25 += 1
            if not verify_lemma25(n, b):
                failures.append(f"lemma25 n={n} b={b}")

    cases23 = 0
    for n in range(1, lemma23_max + 1):
        for k in range(n):
            cases23 += 1
            if not verify_lemma23([0] * k + [1], n):
                failures.append(f"lemma23 n={n} x^{k}")

    report = LemmaSuiteReport(
        lemma22_cases=cases22,
        lemma22_ok=not any(f.startswith("lemma22") for f in failures),
        lemma25_cases=cases25,
        lemma25_ok=not any(f.startswith("lemma25") for f in failures),
        lemma23_cases=cases23,
        lemma23_ok=not any(f.startswith("lemma23") for f in failures),
        failures=tuple(failures),
    )
    if report.passes:
        logger.success(f"✅ Lemma grids verified ({cases22 + cases25 + cases23} cases)")
    else:
        logger.warning(f"Lemma grid failures: {', '.join(failures)}")
    return report


# Proof frame


def normalize_for_proof(t: Triangle) -> Tuple[Triangle, int]:
    """Shear so that -2 < s2 < -1; returns the triangle and the shift."""
    if t.s2.denominator == 1:
        raise ValidationError(f"s2 = {format_rational(t.s2)} is an integer; no normalizing shear exists")
    shift = -2 - floor_rational(t.s2)
    return shear(t, shift), shift


def _resolve_multiple(t: Triangle, m: Optional[int]) -> int:
    base = minimal_multiple(t)
    if m is None:
        return base
    if isinstance(m, bool) or not isinstance(m, int) or m < 1 or m % base:
        raise ValidationError(f"m = {m!r} is not a positive multiple of {base}")
    return m


def proof_frame(t: Triangle, m: Optional[int] = None) -> ProofFrame:
    """Normalize, possibly reflect, and translate m·Δ."""
    m = _resolve_multiple(t, m)
    reflected = False
    normalized, shift = normalize_for_proof(t)
    n = second_column_count(normalized)
    if n > 1 and normalized.s3 < 0:
        # second column from the right holds fewer than two points
        reflected = True
        normalized, shift = normalize_for_proof(reflect(t))
        n = second_column_count(normalized)

    sample = lattice_points(normalized, m)
    dx = int(-2 - m * normalized.x1)
    dy = int(-m * normalized.y2)
    points = tuple(sorted((x + dx, y + dy) for x, y in sample.points))
    vertex = (-2, int(m * normalized.y1) + dy)
    W = sample.W
    b = -normalized.s2 * W - n - 1
    return ProofFrame(
        original=t,
        triangle=normalized,
        shift=shift,
        reflected=reflected,
        m=m,
        W=W,
        n=n,
        points=points,
        vertex=vertex,
        a=W - n,
        b=int(b),
    )


def right_columns_profile(t: Triangle, m: Optional[int] = None) -> bool:
    """True iff the right n columns of the frame form the staircase (W-n-1+i, j), i + j < n."""
    if not check_triangle_criterion(t).passes:
        raise CriterionError("the right-column staircase is only defined for passing triangles")
    frame = proof_frame(t, m)
    n, W = frame.n, frame.W
    expected = {(W - n - 1 + i, j) for i in range(n) for j in range(n - i)}
    actual = {p for p in frame.points if p[0] >= W - n - 1}
    return actual == expected


def remark26_check(t: Triangle, m: Optional[int] = None) -> bool:
    """∂x^(W-2) ∂y kills every lattice monomial except the left vertex."""
    report = check_triangle_criterion(t)
    if report.n != 1:
        raise ValidationError(f"the single-point path needs n = 1, got n = {report.n}")
    if not report.passes:
        raise CriterionError("the single-point path needs a passing triangle")
    m = _resolve_multiple(t, m)

    # the unique integer in [s1, s2]
    z = ceil_rational(t.s1)
    framed = shear(reflect(t), z)
    sample = lattice_points(framed, m)
    W = sample.W
    if W < 2:
        raise ValidationError(f"W = {W} < 2; choose larger m")
    dx = int(W - 1 - m * framed.x2)
    dy = int(-m * framed.y2)
    left = (int(m * framed.x1) + dx, int(m * framed.y1) + dy)

    for x, y in sample.points:
        i, j = x + dx, y + dy
        value = falling_factorial(i, W - 2) * j
        if (i, j) == left:
            if value == 0:
                return False
        elif value != 0:
            return False
    return True


# Vanishing oracle


@dataclass(frozen=True)
class PrimeOutcome:
    """Per-prime result of the modular oracle"""
    prime: int
    rank: int
    rank_with_vertex: int
    forced: bool
    column_sums_forced: bool


def jet_matrix_mod_p(points: Sequence[Tuple[int, int]], W: int, prime: int) -> "flint.nmod_mat":
    """Constraint matrix over F_p, rows (p, q) lexicographic with p + q < W."""
    offsets = []
    total = 0
    for p in range(W):
        offsets.append(total)
        total += W - p

    def residues(k):
        values = [1]
        for l in range(1, W):
            values.append(values[-1] * (k - l + 1) % prime)
        return values

    fx = {i: residues(i) for i in {pt[0] for pt in points}}
    fy = {j: residues(j) for j in {pt[1] for pt in points}}
    matrix = flint.nmod_mat(total, len(points), prime)
    for col, (i, j) in enumerate(points):
        # [k]_l vanishes for 0 <= k < l
        p_max = min(i, W - 1) if i >= 0 else W - 1
        q_cap = j if j >= 0 else W - 1
        xi, yj = fx[i], fy[j]
        for p in range(p_max + 1):
            xp = xi[p]
            if not xp:
                continue
            base = offsets[p]
            for q in range(min(q_cap, W - 1 - p) + 1):
                value = xp * yj[q] % prime
                if value:
                    matrix[base + q, col] = value
    return matrix


def _modular_outcome(points: Tuple[Tuple[int, int], ...], W: int, vertex_index: int, prime: int) -> PrimeOutcome:
    matrix = jet_matrix_mod_p(points, W, prime)
    reduced, rank, pivots = rref_mod_p(matrix)
    cols = len(points)
    kernel = kernel_from_rref(reduced, pivots, cols, prime)
    forced = all(k[vertex_index] == 0 for k in kernel)

    # kernel of the constraints with the vertex row appended
    restricted = kernel
    if not forced:
        anchor = next(k for k in kernel if k[vertex_index])
        scale = pow(anchor[vertex_index], -1, prime)
        restricted = []
        for k in kernel:
            if k is anchor:
                continue
            factor = k[vertex_index] * scale % prime
            restricted.append([(x - factor * y) % prime for x, y in zip(k, anchor)])

    column_of = [x for x, _ in points]
    column_sums_forced = True
    for k in restricted:
        sums: Dict[int, int] = {}
        for x, value in zip(column_of, k):
            sums[x] = (sums.get(x, 0) + value) % prime
        if any(sums.values()):
            column_sums_forced = False
            break

    return PrimeOutcome(
        prime=prime,
        rank=rank,
        rank_with_vertex=rank if forced else rank + 1,
        forced=forced,
        column_sums_forced=column_sums_forced,
    )


def column_sum_matrix(frame: ProofFrame) -> IntMatrix:
    """Action of the ∂x^l rows on column sums, plus the vertex row."""
    xs = list(range(-2, frame.W - 1))
    rows = [[falling_factorial(x, l) for x in xs] for l in range(frame.W)]
    rows.append([int(x == frame.vertex[0]) for x in xs])
    return IntMatrix.from_rows(rows)


class JetOracle:
    """Forced-vanishing oracle configured from the oracle settings"""

    def __init__(self, settings: Optional[Dict] = None):
        settings = dict(config.get("oracle", {}) if settings is None else settings)
        self.mode = settings.get("mode", "modular")
        self.prime_count = settings.get("primeCount", 2)
        bits = settings.get("primeBits", {}) or {}
        self.low_bits = bits.get("low", 50)
        self.high_bits = bits.get("high", 62)
        self.max_attempts = settings.get("maxAttempts", 3)
        self.jobs = settings.get("jobs", 1)
        self.rng = random.Random(settings.get("seed"))

    def _draw_primes(self, count: int) -> List[int]:
        primes = []
        while len(primes) < count:
            prime = random_prime(self.rng, self.low_bits, self.high_bits)
            if prime not in primes:
                primes.append(prime)
        return primes

    def run(self, t: Triangle, m: Optional[int] = None, mode: Optional[str] = None,
            prime_count: Optional[int] = None, double: bool = False) -> Verdict:
        mode = mode or self.mode
        if mode not in MODES:
            raise ValidationError(f"unknown oracle mode {mode!r}; expected one of {', '.join(MODES)}")
        prime_count = prime_count or self.prime_count
        if prime_count < 1:
            raise ValidationError("at least one prime is required")

        verdict = self._run_once(t, m, mode, prime_count)
        if double:
            doubled = self._run_once(t, 2 * verdict.m, mode, prime_count)
            verdict = replace(verdict, doubled=doubled)
        return verdict

    def _run_once(self, t: Triangle, m: Optional[int], mode: str, prime_count: int) -> Verdict:
        with timed() as watch:
            frame = proof_frame(t, m)
            if frame.W < 2:
                raise ValidationError(f"W = {frame.W} imposes no vanishing constraints; choose larger m")
            if frame.a <= 0 or frame.b <= 0:
                raise ValidationError(
                    f"a = {frame.a}, b = {frame.b} after normalization; choose larger m"
                )
            system = JetSystem.from_frame(frame)
            rows, cols = system.shape
            logger.info(
                f"Jet system m = {frame.m}, W = {frame.W}: {rows} x {cols} ({mode} mode)"
            )
            if mode == "exact":
                primes, rank, rank_v, forced, sums_forced, agree = self._exact(system, frame)
            else:
                primes, rank, rank_v, forced, sums_forced, agree = self._modular(frame, prime_count)

        verdict = Verdict(
            m=frame.m,
            W=frame.W,
            rows=rows,
            cols=cols,
            mode=mode,
            primes=tuple(primes),
            rank_m=rank,
            rank_with_vertex=rank_v,
            forced_vanishing=forced,
            column_sums_forced=sums_forced,
            primes_agree=agree,
            reflected=frame.reflected,
            vertex=frame.original_vertex,
            elapsed=watch.elapsed,
        )
        if forced:
            logger.success(f"✅ Vertex coefficient forced to vanish at m = {frame.m}")
        else:
            logger.info(f"Vertex coefficient not forced at m = {frame.m}")
        return verdict

    def _exact(self, system: JetSystem, frame: ProofFrame):
        rows = system.dense_rows()
        cols = len(system.monomials)
        target = [0] * cols
        target[frame.vertex_index] = 1

        for attempt in range(1, self.max_attempts + 1):
            prime = random_prime(self.rng, self.low_bits, self.high_bits)
            outcome = certify_row_span(rows, target, prime)
            if outcome is not None:
                break
            logger.warning(f"No certificate at prime {prime} (attempt {attempt}/{self.max_attempts})")
        else:
            raise OracleError(f"exact certification failed after {self.max_attempts} primes")

        forced, _ = outcome
        # exact rank over Q; the certificate pivot block can be smaller
        rank = rank_of_rows(rows, cols)
        sums_forced = self._exact_column_sums(rows, target, frame, prime)
        return [prime], rank, rank if forced else rank + 1, forced, sums_forced, True

    def _exact_column_sums(self, rows, target, frame: ProofFrame, prime: int) -> bool:
        if integer_determinant(column_sum_matrix(frame)) != 0:
            return True
        logger.warning("Column-sum block is singular; checking each column sum directly")
        stacked = rows + [target]
        for x in sorted({pt[0] for pt in frame.points}):
            functional = [int(pt[0] == x) for pt in frame.points]
            outcome = certify_row_span(stacked, functional, prime)
            if outcome is None:
                raise OracleError(f"column-sum certification failed at prime {prime}")
            if not outcome[0]:
                return False
        return True

    def _modular(self, frame: ProofFrame, prime_count: int):
        primes = self._draw_primes(prime_count)
        args = [(frame.points, frame.W, frame.vertex_index, p) for p in primes]
        if self.jobs > 1 and prime_count > 1:
            with ProcessPoolExecutor(max_workers=min(self.jobs, prime_count)) as pool:
                outcomes = list(pool.map(_modular_outcome, *zip(*args)))
        else:
            outcomes = [_modular_outcome(*arg) for arg in args]

        signature = {(o.rank, o.rank_with_vertex, o.forced, o.column_sums_forced) for o in outcomes}
        agree = len(signature) == 1
        chosen = max(outcomes, key=lambda o: (o.rank, o.rank_with_vertex))
        if not agree:
            logger.warning(
                "Primes disagree: "
                + "; ".join(f"p={o.prime} rank={o.rank} forced={o.forced}" for o in outcomes)
                + f". Using p={chosen.prime}"
            )
        return (primes, chosen.rank, chosen.rank_with_vertex, chosen.forced,
                chosen.column_sums_forced, agree)


def vanishing_oracle(t: Triangle, m: Optional[int] = None, mode: Optional[str] = None,
                     prime_count: Optional[int] = None, double: bool = False) -> Verdict:
    """Decide whether the vertex coefficient is forced to vanish at multiple m."""
    return JetOracle().run(t, m, mode=mode, prime_count=prime_count, double=double)
