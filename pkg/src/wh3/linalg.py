"""Sparse Gaussian elimination over Q(q, u, s) and over prime fields.

Vectors are dicts keyed by monomial words (tuples of generator ranks) with
scalar or integer coefficients; the pivot of a row is its deg-lex-maximal
word.  An Echelon accumulates rows incrementally; membership of a vector in
the accumulated span is decided by lead-chasing reduction, which is exact.

The modular variant evaluates exact coefficients at a random point of
GF(p)^3 (with q, u, s nonzero so the invertible parameters stay invertible).
A vanishing denominator at the chosen point triggers a bounded resample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .scalars import Scalar, ScalarModularError

__all__ = [
    "deglex_key",
    "ScalarEchelon",
    "ModEchelon",
    "ModularPoint",
    "eval_vec_mod",
    "with_modular_retries",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
]

DEFAULT_PRIME = 2147483647  # largest signed-32-bit prime
DEFAULT_SEED = 12345
MODULAR_RETRIES = 8


def deglex_key(word: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Total order key: degree first, then lexicographic on generator ranks."""
    return (len(word), word)


class ScalarEchelon:
    """Row-echelon span basis over Q(q, u, s), keyed by pivot word."""

    def __init__(self, key=deglex_key):
        self.key = key
        self.rows: dict[tuple[int, ...], dict[tuple[int, ...], Scalar]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[tuple[int, ...], Scalar]) -> dict[tuple[int, ...], Scalar]:
        """Lead-chase vec against the basis; the residual is 0 iff vec is in the span."""
        vec = {w: c for w, c in vec.items() if not c.is_zero}
        while vec:
            lead = max(vec, key=self.key)
            row = self.rows.get(lead)
            if row is None:
                return vec
            factor = vec[lead]
            for w, c in row.items():
                acc = vec.get(w)
                new = (acc - factor * c) if acc is not None else -(factor * c)
                if new.is_zero:
                    vec.pop(w, None)
                else:
                    vec[w] = new
        return vec

    def insert(self, vec: dict[tuple[int, ...], Scalar]):
        """Reduce and, if independent, store monic; returns the new pivot or None."""
        residual = self.reduce(dict(vec))
        if not residual:
            return None
        lead = max(residual, key=self.key)
        inv = residual[lead].inverse()
        self.rows[lead] = {w: c * inv for w, c in residual.items()}
        return lead

    def interreduce(self):
        """Reduce every stored row's tail against the other rows (reduced echelon)."""
        for lead in sorted(self.rows, key=self.key):
            row = self.rows.pop(lead)
            tail = {w: c for w, c in row.items() if w != lead}
            tail = self.reduce(tail)
            tail[lead] = Scalar.one()
            self.rows[lead] = tail


class ModEchelon:
    """Row-echelon span basis over GF(p), keyed by pivot word."""

    def __init__(self, prime: int, key=deglex_key):
        self.prime = prime
        self.key = key
        self.rows: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict[tuple[int, ...], int]) -> dict[tuple[int, ...], int]:
        p = self.prime
        vec = {w: c % p for w, c in vec.items() if c % p}
        while vec:
            lead = max(vec, key=self.key)
            row = self.rows.get(lead)
            if row is None:
                return vec
            factor = vec[lead]
            for w, c in row.items():
                new = (vec.get(w, 0) - factor * c) % p
                if new:
                    vec[w] = new
                else:
                    vec.pop(w, None)
        return vec

    def insert(self, vec: dict[tuple[int, ...], int]):
        residual = self.reduce(dict(vec))
        if not residual:
            return None
        lead = max(residual, key=self.key)
        inv = pow(residual[lead], -1, self.prime)
        self.rows[lead] = {w: (c * inv) % self.prime for w, c in residual.items()}
        return lead


@dataclass(frozen=True)
class ModularPoint:
    """A reproducible evaluation point for modular verification."""

    prime: int
    seed: int
    attempt: int
    values: tuple[int, int, int]

    @staticmethod
    def generate(prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED, attempt: int = 0) -> "ModularPoint":
        rng = random.Random((seed << 16) ^ (attempt * 0x9E3779B9))
        # q, u, s nonzero keeps denominators built from parameter powers alive
        values = tuple(rng.randrange(2, prime - 1) for _ in range(3))
        return ModularPoint(prime, seed, attempt, values)


def eval_vec_mod(vec: dict[tuple[int, ...], Scalar], point: ModularPoint) -> dict[tuple[int, ...], int]:
    """Evaluate an exact vector entrywise; raises ScalarModularError on bad points."""
    out: dict[tuple[int, ...], int] = {}
    for w, c in vec.items():
        v = c.eval_mod(point.prime, point.values)
        if v:
            out[w] = v
    return out


def with_modular_retries(func, prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED):
    """Run func(point) resampling the point when a denominator vanishes."""
    last_error = None
    for attempt in range(MODULAR_RETRIES):
        point = ModularPoint.generate(prime, seed, attempt)
        try:
            return point, func(point)
        except ScalarModularError as err:
            last_error = err
    raise ScalarModularError(
        f"no usable modular point after {MODULAR_RETRIES} attempts: {last_error}"
    )


def solve_linear(rows):
    """Solve a sparse exact linear system given as (coefficients, rhs) pairs.

    Each row is a dict unknown-key -> Scalar plus a Scalar right-hand side.
    Unknown keys must be totally ordered (tuples).  Returns a dict assigning
    every pivot unknown (free unknowns are zero), or None if inconsistent.
    """
    pivots: dict = {}
    for cols, b in rows:
        cols = {k: v for k, v in cols.items() if not v.is_zero}
        while cols:
            lead = max(cols)
            if lead in pivots:
                prow, pb = pivots[lead]
                factor = cols.pop(lead)
                for k, v in prow.items():
                    nv = cols.get(k, _SCALAR_ZERO) - factor * v
                    if nv.is_zero:
                        cols.pop(k, None)
                    else:
                        cols[k] = nv
                b = b - factor * pb
            else:
                inv = cols[lead].inverse()
                cols = {k: v * inv for k, v in cols.items()}
                b = b * inv
                row = dict(cols)
                row.pop(lead)
                pivots[lead] = (row, b)
                break
        else:
            if not b.is_zero:
                return None
    solution: dict = {}
    # pivot rows only reference strictly smaller keys, so solve ascending
    for lead in sorted(pivots):
        row, b = pivots[lead]
        value = b
        for k, v in row.items():
            value = value - v * solution.get(k, _SCALAR_ZERO)
        solution[lead] = value
    return solution


_SCALAR_ZERO = Scalar.zero()


@dataclass
class SpanDiff:
    """Outcome of a two-sided span comparison."""

    verdict: str  # equal | A_subset_B | B_subset_A | incomparable
    rank_a: int = 0
    rank_b: int = 0
    witness_a_not_in_b: dict | None = field(default=None, repr=False)
    witness_b_not_in_a: dict | None = field(default=None, repr=False)


def compare_spans(rows_a, rows_b, key=deglex_key) -> SpanDiff:
    """Exact row-space comparison of two collections of sparse vectors."""
    ech_a = ScalarEchelon(key)
    for row in rows_a:
        ech_a.insert(row)
    ech_b = ScalarEchelon(key)
    for row in rows_b:
        ech_b.insert(row)
    witness_b = None
    for row in rows_b:
        residual = ech_a.reduce(dict(row))
        if residual:
            witness_b = residual
            break
    witness_a = None
    for row in rows_a:
        residual = ech_b.reduce(dict(row))
        if residual:
            witness_a = residual
            break
    if witness_a is None and witness_b is None:
        verdict = "equal"
    elif witness_a is None:
        verdict = "A_subset_B"
    elif witness_b is None:
        verdict = "B_subset_A"
    else:
        verdict = "incomparable"
    return SpanDiff(verdict, ech_a.rank, ech_b.rank, witness_a, witness_b)
