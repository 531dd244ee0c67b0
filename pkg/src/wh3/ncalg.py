"""Free graded noncommutative algebra with quadratic rewriting.

Elements are finite scalar combinations of words over a ranked alphabet.
Quadratic presentations are oriented into monic, strictly deg-lex-decreasing
rewrite rules; normal forms, overlap (diamond) analysis, graded derivations,
degree-bounded ideal membership and span comparison are built on top.

Normalization is linear in the element (each word is rewritten independently,
leftmost redex first, with per-word memoization).  That linearity is what
makes the membership oracle below exact: an element lies in the span of
bounded relation multiples iff its normal form lies in the span of the normal
forms of those multiples, whether or not the rule system is confluent.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    ModEchelon,
    ScalarEchelon,
    compare_spans,
    deglex_key,
    eval_vec_mod,
    with_modular_retries,
)
from .scalars import Scalar, format_scalar

__all__ = [
    "Generator",
    "Alphabet",
    "EMPTY_ALPHABET",
    "Element",
    "PresentationSpec",
    "RuleSystem",
    "RewriteBudgetError",
    "InconsistentPresentationError",
    "DegreeBoundError",
    "DerivationError",
    "orient",
    "overlap_resolve",
    "ConfluenceReport",
    "derivation_apply",
    "MembershipOracle",
    "MembershipReport",
    "ideal_membership",
    "span_compare",
    "SpanComparison",
    "algebra_tensor",
    "specialize",
    "presentation_to_json",
    "presentation_from_json",
]

DEFAULT_REWRITE_BUDGET = 2_000_000
DEFAULT_MEMBERSHIP_DEGREE = 4
MEMBERSHIP_ROW_CAP = 400_000


class RewriteBudgetError(RuntimeError):
    """The rewrite step cap was exceeded (non-terminating or explosive system)."""


class InconsistentPresentationError(ValueError):
    """A presentation cannot be oriented into a sound quadratic rule system."""


class DegreeBoundError(ValueError):
    """A degree-bounded computation was asked to exceed its bound."""


class DerivationError(ValueError):
    """A derivation was applied to a generator without an assigned image."""


# ---------------------------------------------------------------------------
# alphabet and elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int = 0  # 1 for odd (one-form) generators
    rank: int = 0
    weight: int = 1  # order weight; straightening tables need some letters lighter


class Alphabet:
    """An ordered list of generators; rank equals position.

    Words are compared by weighted deg-lex: total generator weight first,
    then lexicographically by rank.  With all weights 1 this is plain
    deg-lex; the catalog algebras give their third-index generators weight 1
    against 2 for the others (reversed for derivatives) so that every printed
    relation table orients into strictly decreasing rules.
    """

    def __init__(self, generators: Sequence[Generator]):
        gens = tuple(generators)
        for rank, gen in enumerate(gens):
            if gen.rank != rank:
                raise ValueError(f"generator {gen.name!r} has rank {gen.rank}, expected {rank}")
            if gen.weight < 1:
                raise ValueError("generator weights must be positive")
        if len({g.name for g in gens}) != len(gens):
            raise ValueError("generator names must be unique")
        self.generators = gens
        self._by_name = {g.name: g for g in gens}
        self.parities = tuple(g.parity for g in gens)
        self.weights = tuple(g.weight for g in gens)

    @staticmethod
    def build(specs: Sequence[tuple]) -> "Alphabet":
        gens = []
        for rank, spec in enumerate(specs):
            name, parity = spec[0], spec[1]
            weight = spec[2] if len(spec) > 2 else 1
            gens.append(Generator(name, parity, rank, weight))
        return Alphabet(tuple(gens))

    def word_key(self, word: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
        return (sum(self.weights[g] for g in word), word)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def rank_of(self, name: str):
        gen = self._by_name.get(name)
        return None if gen is None else gen.rank

    def word_parity(self, word: tuple[int, ...]) -> int:
        return sum(self.parities[g] for g in word) & 1

    def format_word(self, word: tuple[int, ...]) -> str:
        if not word:
            return "1"
        return "*".join(self.generators[g].name for g in word)

    def compatible_with(self, other: "Alphabet") -> bool:
        return self is other or (
            self.names() == other.names()
            and self.parities == other.parities
            and self.weights == other.weights
        )


EMPTY_ALPHABET = Alphabet(())


class Element:
    """A noncommutative polynomial: a finite map word -> nonzero Scalar."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.alphabet = alphabet
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero}

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(alphabet: Alphabet) -> "Element":
        return Element(alphabet)

    @staticmethod
    def from_scalar(alphabet: Alphabet, value) -> "Element":
        if isinstance(value, (int, Fraction)):
            value = Scalar.from_fraction(value)
        return Element(alphabet, {(): value})

    @staticmethod
    def from_word(alphabet: Alphabet, word: tuple[int, ...], coeff=None) -> "Element":
        coeff = Scalar.one() if coeff is None else coeff
        return Element(alphabet, {tuple(word): coeff})

    @staticmethod
    def generator(alphabet: Alphabet, name: str) -> "Element":
        rank = alphabet.rank_of(name)
        if rank is None:
            raise ValueError(f"unknown generator {name!r}")
        return Element.from_word(alphabet, (rank,))

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Element"):
        if not self.alphabet.compatible_with(other.alphabet):
            raise ValueError("elements live over different alphabets")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            new = c if acc is None else acc + c
            if new.is_zero:
                out.pop(w, None)
            else:
                out[w] = new
        return Element(self.alphabet, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            out: dict[tuple[int, ...], Scalar] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    acc = out.get(w)
                    new = c if acc is None else acc + c
                    if new.is_zero:
                        out.pop(w, None)
                    else:
                        out[w] = new
            return Element(self.alphabet, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "Element":
        if isinstance(value, (int, Fraction)):
            value = Scalar.from_fraction(value)
        if value.is_zero:
            return Element(self.alphabet)
        return Element(self.alphabet, {w: c * value for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.alphabet.compatible_with(other.alphabet) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- structure -----------------------------------------------------------

    def lead_word(self) -> tuple[int, ...]:
        if not self.terms:
            raise ValueError("zero element has no lead word")
        return max(self.terms, key=self.alphabet.word_key)

    def degree(self) -> int:
        """Maximal word length (0 for the zero element)."""
        return max((len(w) for w in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        lengths = {len(w) for w in self.terms}
        return len(lengths) <= 1

    def homogeneous_component(self, degree: int) -> "Element":
        return Element(self.alphabet, {w: c for w, c in self.terms.items() if len(w) == degree})

    def scalar_value(self):
        """The coefficient of the empty word if no generator occurs, else None."""
        if not self.terms:
            return Scalar.zero()
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def coefficient(self, word: tuple[int, ...]) -> Scalar:
        return self.terms.get(tuple(word), Scalar.zero())

    def map_coefficients(self, fn) -> "Element":
        return Element(self.alphabet, {w: fn(c) for w, c in self.terms.items()})

    def substitute_params(self, bindings: Mapping[str, object]) -> "Element":
        return self.map_coefficients(lambda c: c.substitute(bindings))

    # -- formatting ----------------------------------------------------------

    def format(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for word in sorted(self.terms, key=deglex_key):
            coeff = self.terms[word]
            if coeff.leading_sign() < 0:
                sign, body_scalar = "-", -coeff
            else:
                sign, body_scalar = "+", coeff
            body = _format_coefficient(body_scalar, bool(word))
            word_str = self.alphabet.format_word(word)
            if not word:
                text = body if body else "1"
            elif body:
                text = f"{body}*{word_str}"
            else:
                text = word_str
            pieces.append((sign, text))
        sign, text = pieces[0]
        out = text if sign == "+" else f"-{text}"
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Element({self.format()!r})"


def _format_coefficient(value: Scalar, has_word: bool) -> str:
    """Render a (sign-positive) coefficient; empty string means an implicit 1."""
    if has_word and value.is_one:
        return ""
    text = format_scalar(value)
    if has_word and (" " in text or "/" in text):
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# presentations and rewriting
# ---------------------------------------------------------------------------


@dataclass
class PresentationSpec:
    """An alphabet together with a list of relations (elements that vanish)."""

    name: str
    alphabet: Alphabet
    relations: list[Element] = dc_field(default_factory=list)

    def nonzero_relations(self) -> list[Element]:
        return [r for r in self.relations if not r.is_zero]

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.nonzero_relations()), default=0)

    def all_homogeneous(self) -> bool:
        return all(r.is_homogeneous() for r in self.nonzero_relations())


class RuleSystem:
    """Oriented rewrite rules lhs -> rhs with every rhs word deg-lex below lhs."""

    def __init__(self, alphabet: Alphabet, rules: Mapping[tuple[int, ...], Element],
                 budget: int = DEFAULT_REWRITE_BUDGET):
        self.alphabet = alphabet
        self.rules = dict(rules)
        self.budget = budget
        key = alphabet.word_key
        for lhs, rhs in self.rules.items():
            if len(lhs) < 2:
                raise ValueError("rule left sides must have length >= 2")
            for w in rhs.terms:
                if key(w) >= key(lhs):
                    raise ValueError(
                        f"rule {self.alphabet.format_word(lhs)} has non-decreasing right side"
                    )
        self._lhs_lengths = sorted({len(l) for l in self.rules}) or [2]
        self._nf_cache: dict[tuple[int, ...], Element] = {}

    def __len__(self) -> int:
        return len(self.rules)

    def find_redex(self, word: tuple[int, ...]):
        """Leftmost (then shortest) rule occurrence in word, or None."""
        for i in range(len(word)):
            for length in self._lhs_lengths:
                if i + length > len(word):
                    break
                cand = word[i : i + length]
                if cand in self.rules:
                    return i, cand
        return None

    def normalize_word(self, word: tuple[int, ...], counter: list[int] | None = None) -> Element:
        """Normal form of a single word (leftmost strategy, memoized)."""
        cache = self._nf_cache
        cached = cache.get(word)
        if cached is not None:
            return cached
        budget = self.budget
        stack = [tuple(word)]
        while stack:
            current = stack[-1]
            if current in cache:
                stack.pop()
                continue
            redex = self.find_redex(current)
            if redex is None:
                cache[current] = Element.from_word(self.alphabet, current)
                stack.pop()
                continue
            i, lhs = redex
            rhs = self.rules[lhs]
            prefix, suffix = current[:i], current[i + len(lhs):]
            children = [prefix + w + suffix for w in rhs.terms]
            missing = [c for c in children if c not in cache]
            if missing:
                stack.extend(missing)
                continue
            if counter is not None:
                counter[0] += 1
                if counter[0] > budget:
                    raise RewriteBudgetError(
                        f"rewrite budget exceeded at word {self.alphabet.format_word(current)}"
                    )
            total = Element.zero(self.alphabet)
            for w, c in rhs.terms.items():
                total = total + cache[prefix + w + suffix].scale(c)
            cache[current] = total
            stack.pop()
        return cache[word]

    def normalize(self, e: Element, strategy: str = "leftmost",
                  rng: random.Random | None = None, with_steps: bool = False):
        """Normal form of an element; linear in the element by construction."""
        if strategy == "leftmost":
            counter = [0]
            out = Element.zero(self.alphabet)
            for w, c in e.terms.items():
                out = out + self.normalize_word(w, counter).scale(c)
            return (out, counter[0]) if with_steps else out
        return self._normalize_strategy(e, strategy, rng, with_steps)

    def _normalize_strategy(self, e: Element, strategy: str,
                            rng: random.Random | None, with_steps: bool):
        """Unmemoized rewriting with a configurable redex choice (for tests)."""
        steps = 0
        work = [(w, c) for w, c in e.terms.items()]
        result: dict[tuple[int, ...], Scalar] = {}
        while work:
            word, coeff = work.pop()
            positions = []
            for i in range(len(word)):
                for length in self._lhs_lengths:
                    if i + length <= len(word) and word[i : i + length] in self.rules:
                        positions.append((i, word[i : i + length]))
            if not positions:
                acc = result.get(word)
                new = coeff if acc is None else acc + coeff
                if new.is_zero:
                    result.pop(word, None)
                else:
                    result[word] = new
                continue
            if strategy == "rightmost":
                i, lhs = positions[-1]
            elif strategy == "random":
                i, lhs = (rng or random).choice(positions)
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            steps += 1
            if steps > self.budget:
                raise RewriteBudgetError("rewrite budget exceeded")
            rhs = self.rules[lhs]
            prefix, suffix = word[:i], word[i + len(lhs):]
            for w, c in rhs.terms.items():
                work.append((prefix + w + suffix, coeff * c))
        out = Element(self.alphabet, result)
        return (out, steps) if with_steps else out

    def extended(self, extra_rules: Mapping[tuple[int, ...], Element]) -> "RuleSystem":
        merged = dict(self.rules)
        merged.update(extra_rules)
        return RuleSystem(self.alphabet, merged, self.budget)


# ---------------------------------------------------------------------------
# orientation
# ---------------------------------------------------------------------------


def orient(pres: PresentationSpec, budget: int = DEFAULT_REWRITE_BUDGET) -> RuleSystem:
    """Gaussian-reduce the relation span and read off monic decreasing rules.

    The relation vectors are brought to reduced row-echelon form with the
    deg-lex-maximal word of each row as pivot, so orientability does not
    depend on how the relations were written down.  Degenerate outcomes
    (a forced constant, a degree-1 pivot, or a monomial forced to vanish that
    was not presented as a monomial relation) are reported as errors rather
    than silently accepted.
    """
    alphabet = pres.alphabet
    original_monomials = set()
    echelon = ScalarEchelon(alphabet.word_key)
    for rel in pres.relations:
        if rel.is_zero:
            continue
        if rel.degree() > 2:
            raise InconsistentPresentationError(
                f"relation of degree {rel.degree()} > 2 cannot be oriented: {rel}"
            )
        if len(rel.terms) == 1:
            original_monomials.add(rel.lead_word())
        echelon.insert(dict(rel.terms))
    echelon.interreduce()
    rules: dict[tuple[int, ...], Element] = {}
    for lead in sorted(echelon.rows, key=alphabet.word_key):
        row = echelon.rows[lead]
        if len(lead) == 0:
            raise InconsistentPresentationError("presentation forces a nonzero constant to vanish")
        if len(lead) == 1:
            name = alphabet.generators[lead[0]].name
            raise InconsistentPresentationError(
                f"rank collapse: presentation forces a degree-1 relation led by {name}"
            )
        tail = {w: -c for w, c in row.items() if w != lead}
        if not tail and lead not in original_monomials:
            raise InconsistentPresentationError(
                f"inconsistent presentation: forces {alphabet.format_word(lead)} = 0"
            )
        rules[lead] = Element(alphabet, tail)
    return RuleSystem(alphabet, rules, budget)


# ---------------------------------------------------------------------------
# overlap analysis / bounded completion
# ---------------------------------------------------------------------------


@dataclass
class OverlapDefect:
    lhs_a: tuple[int, ...]
    lhs_b: tuple[int, ...]
    word: tuple[int, ...]
    difference: Element


@dataclass
class ConfluenceReport:
    confluent: bool
    overlaps_checked: int
    unresolved: list[OverlapDefect]
    rules_added: list[tuple[int, ...]]
    passes: int
    degree_bound_hit: bool
    system: RuleSystem


def _ambiguities(rules: Mapping[tuple[int, ...], Element]):
    """All overlap and inclusion ambiguities between rule left sides."""
    items = list(rules)
    for a in items:
        for b in items:
            # overlap: a proper suffix of a equals a proper prefix of b
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k :] == b[:k]:
                    word = a + b[k:]
                    yield word, (0, a), (len(a) - k, b)
            # inclusion: b occurs strictly inside a
            if len(b) < len(a):
                for i in range(len(a) - len(b) + 1):
                    if a[i : i + len(b)] == b and (i > 0 or len(b) < len(a)):
                        yield a, (0, a), (i, b)


def overlap_resolve(rs: RuleSystem, complete_up_to: int = 2, max_passes: int = 20) -> ConfluenceReport:
    """Check every overlap ambiguity; optionally complete up to a degree bound.

    For each word admitting two rule applications, both reduction paths are
    normalized and compared.  With complete_up_to > 2, nonzero differences
    are oriented (deg-lex-maximal word becomes the new left side) and added,
    iterating to a fixpoint or the degree bound.
    """
    system = rs
    added: list[tuple[int, ...]] = []
    degree_bound_hit = False
    passes = 0
    overlaps_checked = 0
    unresolved: list[OverlapDefect] = []
    while True:
        passes += 1
        unresolved = []
        seen = set()
        for word, (pos_a, lhs_a), (pos_b, lhs_b) in _ambiguities(system.rules):
            key = (word, pos_a, lhs_a, pos_b, lhs_b)
            if key in seen or (pos_a, lhs_a) == (pos_b, lhs_b):
                continue
            seen.add(key)
            overlaps_checked += 1
            path_a = _apply_rule_at(system, word, pos_a, lhs_a)
            path_b = _apply_rule_at(system, word, pos_b, lhs_b)
            diff = system.normalize(path_a) - system.normalize(path_b)
            if not diff.is_zero:
                unresolved.append(OverlapDefect(lhs_a, lhs_b, word, diff))
        if not unresolved or complete_up_to <= 2 or passes >= max_passes:
            break
        new_rules = {}
        for defect in unresolved:
            lead = defect.difference.lead_word()
            if len(lead) < 2:
                continue  # degenerate defect: a rank collapse, not a rule
            if len(lead) > complete_up_to:
                degree_bound_hit = True
                continue
            inv = defect.difference.terms[lead].inverse()
            tail = {
                w: -(c * inv) for w, c in defect.difference.terms.items() if w != lead
            }
            new_rules[lead] = Element(system.alphabet, tail)
        if not new_rules:
            break
        added.extend(new_rules)
        system = system.extended(new_rules)
    return ConfluenceReport(
        confluent=not unresolved,
        overlaps_checked=overlaps_checked,
        unresolved=unresolved,
        rules_added=added,
        passes=passes,
        degree_bound_hit=degree_bound_hit,
        system=system,
    )


def _apply_rule_at(system: RuleSystem, word, pos, lhs) -> Element:
    prefix, suffix = word[:pos], word[pos + len(lhs):]
    out = Element.zero(system.alphabet)
    for w, c in system.rules[lhs].terms.items():
        out = out + Element.from_word(system.alphabet, prefix + w + suffix, c)
    return out


# ---------------------------------------------------------------------------
# graded derivations
# ---------------------------------------------------------------------------


def derivation_apply(images: Mapping[str, Element], e: Element) -> Element:
    """Extend generator images to a graded derivation (Leibniz with sign).

    The sign on the right factor is (-1)^k with k the number of odd letters
    to the left of the letter being differentiated.
    """
    alphabet = e.alphabet
    ranked: dict[int, Element] = {}
    for name, img in images.items():
        rank = alphabet.rank_of(name)
        if rank is None:
            raise DerivationError(f"image given for unknown generator {name!r}")
        ranked[rank] = img
    out = Element.zero(alphabet)
    for word, coeff in e.terms.items():
        parity = 0
        for i, g in enumerate(word):
            img = ranked.get(g)
            if img is None:
                raise DerivationError(
                    f"no derivation image assigned for generator "
                    f"{alphabet.generators[g].name!r}"
                )
            if not img.is_zero:
                signed = -coeff if parity else coeff
                piece = Element.from_word(alphabet, word[:i], signed)
                piece = piece * img * Element.from_word(alphabet, word[i + 1 :])
                out = out + piece
            parity ^= alphabet.parities[g]
    return out


# ---------------------------------------------------------------------------
# ideal membership
# ---------------------------------------------------------------------------


@dataclass
class MembershipReport:
    member: bool
    certain: bool
    route: str  # "reduction" | "linear-algebra" | "trivial"
    mode: str  # "exact" | "modular"
    degree: int
    span_rank: int = 0
    residual: Element | None = None
    prime: int | None = None
    seed: int | None = None
    point: tuple[int, int, int] | None = None
    note: str = ""


class MembershipOracle:
    """Degree-bounded two-sided ideal membership for a fixed presentation.

    The spanning rows { w1 * r * w2 } are pre-reduced to normal form; since
    normalization is linear and subtracts explicit ideal elements, membership
    of e is equivalent to membership of NF(e) in the span of the NF'd rows.
    For confluent systems almost every row collapses to zero, which keeps the
    exact eliminations small even at degree 4.
    """

    def __init__(self, pres: PresentationSpec, rules: RuleSystem | None = None,
                 max_degree: int = 8):
        self.pres = pres
        self.max_degree = max_degree
        if rules is None:
            try:
                rules = orient(pres)
            except InconsistentPresentationError:
                rules = None
        self.rules = rules
        self._row_cache: dict[tuple[int, bool], list[dict]] = {}
        self._exact_echelons: dict[tuple[int, bool], ScalarEchelon] = {}
        self._mod_echelons: dict = {}

    # -- row generation ------------------------------------------------------

    def _row_vectors(self, degree: int, reduced: bool) -> list[dict]:
        """Spanning rows w1*r*w2; pre-reduced to normal form when asked.

        The same (linear) normalization must be applied to rows and probe
        alike, so the reduced and raw row sets are cached separately.
        """
        cached = self._row_cache.get((degree, reduced))
        if cached is not None:
            return cached
        alphabet = self.pres.alphabet
        n = len(alphabet)
        relations = self.pres.nonzero_relations()
        homogeneous = self.pres.all_homogeneous()
        rows: list[dict] = []
        seen: set[frozenset] = set()
        count = 0
        for rel in relations:
            rdeg = rel.degree()
            if rdeg > degree:
                continue
            pad_totals = (
                [degree - rdeg] if homogeneous else range(degree - rdeg + 1)
            )
            for pad in pad_totals:
                for left_len in range(pad + 1):
                    right_len = pad - left_len
                    for w1 in itertools.product(range(n), repeat=left_len):
                        left = Element.from_word(alphabet, w1)
                        base = left * rel
                        for w2 in itertools.product(range(n), repeat=right_len):
                            count += 1
                            if count > MEMBERSHIP_ROW_CAP:
                                raise DegreeBoundError(
                                    f"membership row cap exceeded at degree {degree}"
                                )
                            row = base * Element.from_word(alphabet, w2)
                            if reduced:
                                row = self.rules.normalize(row)
                            if row.is_zero:
                                continue
                            key = frozenset(row.terms.items())
                            if key in seen:
                                continue
                            seen.add(key)
                            rows.append(dict(row.terms))
        self._row_cache[(degree, reduced)] = rows
        return rows

    def _exact_echelon(self, degree: int, reduced: bool) -> ScalarEchelon:
        ech = self._exact_echelons.get((degree, reduced))
        if ech is None:
            ech = ScalarEchelon(self.pres.alphabet.word_key)
            for row in self._row_vectors(degree, reduced):
                ech.insert(row)
            self._exact_echelons[(degree, reduced)] = ech
        return ech

    def _mod_echelon(self, degree: int, reduced: bool, point) -> ModEchelon:
        key = (degree, reduced, point)
        ech = self._mod_echelons.get(key)
        if ech is None:
            ech = ModEchelon(point.prime, self.pres.alphabet.word_key)
            for row in self._row_vectors(degree, reduced):
                ech.insert(eval_vec_mod(row, point))
            self._mod_echelons[key] = ech
        return ech

    # -- the oracle ----------------------------------------------------------

    def member(self, e: Element, degree: int | None = None, mode: str = "exact",
               pre_reduce: bool = True, prime: int = DEFAULT_PRIME,
               seed: int = DEFAULT_SEED) -> MembershipReport:
        if degree is None:
            degree = max(e.degree(), DEFAULT_MEMBERSHIP_DEGREE)
        if e.degree() > degree:
            raise DegreeBoundError(f"element degree {e.degree()} exceeds bound {degree}")
        if degree > self.max_degree:
            raise DegreeBoundError(f"degree {degree} exceeds configured bound {self.max_degree}")
        if e.is_zero:
            return MembershipReport(True, True, "trivial", "exact", degree)
        reduced = pre_reduce and self.rules is not None
        target = e
        if reduced:
            target = self.rules.normalize(e)
            if target.is_zero:
                return MembershipReport(
                    True, True, "reduction", "exact", degree,
                    note="normal form vanishes: explicit ideal decomposition",
                )
        if mode == "exact":
            ech = self._exact_echelon(degree, reduced)
            residual_vec = ech.reduce(dict(target.terms))
            residual = Element(self.pres.alphabet, residual_vec)
            return MembershipReport(
                member=residual.is_zero,
                certain=True,
                route="linear-algebra",
                mode="exact",
                degree=degree,
                span_rank=ech.rank,
                residual=None if residual.is_zero else residual,
            )
        if mode != "modular":
            raise ValueError(f"unknown membership mode {mode!r}")

        def attempt(point):
            ech = self._mod_echelon(degree, reduced, point)
            vec = eval_vec_mod(dict(target.terms), point)
            return ech, ech.reduce(vec)

        point, (ech, residual_vec) = with_modular_retries(attempt, prime, seed)
        member = not residual_vec
        return MembershipReport(
            member=member,
            # a nonzero residual certifies non-membership up to the (recorded,
            # astronomically unlikely) event that the evaluation point kills
            # every exact witness determinant; a zero residual is probabilistic
            certain=not member,
            route="linear-algebra",
            mode="modular",
            degree=degree,
            span_rank=ech.rank,
            residual=None if member else Element(self.pres.alphabet, {w: Scalar.from_fraction(c) for w, c in residual_vec.items()}),
            prime=point.prime,
            seed=point.seed,
            point=point.values,
        )


def ideal_membership(e: Element, pres: PresentationSpec, degree: int | None = None,
                     mode: str = "exact", pre_reduce: bool = True,
                     prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> MembershipReport:
    """One-shot degree-bounded ideal membership (see MembershipOracle)."""
    return MembershipOracle(pres).member(e, degree, mode, pre_reduce, prime, seed)


# ---------------------------------------------------------------------------
# span comparison
# ---------------------------------------------------------------------------


@dataclass
class SpanComparison:
    verdict: str  # equal | A_subset_B | B_subset_A | incomparable
    rank_a: int
    rank_b: int
    witness: Element | None = None


def span_compare(a: Sequence[Element] | PresentationSpec,
                 b: Sequence[Element] | PresentationSpec) -> SpanComparison:
    """Exact row-space comparison of two relation lists over a common alphabet."""
    rel_a = a.nonzero_relations() if isinstance(a, PresentationSpec) else [r for r in a if not r.is_zero]
    rel_b = b.nonzero_relations() if isinstance(b, PresentationSpec) else [r for r in b if not r.is_zero]
    alphabet = None
    for rel in itertools.chain(rel_a, rel_b):
        if alphabet is None:
            alphabet = rel.alphabet
        elif not alphabet.compatible_with(rel.alphabet):
            raise ValueError("span comparison across different alphabets")
    key = alphabet.word_key if alphabet else deglex_key
    diff = compare_spans([dict(r.terms) for r in rel_a], [dict(r.terms) for r in rel_b], key)
    witness_vec = diff.witness_a_not_in_b or diff.witness_b_not_in_a
    witness = Element(alphabet, witness_vec) if (witness_vec and alphabet) else None
    return SpanComparison(diff.verdict, diff.rank_a, diff.rank_b, witness)


# ---------------------------------------------------------------------------
# tensor products and specialization
# ---------------------------------------------------------------------------


def algebra_tensor(a: PresentationSpec, b: PresentationSpec,
                   name: str | None = None) -> PresentationSpec:
    """Two-sided tensor: union alphabet, union relations, commuting cross pairs.

    All A-generators are ranked below all B-generators; every cross pair
    commutes (even-even and even-odd alike).
    """
    overlap = set(a.alphabet.names()) & set(b.alphabet.names())
    if overlap:
        raise ValueError(f"generator name collision in tensor: {sorted(overlap)}")
    specs = [(g.name, g.parity, g.weight) for g in a.alphabet] + [
        (g.name, g.parity, g.weight) for g in b.alphabet
    ]
    alphabet = Alphabet.build(specs)
    offset = len(a.alphabet)
    relations: list[Element] = []
    for rel in a.relations:
        relations.append(Element(alphabet, dict(rel.terms)))
    for rel in b.relations:
        relations.append(
            Element(alphabet, {tuple(g + offset for g in w): c for w, c in rel.terms.items()})
        )
    one = Scalar.one()
    for ga in range(len(a.alphabet)):
        for gb in range(offset, len(alphabet)):
            relations.append(Element(alphabet, {(ga, gb): one, (gb, ga): -one}))
    return PresentationSpec(name or f"{a.name}(x){b.name}", alphabet, relations)


def specialize(pres: PresentationSpec, bindings: Mapping[str, object],
               name: str | None = None) -> PresentationSpec:
    """Specialize parameters (to scalars) and/or generators (to 0 or 1).

    Generator -> 0 deletes every word containing it; generator -> 1 removes
    the letter from each word.  Relations that collapse to zero are kept (as
    zero elements) so downstream checks can see which inputs became trivial.
    """
    param_bindings: dict[str, object] = {}
    zero_gens: set[str] = set()
    one_gens: set[str] = set()
    for key, value in bindings.items():
        if key in ("q", "u", "s"):
            param_bindings[key] = value
        elif pres.alphabet.rank_of(key) is not None:
            if value == 0:
                zero_gens.add(key)
            elif value == 1:
                one_gens.add(key)
            else:
                raise ValueError(f"generator {key!r} may only be bound to 0 or 1")
        else:
            raise ValueError(f"unknown symbol {key!r} in specialization")
    kept = [g for g in pres.alphabet if g.name not in zero_gens and g.name not in one_gens]
    new_alphabet = Alphabet.build([(g.name, g.parity, g.weight) for g in kept])
    rank_map: dict[int, int | None] = {}
    for g in pres.alphabet:
        if g.name in zero_gens:
            rank_map[g.rank] = -1  # word dies
        elif g.name in one_gens:
            rank_map[g.rank] = None  # letter disappears
        else:
            rank_map[g.rank] = new_alphabet.rank_of(g.name)
    relations: list[Element] = []
    for rel in pres.relations:
        terms: dict[tuple[int, ...], Scalar] = {}
        for word, coeff in rel.terms.items():
            if param_bindings:
                coeff = coeff.substitute(param_bindings)
                if coeff.is_zero:
                    continue
            new_word: list[int] = []
            dead = False
            for g in word:
                mapped = rank_map[g]
                if mapped == -1:
                    dead = True
                    break
                if mapped is not None:
                    new_word.append(mapped)
            if dead:
                continue
            key = tuple(new_word)
            acc = terms.get(key)
            new = coeff if acc is None else acc + coeff
            if new.is_zero:
                terms.pop(key, None)
            else:
                terms[key] = new
        relations.append(Element(new_alphabet, terms))
    return PresentationSpec(name or f"{pres.name}|specialized", new_alphabet, relations)


# ---------------------------------------------------------------------------
# algebra-definition files
# ---------------------------------------------------------------------------


def presentation_to_json(pres: PresentationSpec) -> dict:
    """Algebra-definition document: generators, relation strings, order.

    The optional per-generator "weight" key records the straightening order
    weight when it is not 1, so re-imported algebras orient identically.
    """
    generators = []
    for g in pres.alphabet:
        doc = {"name": g.name, "parity": "odd" if g.parity else "even", "rank": g.rank}
        if g.weight != 1:
            doc["weight"] = g.weight
        generators.append(doc)
    return {
        "name": pres.name,
        "generators": generators,
        "relations": [r.format() for r in pres.relations],
        "order": list(pres.alphabet.names()),
    }


def presentation_from_json(doc: Mapping) -> PresentationSpec:
    from . import exprs

    gens = sorted(doc["generators"], key=lambda g: g["rank"])
    order = doc.get("order")
    if order and list(order) != [g["name"] for g in gens]:
        raise ValueError("order list disagrees with generator ranks")
    alphabet = Alphabet.build(
        [
            (g["name"], 1 if g.get("parity") == "odd" else 0, g.get("weight", 1))
            for g in gens
        ]
    )
    relations = [exprs.parse_element(text, alphabet) for text in doc["relations"]]
    return PresentationSpec(doc.get("name", "algebra"), alphabet, relations)
