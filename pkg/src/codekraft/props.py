"""Mechanical verification harness for the exact Kraft-sum laws.

Each check returns a value-complete report: both sides of every inequality
are recorded as exact rationals (or integers) so a failed report can be
audited without recomputation.  Checks test instances; they do not prove
theorems.

The checks cover:

* McMillan's bound: a UD code has Kraft sum at most 1 (plus the linear
  power bound K^k <= (m-1)k + 1 against the full one-symbol code).
* The power law: K(C^k) <= K(C)^k, with equality for every k exactly when
  C is UD, and strictness at the collision-derived exponent otherwise.
* Monotonicity: for UD codes C <= D, every word of C^k factors over D
  with between k and m*k factors, and K(C) <= K(D), strictly when D is
  not an irredundant refinement of C.
* Finiteness: the finer UD codes with the same Kraft sum, enumerated.
* Equal-Kraft chains: strict descent plus exact Kraft equality, with the
  equal-Kraft refinement count of every member reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import Code, Word
from .decipher import is_ud
from .errors import ChainViolationError, NotRefinementError
from .kraft import exact_str, kraft_power, kraft_sum
from .power import DEFAULT_MAX_POWER_WORDS, code_power
from .refine import (
    DEFAULT_MAX_CANDIDATES,
    cover_exponent_bound,
    first_factorization,
    irredundant_refinements,
    is_irredundant_refinement,
    is_refinement,
)


class PropositionId(enum.Enum):
    MCMILLAN = "mcmillan"
    POWER_LAW = "power-law"
    MONOTONICITY = "monotonicity"
    EQUAL_KRAFT_FINITENESS = "equal-kraft-finiteness"
    EQUAL_KRAFT_CHAIN = "equal-kraft-chain"


Detail = tuple[str, object]


@dataclass(frozen=True, slots=True)
class PropositionReport:
    """Outcome of one check, with every exact quantity embedded.

    ``details`` and ``parameters`` are ordered (name, value) pairs; values
    are exact rationals, integers, booleans, or witness strings.  A failed
    report always identifies the violated inequality with both sides.
    """

    proposition_id: PropositionId
    passed: bool
    details: tuple[Detail, ...]
    parameters: tuple[Detail, ...]

    def get(self, name: str, default=None):
        for key, value in self.details:
            if key == name:
                return value
        for key, value in self.parameters:
            if key == name:
                return value
        return default


def _full_unit_code(alphabet) -> Code:
    return Code(alphabet, (Word(alphabet, (i,)) for i in range(alphabet.size)))


def _effective_kmax(cardinality: int, kmax: int, max_words: int) -> int:
    k = kmax
    while k > 1 and cardinality**k > max_words:
        k -= 1
    return k


def check_mcmillan(code: Code, kmax: int = 3) -> PropositionReport:
    """Assert K <= 1 for UD codes; record K without asserting otherwise.

    For UD codes this also exercises the linear power bound
    K^k <= (m-1)k + 1 for k up to ``kmax``, where m is the cover exponent
    of the code against the full one-symbol code.
    """
    verdict = is_ud(code)
    value = kraft_sum(code)
    details: list[Detail] = [("is_ud", verdict.is_ud), ("kraft_sum", value), ("bound", 1)]
    parameters: list[Detail] = [("kmax", kmax)]
    if not verdict.is_ud:
        left, right = verdict.witness
        details.append(("status", "out of hypothesis"))
        details.append(("witness_left", str(left)))
        details.append(("witness_right", str(right)))
        return PropositionReport(PropositionId.MCMILLAN, True, tuple(details), tuple(parameters))
    passed = value <= 1
    details.append(("status", "bound asserted" if passed else "bound violated"))
    if len(code):
        unit = _full_unit_code(code.alphabet)
        m = cover_exponent_bound(code, unit)
        details.append(("cover_exponent_m", m))
        for k in range(1, kmax + 1):
            lhs = kraft_power(value, k)
            rhs = (m - 1) * k + 1
            details.append((f"k={k}.kraft_pow", lhs))
            details.append((f"k={k}.linear_bound", rhs))
            if lhs > rhs:
                passed = False
                details.append((f"k={k}.violated", "K^k > (m-1)k+1"))
    return PropositionReport(PropositionId.MCMILLAN, passed, tuple(details), tuple(parameters))


def check_power_law(
    code: Code, kmax: int = 3, max_power_words: int = DEFAULT_MAX_POWER_WORDS
) -> PropositionReport:
    """Compare K(C^k) with K(C)^k exactly for each k up to ``kmax``.

    Always asserts K(C^k) <= K(C)^k.  For UD codes asserts equality at
    every k; otherwise asserts strict inequality at k = m + n, where m and
    n are the factor counts of the collision witness sides.
    """
    if kmax < 2:
        raise ValueError(f"kmax must be at least 2, got {kmax}")
    verdict = is_ud(code)
    value = kraft_sum(code)
    effective = _effective_kmax(len(code), kmax, max_power_words)
    details: list[Detail] = [("is_ud", verdict.is_ud), ("kraft_sum", value)]
    parameters: list[Detail] = [
        ("kmax", kmax),
        ("effective_kmax", effective),
        ("max_power_words", max_power_words),
    ]
    passed = True
    computed: dict[int, tuple[Fraction, Fraction]] = {}

    def compare(k: int) -> tuple[Fraction, Fraction]:
        if k not in computed:
            lhs = kraft_sum(code_power(code, k, max_power_words))
            rhs = kraft_power(value, k)
            computed[k] = (lhs, rhs)
            details.append((f"k={k}.kraft_of_power", lhs))
            details.append((f"k={k}.kraft_pow", rhs))
        return computed[k]

    for k in range(1, effective + 1):
        lhs, rhs = compare(k)
        if lhs > rhs:
            passed = False
            details.append((f"k={k}.violated", "K(C^k) > K(C)^k"))
        elif verdict.is_ud and lhs != rhs:
            passed = False
            details.append((f"k={k}.violated", "UD but K(C^k) < K(C)^k"))
    if not verdict.is_ud:
        left, right = verdict.witness
        witness_k = len(left.factors) + len(right.factors)
        details.append(("witness_left", str(left)))
        details.append(("witness_right", str(right)))
        details.append(("witness_k", witness_k))
        lhs, rhs = compare(witness_k)
        if not lhs < rhs:
            passed = False
            details.append((f"k={witness_k}.violated", "collision but K(C^k) = K(C)^k"))
    return PropositionReport(PropositionId.POWER_LAW, passed, tuple(details), tuple(parameters))


def check_monotonicity(
    coarse: Code,
    fine: Code,
    kmax: int = 3,
    max_power_words: int = DEFAULT_MAX_POWER_WORDS,
) -> PropositionReport:
    """Verify cover inclusion and Kraft monotonicity for a UD pair.

    Requires both codes UD and ``fine`` finer than ``coarse``.  Checks, for
    each k up to ``kmax``, that every word of coarse^k factors over the
    fine code with between k and m*k factors (m the cover exponent), then
    asserts K(coarse) <= K(fine), strictly when the refinement is not
    irredundant.
    """
    if not is_ud(coarse).is_ud:
        raise ValueError("monotonicity check requires a UD coarse code")
    if not is_ud(fine).is_ud:
        raise ValueError("monotonicity check requires a UD fine code")
    relation = is_refinement(coarse, fine)
    if not relation.holds:
        raise NotRefinementError(
            f"{fine} does not refine {coarse}: no factorization of "
            f"{relation.failing_word.text!r}"
        )
    value_coarse = kraft_sum(coarse)
    value_fine = kraft_sum(fine)
    details: list[Detail] = [
        ("kraft_coarse", value_coarse),
        ("kraft_fine", value_fine),
    ]
    parameters: list[Detail] = [("kmax", kmax), ("max_power_words", max_power_words)]
    passed = True
    if len(coarse) and len(fine):
        m = cover_exponent_bound(coarse, fine)
        details.append(("cover_exponent_m", m))
        effective = _effective_kmax(len(coarse), kmax, max_power_words)
        parameters.append(("effective_kmax", effective))
        for k in range(1, effective + 1):
            power = code_power(coarse, k, max_power_words)
            for word in power:
                factorization = first_factorization(word, fine)
                if factorization is None:
                    passed = False
                    details.append((f"k={k}.violated", f"{word.text} has no factorization"))
                    continue
                j = len(factorization.factors)
                if not k <= j <= m * k:
                    passed = False
                    details.append(
                        (f"k={k}.violated", f"{word.text} uses {j} factors, outside [{k}, {m * k}]")
                    )
            details.append((f"k={k}.words_checked", len(power)))
    irredundant = is_irredundant_refinement(coarse, fine)
    details.append(("irredundant", irredundant))
    if value_coarse > value_fine:
        passed = False
        details.append(("violated", "K(coarse) > K(fine)"))
    elif not irredundant and value_coarse == value_fine:
        passed = False
        details.append(("violated", "redundant refinement but K(coarse) = K(fine)"))
    return PropositionReport(PropositionId.MONOTONICITY, passed, tuple(details), tuple(parameters))


def equal_kraft_refinements(code: Code, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> tuple[Code, ...]:
    """The finer UD codes with the same Kraft sum as ``code`` (inclusive).

    A finer UD code with equal Kraft sum is necessarily an irredundant
    refinement (a redundant one would be strictly larger), so the
    irredundant refinements filtered for unique decipherability and exact
    Kraft equality are the whole set.  Always finite.
    """
    if not is_ud(code).is_ud:
        raise ValueError("equal-Kraft refinement enumeration requires a UD code")
    value = kraft_sum(code)
    keep = [
        candidate
        for candidate in irredundant_refinements(code, max_candidates)
        if kraft_sum(candidate) == value and is_ud(candidate).is_ud
    ]
    return tuple(sorted(keep, key=lambda c: c.sort_key))


def check_equal_kraft_finiteness(
    code: Code, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> PropositionReport:
    """Enumerate the equal-Kraft UD refinements and re-verify each member."""
    members = equal_kraft_refinements(code, max_candidates)
    value = kraft_sum(code)
    details: list[Detail] = [("kraft_sum", value), ("count", len(members))]
    parameters: list[Detail] = [("max_candidates", max_candidates)]
    passed = code in members
    if not passed:
        details.append(("violated", "code is not among its own equal-Kraft refinements"))
    for i, member in enumerate(members):
        details.append((f"member_{i}", str(member)))
        if not (is_ud(member).is_ud and is_refinement(code, member).holds and kraft_sum(member) == value):
            passed = False
            details.append((f"member_{i}.violated", "not a UD equal-Kraft refinement"))
    return PropositionReport(
        PropositionId.EQUAL_KRAFT_FINITENESS, passed, tuple(details), tuple(parameters)
    )


def check_chain(chain, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> PropositionReport:
    """Verify an equal-Kraft chain of UD codes.

    The sequence must descend strictly in the refinement order (each member
    refined by its predecessor, no repeats) with all Kraft values exactly
    equal; violations raise :class:`ChainViolationError` naming the first
    offending adjacent pair.  For each member the (finite) set of
    equal-Kraft UD refinements is counted and reported.
    """
    members = tuple(chain)
    for i, member in enumerate(members):
        if not is_ud(member).is_ud:
            raise ValueError(f"chain member {i} is not uniquely decipherable")
    for i in range(len(members) - 1):
        previous, following = members[i], members[i + 1]
        if previous == following:
            raise ChainViolationError(f"members {i} and {i + 1} are equal", index=i)
        if not is_refinement(following, previous).holds:
            raise ChainViolationError(
                f"member {i} does not refine member {i + 1}", index=i
            )
        value_previous, value_following = kraft_sum(previous), kraft_sum(following)
        if value_previous != value_following:
            raise ChainViolationError(
                f"Kraft values differ at members {i} and {i + 1}: "
                f"{exact_str(value_previous)} ≠ {exact_str(value_following)}",
                index=i,
            )
    details: list[Detail] = [("length", len(members))]
    parameters: list[Detail] = [("max_candidates", max_candidates)]
    if members:
        details.append(("kraft_sum", kraft_sum(members[0])))
    for i, member in enumerate(members):
        details.append((f"member_{i}.cardinality", len(member)))
        details.append((f"member_{i}.equal_kraft_refinements", len(equal_kraft_refinements(member, max_candidates))))
    return PropositionReport(PropositionId.EQUAL_KRAFT_CHAIN, True, tuple(details), tuple(parameters))
