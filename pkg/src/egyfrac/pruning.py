"""Greedy pruning procedures with certified exit conditions.

prune_ppower repeatedly deletes the lightest prime-power class until
every remaining class carries mass at least theta.  prune_to_window then
trims single elements, one at a time, until the reciprocal sum drops into
the half-open window [alpha - 1/M, alpha).  Both are deterministic:
always the smallest failing prime power, always the smallest candidate
element.  All comparisons are exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InfeasibleError
from .rational import IntSet, SetLike, as_intset, recip_sum
from .sieve import FactorTable, exact_prime_powers


@dataclass(frozen=True)
class PruneTrace:
    """Audit log of one pruning run.

    removed_qs lists the prime powers whose classes were deleted, in
    removal order; no prime power can appear twice, because once its
    class is gone nothing left carries it as an exact divisor.
    """

    removed_qs: tuple[int, ...]
    removed_elements: tuple[int, ...]
    final: IntSet
    r_initial: Fraction
    r_final: Fraction

    def to_json_dict(self) -> dict:
        return {
            "removed_qs": list(self.removed_qs),
            "removed_elements": list(self.removed_elements),
            "final": list(self.final),
            "r_initial": f"{self.r_initial.numerator}/{self.r_initial.denominator}",
            "r_final": f"{self.r_final.numerator}/{self.r_final.denominator}",
        }


def _class_map(elems, t: FactorTable) -> tuple[dict[int, set[int]], dict[int, Fraction]]:
    classes: dict[int, set[int]] = {}
    masses: dict[int, Fraction] = {}
    for n in elems:
        for q in exact_prime_powers(n, t):
            classes.setdefault(q, set()).add(n)
            masses[q] = masses.get(q, Fraction(0)) + Fraction(q, n)
    return classes, masses


def prune_ppower(A: SetLike, theta, t: FactorTable) -> PruneTrace:
    """Delete light prime-power classes until all have mass >= theta.

    One step removes the whole class of the smallest prime power q with
    mass below theta.  The final set B satisfies mass(B; q) >= theta for
    every prime power q of B, and the total loss is below
    theta * sum(1/q over prime powers of A).
    """
    A = as_intset(A)
    theta = Fraction(theta)
    if theta < 0:
        raise DomainError("theta must be >= 0")
    if A and A.elements[0] < 2:
        raise DomainError("elements must be >= 2")
    r_initial = recip_sum(A)
    classes, masses = _class_map(A, t)
    remaining = set(A.elements)
    removed_qs: list[int] = []
    removed_elements: list[int] = []
    while True:
        failing = [q for q, m in masses.items() if m < theta]
        if not failing:
            break
        q0 = min(failing)
        victims = sorted(classes[q0])
        removed_qs.append(q0)
        removed_elements.extend(victims)
        for n in victims:
            remaining.discard(n)
            for q in exact_prime_powers(n, t):
                classes[q].discard(n)
                if classes[q]:
                    masses[q] -= Fraction(q, n)
                else:
                    del classes[q]
                    del masses[q]
    final = IntSet(remaining)
    return PruneTrace(
        removed_qs=tuple(removed_qs),
        removed_elements=tuple(removed_elements),
        final=final,
        r_initial=r_initial,
        r_final=recip_sum(final),
    )


def prune_to_window(A: SetLike, alpha, theta, M: int, t: FactorTable) -> PruneTrace:
    """Trim single elements until the reciprocal sum lands in [alpha - 1/M, alpha).

    Each iteration pre-prunes the working set at threshold 2*theta and
    removes its smallest surviving element; since every element is at
    least M, one removal lowers the sum by at most 1/M, which certifies
    the window on normal exit.  With theta > 0 every prime power of A
    must satisfy q <= M * theta, and the per-class floor
    mass(D; q) >= theta is re-checked after every removal; theta = 0
    disables the floor entirely and gives a pure window trimmer.
    """
    A = as_intset(A)
    alpha = Fraction(alpha)
    theta = Fraction(theta)
    if theta < 0:
        raise DomainError("theta must be >= 0")
    if M < 1:
        raise DomainError("M must be >= 1")
    r_initial = recip_sum(A)
    if r_initial < alpha:
        raise DomainError(f"need recip_sum(A) >= alpha, got {r_initial} < {alpha}")
    for n in A:
        if not M <= n <= t.bound:
            raise DomainError(f"element {n} outside [{M}, {t.bound}]")
    if theta > 0:
        _, masses = _class_map(A, t)
        for q in masses:
            if q > M * theta:
                raise DomainError(f"prime power {q} exceeds M*theta = {M * theta}")

    working = list(A.elements)
    r = r_initial
    removed: list[int] = []
    while r >= alpha:
        survivors = prune_ppower(IntSet(working), 2 * theta, t).final
        if not survivors:
            raise InfeasibleError(
                "pre-prune at 2*theta emptied the set while the sum is still >= alpha"
            )
        x = survivors.elements[0]
        working.remove(x)
        r -= Fraction(1, x)
        removed.append(x)
        if theta > 0:
            _, masses = _class_map(working, t)
            bad = [q for q, m in masses.items() if m < theta]
            if bad:
                raise InfeasibleError(
                    f"per-class floor theta lost at prime powers {bad} after removing {x}"
                )
    final = IntSet(working)
    return PruneTrace(
        removed_qs=(),
        removed_elements=tuple(removed),
        final=final,
        r_initial=r_initial,
        r_final=r,
    )
