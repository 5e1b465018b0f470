"""Multifractions and the depth-preserving reduction rewrite system.

A multifraction a_1 / a_2 / ... / a_n is a finite sequence of monoid
elements denoting the alternating group product
a_1 * a_2^-1 * a_3 * a_4^-1 * ...  (odd entries are numerators, even
entries denominators).  The reduction rule at position i with parameter
x != 1 divides x out of a_{i+1} and pushes it across a_i through an lcm:

  i = 1:        b_1 x = a_1,  b_2 x = a_2
  i even:       b_{i-1} = a_{i-1} x',  x b_i = a_i x' = (x v a_i),
                x b_{i+1} = a_{i+1}
  i odd >= 3:   the left-lcm mirror of the even case.

Reduction preserves the represented group element and the depth.  On a
noetherian monoid it terminates, so the reachable set from any start is
finite and breadth-first search decides whether the all-trivial
multifraction is reachable -- which, when reduction is semi-convergent
(e.g. FC type), decides the word problem.

Budgets: the search takes a state budget, and every lcm call inside step
enumeration is budgeted.  A search that had to skip an undetermined lcm
or ran out of states reports `complete=False`; a found trace is sound
either way.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BudgetExhausted
from .monoid import Monoid, MonoidElement
from .words import SignedWord, invert, runs, signed_of_positive

__all__ = [
    "Multifraction",
    "ReductionStep",
    "SearchResult",
    "apply_reduction",
    "reduction_step_candidates",
    "search_reduction",
    "reduces_to_trivial",
    "equal_in_group_fc",
    "DEFAULT_STATE_BUDGET",
    "DEFAULT_LCM_BUDGET",
    "DEFAULT_LCM_MAX_LEN",
]

DEFAULT_STATE_BUDGET = 10**6
# Reversing budgets used inside step enumeration.  Small on purpose: an lcm
# that does not settle this fast at desk scale is treated as undetermined
# and the search downgrades its completeness claim instead of stalling.
DEFAULT_LCM_BUDGET = 1_000
DEFAULT_LCM_MAX_LEN = 512


class Multifraction:
    """An immutable sequence of monoid elements with alternating signs."""

    __slots__ = ("monoid", "entries")

    def __init__(self, monoid: Monoid, entries):
        items = tuple(monoid.element(e) for e in entries)
        if not items:
            raise ValueError("a multifraction has at least one entry")
        self.monoid = monoid
        self.entries = items

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def wordlength(self) -> int:
        return sum(len(e) for e in self.entries)

    def is_trivial(self) -> bool:
        return self.wordlength == 0

    def entry(self, i: int) -> MonoidElement:
        """1-based entry access, matching the rewrite-rule indexing."""
        return self.entries[i - 1]

    def key(self) -> tuple[bytes, ...]:
        return tuple(e.key for e in self.entries)

    def pad(self, p: int) -> "Multifraction":
        """Prepend 2p trivial entries; even so the group value is preserved."""
        if p < 0:
            raise ValueError("padding must be nonnegative")
        one = self.monoid.identity
        return Multifraction(self.monoid, (one,) * (2 * p) + self.entries)

    def strip_trailing_ones(self) -> "Multifraction":
        """Drop trailing trivial entries (used when comparing across depths)."""
        items = list(self.entries)
        while len(items) > 1 and items[-1].is_identity():
            items.pop()
        return Multifraction(self.monoid, items)

    def to_signed_word(self) -> SignedWord:
        """Concatenate canonical entry words with alternating inversion."""
        out: list[int] = []
        for pos, e in enumerate(self.entries, start=1):
            out.extend(signed_of_positive(e.key, 1 if pos % 2 else -1))
        return tuple(out)

    @classmethod
    def from_signed_word(cls, monoid: Monoid, word: SignedWord) -> "Multifraction":
        """Decompose into maximal alternating runs; sharp by construction.

        The first entry is trivial iff the word starts with a negative
        letter; the empty word gives the depth-1 trivial multifraction.
        """
        blocks = runs(word)
        if not blocks:
            return cls(monoid, (b"",))
        entries: list[bytes] = []
        if blocks[0][0] < 0:
            entries.append(b"")
        for sign, pos in blocks:
            expected = 1 if len(entries) % 2 == 0 else -1
            if sign != expected:
                raise AssertionError("runs() produced non-alternating blocks")
            entries.append(pos)
        return cls(monoid, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multifraction)
            and self.monoid is other.monoid
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((id(self.monoid), self.key()))

    def __str__(self) -> str:
        return "/".join(str(e) for e in self.entries)

    def __repr__(self) -> str:
        return f"Multifraction({self})"


@dataclass(frozen=True)
class ReductionStep:
    """Reduction at position i with parameter x (x != 1)."""

    i: int
    x: MonoidElement

    def json_obj(self) -> dict:
        return {"rule": "R", "i": self.i, "x": str(self.x)}


def apply_reduction(
    a: Multifraction,
    step: ReductionStep,
    lcm_budget: int = DEFAULT_LCM_BUDGET,
    lcm_max_len: int | None = DEFAULT_LCM_MAX_LEN,
) -> Multifraction | None:
    """Apply one reduction step; None when its conditions fail.

    Raises BudgetExhausted if the lcm behind the step cannot be settled.
    """
    i, x = step.i, step.x
    m = a.monoid
    if x.monoid is not m:
        raise ValueError("step parameter from a different monoid")
    if not 1 <= i <= a.depth - 1 or x.is_identity():
        return None
    e = list(a.entries)
    if i == 1:
        b1 = m.divide("right", x, e[0])
        b2 = m.divide("right", x, e[1])
        if b1 is None or b2 is None:
            return None
        e[0], e[1] = b1, b2
    elif i % 2 == 0:
        quot = m.divide("left", x, e[i])
        if quot is None:
            return None
        data = m.lcm_data("right", x, e[i - 1], lcm_budget, lcm_max_len)
        if data is None:
            return None
        _, comp_x, comp_a = data  # x*comp_x = a_i*comp_a = x v a_i
        e[i - 2] = m.multiply(e[i - 2], comp_a)
        e[i - 1] = comp_x
        e[i] = quot
    else:
        quot = m.divide("right", x, e[i])
        if quot is None:
            return None
        data = m.lcm_data("left", x, e[i - 1], lcm_budget, lcm_max_len)
        if data is None:
            return None
        _, comp_x, comp_a = data  # comp_x*x = comp_a*a_i = left-lcm
        e[i - 2] = m.multiply(comp_a, e[i - 2])
        e[i - 1] = comp_x
        e[i] = quot
    return Multifraction(m, e)


def reduction_step_candidates(
    a: Multifraction,
    lcm_budget: int = DEFAULT_LCM_BUDGET,
    lcm_max_len: int | None = DEFAULT_LCM_MAX_LEN,
) -> tuple[list[ReductionStep], bool]:
    """All applicable reduction steps, ordered by (i, parameter word).

    Second component is False when some candidate had to be skipped
    because its lcm ran out of budget, i.e. the list may be incomplete.
    """
    m = a.monoid
    steps: list[ReductionStep] = []
    complete = True
    for i in range(1, a.depth):
        nxt = a.entry(i + 1)
        if nxt.is_identity():
            continue
        if i == 1:
            first = {d.key for d in m.divisors("right", a.entry(1))}
            for x in m.divisors("right", nxt):
                if not x.is_identity() and x.key in first:
                    steps.append(ReductionStep(1, x))
        elif i % 2 == 0:
            for x in m.divisors("left", nxt):
                if x.is_identity():
                    continue
                try:
                    if m.lcm_data("right", x, a.entry(i), lcm_budget, lcm_max_len) is not None:
                        steps.append(ReductionStep(i, x))
                except BudgetExhausted:
                    complete = False
        else:
            for x in m.divisors("right", nxt):
                if x.is_identity():
                    continue
                try:
                    if m.lcm_data("left", x, a.entry(i), lcm_budget, lcm_max_len) is not None:
                        steps.append(ReductionStep(i, x))
                except BudgetExhausted:
                    complete = False
    return steps, complete


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a bounded reachability search.

    found=True is always sound and comes with a certifying trace.
    found=False is definitive only when complete=True: the whole reachable
    set was enumerated with no budget truncation anywhere.
    """

    found: bool
    complete: bool
    trace: tuple = ()
    states: int = 0
    steps: int = 0
    reason: str | None = None


def search_reduction(
    a: Multifraction,
    target_wordlength: int = 0,
    state_budget: int = DEFAULT_STATE_BUDGET,
    lcm_budget: int = DEFAULT_LCM_BUDGET,
    lcm_max_len: int | None = DEFAULT_LCM_MAX_LEN,
) -> SearchResult:
    """Breadth-first search of the reduction graph from `a`.

    Succeeds on the first multifraction of wordlength <= target_wordlength
    (0 = the all-trivial target); the BFS order plus the deterministic
    child ordering make the returned trace the canonical shortest one.
    """
    if a.wordlength <= target_wordlength:
        return SearchResult(True, True, (), states=1, steps=0)
    start = a.key()
    seen: dict[tuple, tuple | None] = {start: None}
    queue: deque[Multifraction] = deque([a])
    edges = 0
    complete = True
    reason = None
    truncated = False
    while queue:
        cur = queue.popleft()
        cands, ok = reduction_step_candidates(cur, lcm_budget, lcm_max_len)
        if not ok:
            complete, reason = False, "lcm budget"
        for step in cands:
            child = apply_reduction(cur, step, lcm_budget, lcm_max_len)
            if child is None:
                continue
            edges += 1
            ckey = child.key()
            if ckey in seen:
                continue
            if len(seen) >= state_budget:
                truncated = True
                break
            seen[ckey] = (cur.key(), step)
            if child.wordlength <= target_wordlength:
                trace = []
                k = ckey
                while seen[k] is not None:
                    pk, st = seen[k]
                    trace.append(st)
                    k = pk
                trace.reverse()
                return SearchResult(
                    True, complete, tuple(trace), states=len(seen), steps=edges
                )
            queue.append(child)
        if truncated:
            complete, reason = False, "state budget"
            break
    return SearchResult(False, complete, (), states=len(seen), steps=edges, reason=reason)


def reduces_to_trivial(a: Multifraction, **budgets) -> SearchResult:
    """Is the all-trivial multifraction of the same depth reachable from a?"""
    return search_reduction(a, target_wordlength=0, **budgets)


def equal_in_group_fc(
    monoid: Monoid, w1: SignedWord, w2: SignedWord, **budgets
) -> bool:
    """Group equality oracle, valid when reduction is convergent (FC type).

    Decides cl(w1) = cl(w2) by searching the reduction graph of the
    multifraction of w1 * invert(w2).  The caller asserts the presentation
    is of FC type; on other presentations a False answer is meaningless.
    Raises BudgetExhausted if the search could not be completed.
    """
    word = tuple(w1) + invert(tuple(w2))
    a = Multifraction.from_signed_word(monoid, word)
    res = reduces_to_trivial(a, **budgets)
    if res.found:
        return True
    if not res.complete:
        raise BudgetExhausted(
            f"equality search undetermined ({res.reason})",
            states=res.states,
            steps=res.steps,
        )
    return False
