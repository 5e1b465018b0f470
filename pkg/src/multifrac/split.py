"""Split reduction: the depth-raising variant of multifraction reduction.

A split step at position i crosses the removed divisor x of a_{i+1} over a
*divisor* y of a_i instead of the whole entry, which costs two extra
entries:

  i even:  y b_i = a_i,   y b_{i+1} = x b_{i+2} = (x v y),   x b_{i+3} = a_{i+1}
  i odd:   b_i y = a_i,   b_{i+1} y = b_{i+2} x = left-lcm,  b_{i+3} x = a_{i+1}

with x*y != 1.  Trimming at position i merges around a trivial entry
a_{i+1} = 1 and lowers the depth by two.  Split reduction does not
terminate in general (there are loops already over the three-generator
all-threes presentation), so searches here are always budget-bound and
only a positive answer is definitive.

The two `simulate_*` translations implement the constructive equivalence
between split reduction and reduction-after-padding: one ordinary
reduction step is two split steps (split off the whole entry, then trim),
and one split (resp. trim) step costs one extra leading (resp. trailing)
pair of trivial entries on the ordinary side.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import BudgetExhausted
from .monoid import MonoidElement
from .multifraction import (
    DEFAULT_LCM_BUDGET,
    DEFAULT_LCM_MAX_LEN,
    Multifraction,
    ReductionStep,
    SearchResult,
    apply_reduction,
)

__all__ = [
    "SplitStep",
    "TrimStep",
    "apply_split",
    "apply_trim",
    "apply_split_or_trim",
    "split_step_candidates",
    "split_reduces_to_trivial",
    "simulate_reduction_by_splits",
    "simulate_splits_by_padded_reduction",
    "DEFAULT_SPLIT_STATE_BUDGET",
]

DEFAULT_SPLIT_STATE_BUDGET = 10**5


@dataclass(frozen=True)
class SplitStep:
    """Split at position i, crossing x over the divisor y of a_i."""

    i: int
    x: MonoidElement
    y: MonoidElement

    def json_obj(self) -> dict:
        return {"rule": "S", "i": self.i, "x": str(self.x), "y": str(self.y)}


@dataclass(frozen=True)
class TrimStep:
    """Merge entries i and i+2 around the trivial entry a_{i+1}."""

    i: int

    def json_obj(self) -> dict:
        return {"rule": "T", "i": self.i}


def apply_split(
    a: Multifraction,
    step: SplitStep,
    lcm_budget: int = DEFAULT_LCM_BUDGET,
    lcm_max_len: int | None = DEFAULT_LCM_MAX_LEN,
) -> Multifraction | None:
    """Apply one split step; None when its conditions fail."""
    i, x, y = step.i, step.x, step.y
    m = a.monoid
    if x.monoid is not m or y.monoid is not m:
        raise ValueError("step parameters from a different monoid")
    if not 1 <= i <= a.depth - 1:
        return None
    if x.is_identity() and y.is_identity():
        return None
    side = "left" if i % 2 == 0 else "right"
    b_i = m.divide(side, y, a.entry(i))
    b_last = m.divide(side, x, a.entry(i + 1))
    if b_i is None or b_last is None:
        return None
    data = m.lcm_data("right" if i % 2 == 0 else "left", x, y, lcm_budget, lcm_max_len)
    if data is None:
        return None
    _, comp_x, comp_y = data
    e = list(a.entries)
    e[i - 1 : i + 1] = [b_i, comp_y, comp_x, b_last]
    return Multifraction(m, e)


def apply_trim(a: Multifraction, step: TrimStep) -> Multifraction | None:
    """Apply one trim step; None unless a_{i+1} = 1 and the depth allows it."""
    i = step.i
    if not 1 <= i <= a.depth - 2 or not a.entry(i + 1).is_identity():
        return None
    m = a.monoid
    lo, hi = a.entry(i), a.entry(i + 2)
    merged = m.multiply(lo, hi) if i % 2 == 1 else m.multiply(hi, lo)
    e = list(a.entries)
    e[i - 1 : i + 2] = [merged]
    return Multifraction(m, e)


def apply_split_or_trim(a: Multifraction, step, **lcm_budgets) -> Multifraction | None:
    if isinstance(step, SplitStep):
        return apply_split(a, step, **lcm_budgets)
    if isinstance(step, TrimStep):
        return apply_trim(a, step)
    raise TypeError(f"not a split-system step: {step!r}")


def split_step_candidates(
    a: Multifraction,
    lcm_budget: int = DEFAULT_LCM_BUDGET,
    lcm_max_len: int | None = DEFAULT_LCM_MAX_LEN,
) -> tuple[list, bool]:
    """All applicable trim and split steps, deterministically ordered."""
    m = a.monoid
    steps: list = []
    complete = True
    for i in range(1, a.depth - 1):
        if a.entry(i + 1).is_identity():
            steps.append(TrimStep(i))
    for i in range(1, a.depth):
        side = "left" if i % 2 == 0 else "right"
        lcm_side = "right" if i % 2 == 0 else "left"
        for y in m.divisors(side, a.entry(i)):
            for x in m.divisors(side, a.entry(i + 1)):
                if x.is_identity() and y.is_identity():
                    continue
                try:
                    if m.lcm_data(lcm_side, x, y, lcm_budget, lcm_max_len) is not None:
                        steps.append(SplitStep(i, x, y))
                except BudgetExhausted:
                    complete = False
    return steps, complete


def split_reduces_to_trivial(
    a: Multifraction,
    state_budget: int = DEFAULT_SPLIT_STATE_BUDGET,
    max_depth: int | None = None,
    lcm_budget: int = DEFAULT_LCM_BUDGET,
    lcm_max_len: int | None = DEFAULT_LCM_MAX_LEN,
) -> SearchResult:
    """Bounded search for an all-trivial multifraction under split reduction.

    Splits grow the depth without bound, so besides the state budget the
    search caps the depth at 2*depth(a) + 12 by default.  States are
    explored best-first by (word-length, depth), which reaches certificates
    far sooner than breadth-first in this heavily branching system; the
    exploration order does not affect what "exhausted" means.  found=True
    is definitive; anything else is undetermined (complete=False whenever a
    cap did any work).
    """
    if max_depth is None:
        max_depth = 2 * a.depth + 12
    if a.is_trivial():
        return SearchResult(True, True, (), states=1, steps=0)
    seen: dict[tuple, tuple | None] = {a.key(): None}
    heap: list[tuple[int, int, int, Multifraction]] = [(a.wordlength, a.depth, 0, a)]
    tick = 1
    edges = 0
    complete = True
    reason = None
    truncated = False
    while heap:
        _, _, _, cur = heapq.heappop(heap)
        cands, ok = split_step_candidates(cur, lcm_budget, lcm_max_len)
        if not ok:
            complete, reason = False, "lcm budget"
        for step in cands:
            child = apply_split_or_trim(
                cur, step, lcm_budget=lcm_budget, lcm_max_len=lcm_max_len
            ) if isinstance(step, SplitStep) else apply_trim(cur, step)
            if child is None:
                continue
            if child.depth > max_depth:
                complete, reason = False, reason or "depth cap"
                continue
            edges += 1
            ckey = child.key()
            if ckey in seen:
                continue
            if len(seen) >= state_budget:
                truncated = True
                break
            seen[ckey] = (cur.key(), step)
            if child.is_trivial():
                trace = []
                k = ckey
                while seen[k] is not None:
                    pk, st = seen[k]
                    trace.append(st)
                    k = pk
                trace.reverse()
                return SearchResult(True, complete, tuple(trace), states=len(seen), steps=edges)
            heapq.heappush(heap, (child.wordlength, child.depth, tick, child))
            tick += 1
        if truncated:
            complete, reason = False, "state budget"
            break
    return SearchResult(False, complete, (), states=len(seen), steps=edges, reason=reason)


def simulate_reduction_by_splits(a: Multifraction, step: ReductionStep) -> list:
    """The 2-step split trace (split off the whole of a_i, then trim) whose
    application equals `apply_reduction(a, step)` exactly."""
    b = apply_reduction(a, step)
    if b is None:
        raise ValueError(f"reduction step {step} does not apply to {a}")
    i = step.i
    strace = [SplitStep(i, step.x, a.entry(i)), TrimStep(i - 1 if i >= 2 else 1)]
    cur: Multifraction = a
    for s in strace:
        cur = apply_split_or_trim(cur, s)
        if cur is None:
            raise AssertionError(f"constructed split trace failed at {s}")
    if cur != b:
        raise AssertionError("split simulation endpoint differs from the reduction step")
    return strace


def simulate_splits_by_padded_reduction(a: Multifraction, strace) -> tuple[int, int, list[ReductionStep]]:
    """Translate a split-system trace into an ordinary reduction trace.

    Returns (p, q, rtrace) such that rtrace applies from a.pad(p) and ends
    at b / 1^(2q), where b is the endpoint of `strace` from a.  Each split
    step contributes p += 1, each trim q += 1; identity-parameter moves are
    dropped since they do not change the multifraction.
    """
    m = a.monoid
    p = q = 0
    rtrace: list[ReductionStep] = []
    cur = a
    for step in strace:
        new_steps: list[ReductionStep] = []
        if isinstance(step, SplitStep):
            i = step.i
            # from 1^2/cur: walk the trivial pair right to position (i, i+1)
            for t in range(1, i):
                if not cur.entry(t).is_identity():
                    new_steps.append(ReductionStep(t + 1, cur.entry(t)))
            side = "left" if i % 2 == 0 else "right"
            b_i = m.divide(side, step.y, cur.entry(i))
            if b_i is None:
                raise ValueError(f"split step {step} does not apply to {cur}")
            if not b_i.is_identity():
                new_steps.append(ReductionStep(i + 1, b_i))
            if not step.x.is_identity():
                new_steps.append(ReductionStep(i + 2, step.x))
            nxt = apply_split(cur, step)
            if nxt is None:
                raise ValueError(f"split step {step} does not apply to {cur}")
            rtrace = [ReductionStep(s.i + 2, s.x) for s in rtrace] + new_steps
            p += 1
        elif isinstance(step, TrimStep):
            i = step.i
            nxt = apply_trim(cur, step)
            if nxt is None:
                raise ValueError(f"trim step {step} does not apply to {cur}")
            if not cur.entry(i + 2).is_identity():
                new_steps.append(ReductionStep(i + 1, cur.entry(i + 2)))
            for t in range(i + 3, cur.depth + 1):
                if not cur.entry(t).is_identity():
                    new_steps.append(ReductionStep(t - 1, cur.entry(t)))
            rtrace = rtrace + new_steps
            q += 1
        else:
            raise TypeError(f"not a split-system step: {step!r}")
        cur = nxt
    return p, q, rtrace
