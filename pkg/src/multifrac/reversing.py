"""Subword reversing on signed words.

Right reversing rewrites a factor s^-1 s to the empty word and a factor
s^-1 t (s != t, m(s,t) finite) to v u^-1, where s v = t u is the defining
relation; both sides of that relation represent the right-lcm of s and t,
which is why iterated right reversing of u^-1 v computes lcms.  Left
reversing is the mirror: it deletes s s^-1 and rewrites s t^-1 to v^-1 u
with v s = u t a relation.

Termination is not guaranteed for arbitrary Artin-Tits presentations (a
pair without a common multiple over a diagram with no infinite label makes
right reversing run forever), so the full-reversing loop carries a step
budget and a word-length cap and raises BudgetExhausted when either trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BudgetExhausted
from .presentation import ArtinPresentation, alternating_word
from .words import SignedWord

__all__ = ["reverse_step", "reverse_full", "ReversalResult", "DEFAULT_STEP_BUDGET"]

DEFAULT_STEP_BUDGET = 10_000

_DELETE = ()


@lru_cache(maxsize=None)
def _tables(pres: ArtinPresentation, side: str) -> dict[tuple[int, int], tuple[int, ...]]:
    """Factor -> replacement map for one reversing side.

    Keys are length-2 signed factors; the value () means deletion.  Factors
    absent from the map are either of the wrong sign pattern or blocked
    (free pair).
    """
    enc = lambda w: tuple(pres.index(g) + 1 for g in w)
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in range(len(pres.generators)):
        x = i + 1
        if side == "right":
            table[(-x, x)] = _DELETE
        else:
            table[(x, -x)] = _DELETE
    for s, t, m in pres.labelled_pairs():
        for s, t in ((s, t), (t, s)):
            si, ti = pres.index(s) + 1, pres.index(t) + 1
            if side == "right":
                # s^-1 t -> v u^-1  with  s v = t u  the relation of length m
                v = enc(alternating_word(t, s, m - 1))
                u = enc(alternating_word(s, t, m - 1))
                table[(-si, ti)] = v + tuple(-c for c in reversed(u))
            else:
                # s t^-1 -> v^-1 u  with  v s = u t
                if m % 2 == 0:
                    v = enc(alternating_word(t, s, m - 1))
                    u = enc(alternating_word(s, t, m - 1))
                else:
                    v = enc(alternating_word(s, t, m - 1))
                    u = enc(alternating_word(t, s, m - 1))
                table[(si, -ti)] = tuple(-c for c in reversed(v)) + u
    return table


def reverse_step(
    pres: ArtinPresentation, side: str, word: SignedWord, position: int
) -> SignedWord | None:
    """Apply one reversing step to the length-2 factor at `position`.

    Returns None when the factor has the wrong sign pattern or is blocked
    (free pair); inapplicability is not an error.
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    if not 0 <= position <= len(word) - 2:
        raise IndexError(f"no length-2 factor at position {position}")
    rep = _tables(pres, side).get(word[position : position + 2])
    if rep is None:
        return None
    return word[:position] + rep + word[position + 2 :]


@dataclass(frozen=True)
class ReversalResult:
    """Terminal word of a completed reversing run plus the step log."""

    word: SignedWord
    positions: tuple[int, ...]

    @property
    def steps(self) -> int:
        return len(self.positions)


def reverse_full(
    pres: ArtinPresentation,
    side: str,
    word: SignedWord,
    budget: int = DEFAULT_STEP_BUDGET,
    max_len: int | None = None,
) -> ReversalResult:
    """Reverse at the leftmost applicable position until none applies.

    Deterministic (fixed strategy, so traces are reproducible).  Raises
    BudgetExhausted after `budget` steps or when the word outgrows
    `max_len`; that outcome is undetermined, distinct from "blocked".
    """
    if side not in ("right", "left"):
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    table = _tables(pres, side)
    w = list(word)
    log: list[int] = []
    scan = 0  # everything left of `scan` is known inapplicable
    while True:
        pos = -1
        for k in range(scan, len(w) - 1):
            if (w[k], w[k + 1]) in table:
                pos = k
                break
        if pos < 0:
            return ReversalResult(tuple(w), tuple(log))
        if len(log) >= budget:
            raise BudgetExhausted(
                f"{side} reversing did not settle within {budget} steps",
                steps=len(log),
                word_length=len(w),
            )
        rep = table[(w[pos], w[pos + 1])]
        w[pos : pos + 2] = rep
        log.append(pos)
        if max_len is not None and len(w) > max_len:
            raise BudgetExhausted(
                f"{side} reversing exceeded the word-length cap {max_len}",
                steps=len(log),
                word_length=len(w),
            )
        # a rewrite can only create new factors adjacent to the spot it touched
        scan = max(0, pos - 1)
