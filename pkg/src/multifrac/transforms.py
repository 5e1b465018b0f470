"""Special word transformations and the empty-word reachability search.

Four kinds of steps act on signed words without ever inserting a trivial
factor: applying one defining relation inside a positive factor ("positive
equivalence"), the same inside a negative factor, one step of right
reversing, and one step of left reversing.  All four preserve the
represented group element, so emptying a word certifies that it represents
the identity.

`special_neighbors` enumerates single steps; with `max_len` set it drops
results longer than the cap.  The reachability search uses the cap
len(word) by default: equivalences preserve length, reversing deletions
shrink by two, and commutation reversings preserve, so under the cap the
reachable set is finite and the search is exhaustive without any budget at
desk scale.  (Unrestricted reversing rewrites over labels m >= 3 grow a
word and are available via max_len=None, but the search does not need
them on the presentations this package targets with this engine.)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .monoid import Monoid
from .multifraction import SearchResult
from .presentation import ArtinPresentation
from .reversing import reverse_step
from .words import SignedWord, signed_of_positive, signed_str

__all__ = ["WordStep", "special_neighbors", "apply_word_step", "search_empty_word"]


@dataclass(frozen=True)
class WordStep:
    """One special transformation: rule kind, position, replaced factor."""

    rule: str  # "pos" | "neg" | "rrev" | "lrev"
    at: int
    factor_from: SignedWord = ()
    factor_to: SignedWord = ()

    def json_obj(self, pres: ArtinPresentation | None = None) -> dict:
        obj: dict = {"rule": self.rule, "at": self.at}
        if self.rule in ("pos", "neg") and pres is not None:
            obj["from"] = signed_str(pres, self.factor_from)
            obj["to"] = signed_str(pres, self.factor_to)
        return obj


@lru_cache(maxsize=None)
def _equivalence_factors(pres: ArtinPresentation) -> tuple[tuple[str, SignedWord, SignedWord], ...]:
    """(rule, factor, replacement) triples for single relation applications."""
    out = []
    for rel in pres.relations():
        lhs = signed_of_positive(pres.encode(rel.lhs))
        rhs = signed_of_positive(pres.encode(rel.rhs))
        for u, v in ((lhs, rhs), (rhs, lhs)):
            out.append(("pos", u, v))
            out.append(("neg", tuple(-c for c in reversed(u)), tuple(-c for c in reversed(v))))
    return tuple(out)


def special_neighbors(
    monoid: Monoid, word: SignedWord, max_len: int | None = None
) -> list[tuple[WordStep, SignedWord]]:
    """All single special steps from `word`, deterministically ordered.

    A positive (negative) factor matching one side of a relation is always
    contained in a maximal positive (negative) run, so plain subword search
    enumerates exactly the one-relation equivalence steps.  `max_len`
    filters out results longer than the cap; None keeps everything.
    """
    pres = monoid.presentation
    word = tuple(word)
    out: list[tuple[WordStep, SignedWord]] = []

    def emit(step: WordStep, w: SignedWord):
        if max_len is None or len(w) <= max_len:
            out.append((step, w))

    for rule, fac, rep in _equivalence_factors(pres):
        n = len(fac)
        for k in range(len(word) - n + 1):
            if word[k : k + n] == fac:
                emit(WordStep(rule, k, fac, rep), word[:k] + rep + word[k + n :])
    for rule, side in (("rrev", "right"), ("lrev", "left")):
        for k in range(len(word) - 1):
            res = reverse_step(pres, side, word, k)
            if res is not None:
                emit(WordStep(rule, k), res)
    order = {"pos": 0, "neg": 1, "rrev": 2, "lrev": 3}
    out.sort(key=lambda item: (order[item[0].rule], item[0].at, item[0].factor_to))
    return out


def apply_word_step(monoid: Monoid, word: SignedWord, step: WordStep) -> SignedWord:
    """Re-apply a recorded step; raises ValueError if it does not fit."""
    word = tuple(word)
    if step.rule in ("pos", "neg"):
        n = len(step.factor_from)
        if word[step.at : step.at + n] != step.factor_from:
            raise ValueError(f"factor mismatch for {step} in {word}")
        found = any(
            fac == step.factor_from and rep == step.factor_to
            for _, fac, rep in _equivalence_factors(monoid.presentation)
        )
        if not found:
            raise ValueError(f"{step} is not a single relation application")
        return word[: step.at] + step.factor_to + word[step.at + n :]
    if step.rule in ("rrev", "lrev"):
        side = "right" if step.rule == "rrev" else "left"
        res = reverse_step(monoid.presentation, side, word, step.at)
        if res is None:
            raise ValueError(f"reversing step {step} does not apply to {word}")
        return res
    raise ValueError(f"unknown rule {step.rule!r}")


def search_empty_word(
    monoid: Monoid,
    word: SignedWord,
    state_budget: int = 10**6,
    max_len: int | None = None,
) -> SearchResult:
    """Breadth-first search for the empty word under special steps.

    found=True certifies that `word` represents 1 (the trace revalidates
    step by step).  The default cap max_len=len(word) keeps the search
    space finite; an exhausted search then means "not emptiable without
    growing the word", which does *not* by itself decide the word problem.
    """
    word = tuple(word)
    if max_len is None:
        max_len = len(word)
    if not word:
        return SearchResult(True, True, (), states=1, steps=0)
    seen: dict[SignedWord, tuple | None] = {word: None}
    queue: deque[SignedWord] = deque([word])
    edges = 0
    truncated = False
    while queue:
        cur = queue.popleft()
        for step, nxt in special_neighbors(monoid, cur, max_len=max_len):
            edges += 1
            if nxt in seen:
                continue
            if len(seen) >= state_budget:
                truncated = True
                break
            seen[nxt] = (cur, step)
            if not nxt:
                trace = []
                k = nxt
                while seen[k] is not None:
                    pk, st = seen[k]
                    trace.append(st)
                    k = pk
                trace.reverse()
                return SearchResult(True, True, tuple(trace), states=len(seen), steps=edges)
            queue.append(nxt)
        if truncated:
            return SearchResult(
                False, False, (), states=len(seen), steps=edges, reason="state budget"
            )
    return SearchResult(False, True, (), states=len(seen), steps=edges)
