"""Elements of an Artin-Tits monoid as congruence classes of positive words.

Because every defining relation is homogeneous (equal lengths on both
sides), the class of a word is finite and can be materialised by a
breadth-first closure; that closure is the package's hot kernel.  An
element is identified by the lexicographically least member of its class
under the declared generator order, which gives deterministic hashing,
ordering and trace output.

Divisibility, gcd, divisor enumeration all come straight from class
membership: x left-divides y iff some member of y's class literally starts
with the canonical word of x.  Lcms and complements are computed by subword
reversing, with budgets (see `reversing`); a budget hit surfaces as
BudgetExhausted, never as "no lcm".

Elements are immutable and operations are pure.  The per-monoid caches are
only ever extended with values that are functions of their key, so
concurrent readers racing an insert at worst recompute.
"""

from __future__ import annotations

from .errors import BudgetExhausted, StructuralError
from .presentation import ArtinPresentation
from .reversing import DEFAULT_STEP_BUDGET, reverse_full
from ._kernels import congruence_class
from .words import SignedWord, signed_of_positive

__all__ = ["Monoid", "MonoidElement"]


class MonoidElement:
    """One class of positive words, pinned to its canonical representative."""

    __slots__ = ("monoid", "key")

    def __init__(self, monoid: "Monoid", key: bytes):
        self.monoid = monoid
        self.key = key  # canonical (lex-least) word, as generator indices

    @property
    def word(self) -> tuple[str, ...]:
        return self.monoid.presentation.decode(self.key)

    @property
    def class_words(self) -> frozenset[tuple[str, ...]]:
        dec = self.monoid.presentation.decode
        return frozenset(dec(w) for w in self.monoid.class_of(self.key))

    def divides(self, other: "MonoidElement", side: str = "left") -> bool:
        return self.monoid.divide(side, self, other) is not None

    def is_identity(self) -> bool:
        return not self.key

    def __len__(self) -> int:
        return len(self.key)

    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        return self.monoid.multiply(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonoidElement)
            and self.monoid is other.monoid
            and self.key == other.key
        )

    def __hash__(self) -> int:
        return hash((id(self.monoid), self.key))

    def __lt__(self, other: "MonoidElement") -> bool:
        return (len(self.key), self.key) < (len(other.key), other.key)

    def __str__(self) -> str:
        return self.monoid.presentation.word_str(self.key)

    def __repr__(self) -> str:
        return f"<{self}>"


class Monoid:
    """The Artin-Tits monoid of a presentation, with memoised word classes."""

    def __init__(self, presentation: ArtinPresentation):
        self.presentation = presentation
        rules = []
        for rel in presentation.relations():
            lhs = presentation.encode(rel.lhs)
            rhs = presentation.encode(rel.rhs)
            rules.append((lhs, rhs))
            rules.append((rhs, lhs))
        self._rules = tuple(rules)
        self._classes: dict[bytes, frozenset[bytes]] = {}
        self._canon: dict[bytes, bytes] = {}
        self._interned: dict[bytes, MonoidElement] = {}
        self._divisors: dict[tuple[str, bytes], tuple[MonoidElement, ...]] = {}
        self._lcm_cache: dict[tuple[str, bytes, bytes], tuple] = {}
        self.identity = self.element(b"")

    # -- classes and elements -------------------------------------------

    def class_of(self, word) -> frozenset[bytes]:
        key = self.presentation.encode(word)
        cls = self._classes.get(key)
        if cls is None:
            cls = congruence_class(key, self._rules)
            canon = min(cls)
            for w in cls:
                self._classes[w] = cls
                self._canon[w] = canon
        return cls

    def canonical(self, word) -> bytes:
        key = self.presentation.encode(word)
        canon = self._canon.get(key)
        if canon is None:
            self.class_of(key)
            canon = self._canon[key]
        return canon

    def element(self, word) -> MonoidElement:
        """The class of a positive word (string, token iterable, or bytes)."""
        if isinstance(word, MonoidElement):
            if word.monoid is not self:
                raise ValueError("element belongs to a different monoid")
            return word
        canon = self.canonical(word)
        el = self._interned.get(canon)
        if el is None:
            el = MonoidElement(self, canon)
            self._interned[canon] = el
        return el

    def _check(self, *xs: MonoidElement):
        for x in xs:
            if x.monoid is not self:
                raise ValueError("element belongs to a different monoid")

    def atoms(self) -> tuple[MonoidElement, ...]:
        return tuple(self.element(bytes([i])) for i in range(len(self.presentation.generators)))

    @property
    def rewrite_rules(self) -> tuple[tuple[bytes, bytes], ...]:
        """Both orientations of every defining relation, in word encoding."""
        return self._rules

    # -- multiplication and divisibility ---------------------------------

    def multiply(self, x: MonoidElement, y: MonoidElement) -> MonoidElement:
        self._check(x, y)
        return self.element(x.key + y.key)

    def divide(self, side: str, x: MonoidElement, y: MonoidElement) -> MonoidElement | None:
        """The witness z with y = x*z (side="left") or y = z*x (side="right").

        None when x does not divide y; the witness is unique by
        cancellativity.
        """
        self._check(x, y)
        if side == "left":
            for w in sorted(self.class_of(y.key)):
                if w.startswith(x.key):
                    return self.element(w[len(x.key):])
            return None
        if side == "right":
            for w in sorted(self.class_of(y.key)):
                if w.endswith(x.key):
                    return self.element(w[: len(w) - len(x.key)])
            return None
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def divisors(self, side: str, x: MonoidElement) -> tuple[MonoidElement, ...]:
        """All left- (right-) divisors of x, including 1 and x, in canonical order."""
        self._check(x)
        cached = self._divisors.get((side, x.key))
        if cached is not None:
            return cached
        keys = set()
        for w in self.class_of(x.key):
            for k in range(len(w) + 1):
                keys.add(self.canonical(w[:k] if side == "left" else w[len(w) - k:]))
        out = tuple(sorted((self.element(k) for k in keys)))
        self._divisors[(side, x.key)] = out
        return out

    def gcd(self, side: str, x: MonoidElement, y: MonoidElement) -> MonoidElement:
        """Greatest common left- (right-) divisor.

        Computed by enumerating the divisors of the shorter element; in a
        gcd-monoid the maximal-length common divisor is unique, so finding
        two distinct ones is a structural failure.
        """
        self._check(x, y)
        small, big = (x, y) if len(x.key) <= len(y.key) else (y, x)
        big_divs = {d.key for d in self.divisors(side, big)}
        best: list[MonoidElement] = []
        for d in self.divisors(side, small):
            if d.key in big_divs:
                if not best or len(d.key) > len(best[0].key):
                    best = [d]
                elif len(d.key) == len(best[0].key) and d.key != best[0].key:
                    best.append(d)
        if len(best) != 1:
            raise StructuralError(
                f"{side}-gcd of {x} and {y} is not unique: {best}"
            )
        return best[0]

    # -- lcms and complements via reversing -------------------------------

    def lcm(
        self,
        side: str,
        x: MonoidElement,
        y: MonoidElement,
        budget: int = DEFAULT_STEP_BUDGET,
        max_len: int | None = None,
    ) -> MonoidElement | None:
        """Right-lcm x v y (side="right") or left-lcm (side="left").

        None means "no common multiple" (reversing blocked on a free pair),
        which is definitive.  BudgetExhausted means undetermined.
        """
        out = self.lcm_data(side, x, y, budget, max_len)
        return None if out is None else out[0]

    def complement(
        self,
        kind: str,
        x: MonoidElement,
        y: MonoidElement,
        budget: int = DEFAULT_STEP_BUDGET,
        max_len: int | None = None,
    ) -> MonoidElement | None:
        """kind="under": x\\y with x*(x\\y) = x v y.
        kind="over":  x/y with (x/y)*y = left-lcm of x and y.
        None when the corresponding lcm does not exist.
        """
        if kind == "under":
            out = self.lcm_data("right", x, y, budget, max_len)
            return None if out is None else out[1]
        if kind == "over":
            out = self.lcm_data("left", x, y, budget, max_len)
            return None if out is None else out[2]
        raise ValueError(f"kind must be 'under' or 'over', got {kind!r}")

    def lcm_data(
        self,
        side: str,
        x: MonoidElement,
        y: MonoidElement,
        budget: int = DEFAULT_STEP_BUDGET,
        max_len: int | None = None,
    ):
        """(lcm, complement-of-x, complement-of-y) or None, cached.

        side="right": x*c_x = y*c_y = lcm  (c_x = x\\y, c_y = y\\x);
        side="left":  c_x*x = c_y*y = lcm  (c_x = y/x, c_y = x/y).
        """
        self._check(x, y)
        if side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', got {side!r}")
        key = (side, x.key, y.key)
        hit = self._lcm_cache.get(key)
        if hit is not None:
            if hit[0] == "ok":
                return hit[1]
            if hit[0] == "absent":
                return None
            # a rerun can only settle if it is allowed more room somewhere
            tried_budget, tried_len = hit[1], hit[2]
            no_looser_steps = budget <= tried_budget
            no_looser_len = tried_len is None or (max_len is not None and max_len <= tried_len)
            if no_looser_steps and no_looser_len:
                raise BudgetExhausted(
                    f"{side}-lcm of {x} and {y} undetermined within budget",
                    steps=tried_budget,
                )
        if side == "right":
            word: SignedWord = signed_of_positive(x.key, -1) + signed_of_positive(y.key)
        else:
            word = signed_of_positive(x.key) + signed_of_positive(y.key, -1)
        try:
            terminal = reverse_full(self.presentation, side, word, budget, max_len).word
        except BudgetExhausted:
            self._lcm_cache[key] = ("budget", budget, max_len)
            raise
        split = self._split_terminal(terminal, side)
        if split is None:
            self._lcm_cache[key] = ("absent",)
            return None
        if side == "right":
            vp, up = split  # terminal = vp * invert(up), both positive
            lcm = self.element(x.key + vp)
            if self.element(y.key + up) != lcm:
                raise StructuralError("reversing terminal is not a common multiple")
            data = (lcm, self.element(vp), self.element(up))
        else:
            up, vp = split  # terminal = invert(up) * vp
            lcm = self.element(up + x.key)
            if self.element(vp + y.key) != lcm:
                raise StructuralError("reversing terminal is not a common multiple")
            # (vp)*y = lcm makes vp the over-complement x/y; up is y/x
            data = (lcm, self.element(up), self.element(vp))
        self._lcm_cache[key] = ("ok", data)
        return data

    @staticmethod
    def _split_terminal(word: SignedWord, side: str):
        """Split a reversing terminal into its two constant-sign halves.

        Right terminals must be positive-then-negative, left terminals
        negative-then-positive; any other shape means the reversing blocked
        on a free pair, i.e. no common multiple exists.
        """
        first_neg = len(word)
        for k, c in enumerate(word):
            if c < 0:
                first_neg = k
                break
        if side == "right":
            pos, neg = word[:first_neg], word[first_neg:]
        else:
            first_pos = len(word)
            for k, c in enumerate(word):
                if c > 0:
                    first_pos = k
                    break
            neg, pos = word[:first_pos], word[first_pos:]
        if any(c < 0 for c in pos) or any(c > 0 for c in neg):
            return None
        pos_key = bytes(c - 1 for c in pos)
        neg_key = bytes(-c - 1 for c in reversed(neg))
        return (pos_key, neg_key) if side == "right" else (neg_key, pos_key)
