"""Pure-Python congruence-closure kernel.

`congruence_class` saturates a positive word under a set of homogeneous
rewrite rules (both orientations of each defining relation).  This is the
innermost loop of the whole package: element equality, divisibility, gcds
and divisor enumeration all reduce to word classes.  A compiled twin lives
in _closure_cy.pyx; the two must stay behaviourally identical.
"""

BACKEND = "python"


def congruence_class(word: bytes, rules: tuple[tuple[bytes, bytes], ...]) -> frozenset:
    """All words obtainable from `word` by applying rules at any position."""
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for lhs, rhs in rules:
            start = w.find(lhs)
            while start >= 0:
                u = w[:start] + rhs + w[start + len(lhs):]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
                start = w.find(lhs, start + 1)
    return frozenset(seen)
