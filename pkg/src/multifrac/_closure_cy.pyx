# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled congruence-closure kernel (behavioural twin of _closure_py)."""

BACKEND = "cython"


def congruence_class(bytes word, tuple rules):
    """All words obtainable from `word` by applying rules at any position."""
    cdef set seen = {word}
    cdef list stack = [word]
    cdef bytes w, lhs, rhs, u
    cdef Py_ssize_t start, llen
    cdef tuple rule
    while stack:
        w = stack.pop()
        for rule in rules:
            lhs = <bytes>rule[0]
            rhs = <bytes>rule[1]
            llen = len(lhs)
            start = w.find(lhs)
            while start >= 0:
                u = w[:start] + rhs + w[start + llen:]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
                start = w.find(lhs, start + 1)
    return frozenset(seen)
