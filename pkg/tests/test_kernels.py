import random
import subprocess
import sys
from pathlib import Path

from multifrac._closure_py import congruence_class as pure_closure
from multifrac._kernels import kernel_backend

from oracles import all_threes, braid_pair, naive_class


def _rules(pres):
    out = []
    for rel in pres.relations():
        l, r = pres.encode(rel.lhs), pres.encode(rel.rhs)
        out.append((l, r))
        out.append((r, l))
    return tuple(out)


def test_pure_kernel_matches_string_oracle():
    pres = all_threes()
    rules = _rules(pres)
    rng = random.Random(61)
    for _ in range(60):
        w = "".join(rng.choice("abc") for _ in range(rng.randint(0, 7)))
        got = {pres.word_str(k) if k else "" for k in pure_closure(pres.encode(w), rules)}
        want = set(
            naive_class(w, [("".join(r.lhs), "".join(r.rhs)) for r in pres.relations()])
        )
        want = {x if x else "" for x in want}
        assert got == want


def test_compiled_kernel_matches_pure_if_present():
    try:
        from multifrac._closure_cy import congruence_class as fast_closure
    except ImportError:
        import pytest

        pytest.skip("compiled kernel not built")
    pres = braid_pair(4)
    rules = _rules(pres)
    rng = random.Random(67)
    for _ in range(80):
        w = bytes(rng.randrange(2) for _ in range(rng.randint(0, 9)))
        assert fast_closure(w, rules) == pure_closure(w, rules)


def test_env_var_forces_pure_backend():
    code = "from multifrac import kernel_backend; print(kernel_backend())"
    src = str(Path(__file__).parent.parent / "src")
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PYTHONPATH": src, "MULTIFRAC_PURE": "1"},
    )
    assert out.stdout.strip() == "python"
    assert kernel_backend() in ("cython", "python")
