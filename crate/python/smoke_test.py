#!/usr/bin/env python3
"""Smoke test for the mvc_py extension module.

Builds the cdylib with cargo, loads it as an importable module from a
temporary directory, and exercises the main surface end to end. Exits
nonzero on the first failed assertion.
"""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

REPO = pathlib.Path(__file__).resolve().parent.parent


def build_and_import():
    subprocess.run(
        ["cargo", "build", "-p", "mvc-python"],
        cwd=REPO,
        check=True,
    )
    built = REPO / "target" / "debug" / "libmvc_py.so"
    stage = pathlib.Path(tempfile.mkdtemp(prefix="mvc_py_"))
    shutil.copy2(built, stage / "mvc_py.so")
    sys.path.insert(0, str(stage))
    import mvc_py

    return mvc_py


def main():
    m = build_and_import()

    # Graph construction and encoding round-trip.
    c5 = m.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert c5.n == 5 and c5.m == 5
    assert c5.is_connected() and c5.diameter() == 2
    assert m.Graph.from_graph6(c5.graph6()) == c5

    # Exact solve: a 5-cycle takes all distinct colors.
    r = m.mvc_exact(c5)
    assert r.value == 5, r
    assert m.mvc_oracle(c5) == 5

    # The witness re-verifies; breaking it yields an unserved pair.
    assert m.check_coloring(c5, r.witness) is None
    p4 = m.construct("path", n=4)
    assert m.check_coloring(p4, [0, 1, 1, 2]) is None
    assert m.check_coloring(p4, [0, 1, 2, 3]) == (0, 3)

    # Families: a double star is a diameter-3 tree; the dense family
    # attains its designed value.
    ds = m.construct("double_star", a=3, b=3)
    assert ds.n == 8 and ds.m == 7 and ds.diameter() == 3
    cep = m.construct("clique-edge-path", n=9, t=2)
    assert m.mvc_exact(cep).value == 4

    # Bounds report on the 6-path: the leafy-tree bound meets the
    # diameter bound, pinning the exact value 3.
    p6 = m.construct("path", n=6)
    b = json.loads(m.bounds_json(p6))
    assert b["spanning_tree_lower"] == 3
    assert b["diameter_upper"] == 3
    assert b["exact"] == 3
    edges, leaves, exact = m.max_leaf_tree(p6)
    assert len(edges) == 5 and leaves == 2 and exact

    # Closed forms.
    assert [m.f_v(10, k) for k in range(3, 11)] == [9, 11, 13, 16, 20, 25, 30, 37]
    assert m.g_v(10, 10) == 9 and m.g_v(10, 9) is None
    assert m.eg_lower_bound(8, 17) == 7
    assert m.max_diameter(6, 6) == 4
    assert [m.cycle_mvc(n) for n in (3, 5, 6, 12)] == [3, 5, 3, 3]

    # Enumeration counts up to isomorphism.
    assert [len(m.enumerate_connected(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    assert len(m.enumerate_connected(6, m=5)) == 6  # the six 6-vertex trees

    # Complement pairs: the 5-path attains the minimum sum 8.
    p5 = m.construct("path", n=5)
    assert m.ng_sum(p5) == (3, 5, 8)
    ng = json.loads(m.verify_ng_json(5))
    assert ng["pass"] and ng["min_sum"] == 8 and ng["max_sum"] == 10

    # Exhaustive verifications and the claim harness.
    eg = json.loads(m.verify_erdos_gallai_json(6))
    assert eg["pass"]
    check = json.loads(m.run_check_json("cycles", 12))
    assert check["pass"] and check["scanned"] == 10

    # Errors surface as ValueError.
    for call in (
        lambda: m.Graph.from_graph6("###"),
        lambda: m.mvc_exact(m.Graph(2, [])),
        lambda: m.construct("no-such-family", n=5),
        lambda: m.run_check_json("cycles", 99),
    ):
        try:
            call()
        except ValueError:
            pass
        else:
            raise AssertionError(f"expected ValueError from {call}")

    print("mvc_py smoke test: all assertions passed")


if __name__ == "__main__":
    main()
