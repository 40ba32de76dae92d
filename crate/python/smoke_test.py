#!/usr/bin/env python3
"""Smoke test for the listpoly_py extension module.

Builds nothing itself: run `cargo build -p listpoly-py` first, then
`python3 python/smoke_test.py`. The script copies the cdylib next to a
temp dir under an importable name.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent

SAMPLE_INSTANCE = """\
X = {a, b}
A = {p, q, r}
lA: p -> 2, q -> 0, r -> 1
g: (0, p) -> a, (1, p) -> b, (0, r) -> a
"""


def find_cdylib() -> pathlib.Path:
    for profile in ("debug", "release"):
        for name in ("liblistpoly_py.so", "listpoly_py.dll", "liblistpoly_py.dylib"):
            p = ROOT / "target" / profile / name
            if p.exists():
                return p
    sys.exit("build the module first: cargo build -p listpoly-py")


def main() -> None:
    src = find_cdylib()
    with tempfile.TemporaryDirectory() as tmp:
        shutil.copy(src, pathlib.Path(tmp) / "listpoly_py.so")
        sys.path.insert(0, tmp)
        import listpoly_py as lp

        assert lp.eval_term("monus(3, 5)") == "0"
        assert lp.eval_term("idUntil(7, 3)") == "2"
        assert (
            lp.eval_term("nthDef(x, 1, [a, b, c])", ctx="x: X", x="a,b,c", binds=["x=a"])
            == "b"
        )

        report, ok = lp.adjoint(SAMPLE_INSTANCE)
        assert ok, report
        assert "h: p -> [a, b]" in report
        assert "h: q -> []" in report
        assert "UNIQUENESS PASS (1 solution)" in report

        report, ok = lp.poly(card_x=2, max_len=3)
        assert ok, report
        assert "total 15" in report

        report, ok = lp.laws(nat_max=4, len_max=2, card_x=2, seed=0, samples=3)
        assert ok, report
        assert "FAIL" not in report

    print("smoke test passed")


if __name__ == "__main__":
    main()
