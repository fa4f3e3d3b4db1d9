"""Smoke test for the qlie extension module.

Build with `cargo build -p qlie-py` and copy target/debug/libqlie.so to
python/qlie.so, then run `python3 python/smoke_test.py`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import qlie  # noqa: E402


def main():
    F = qlie.FieldElement
    two = qlie.qint(2)
    assert str(two) == str(F.q() + F.q() ** -1)
    assert (two / two) == F("1")
    assert F("v^2").eval("2") == "4"
    try:
        F("1") / F("0")
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("division by zero accepted")

    eps, delta = qlie.cup_cap()
    assert (eps @ delta).get(0, 0) == F("0") - two

    r = qlie.rhat()
    assert (r @ r.inverse()).entries() == [(i, i, "1") for i in range(4)]
    p2 = qlie.jones_wenzl(2)
    assert p2 @ p2 == p2 and p2.rank() == 3
    assert qlie.cabled_braiding(1, 1) == r

    fams = qlie.synthesize()
    assert fams.certificates["adjoint"]["ybe"] == "zero"
    fam = fams.adjoint
    assert fam.assemble(F("0")) == fam.x
    try:
        fam.assemble(two.inverse())
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("pole accepted")
    assert fams.module(2).limit_residual(2).is_zero()

    g = qlie.Algebra.sl2()
    assert g.dim == 3 and g.defects() == (True, True)
    assert qlie.Algebra.from_json(g.to_json()).dim == 3

    m = json.loads(qlie.dump("qint3"))
    assert m["entries"] == [[0, 0, str(qlie.qint(3))]]

    report = json.loads(qlie.verify("classical", 2))
    assert all(e["status"] == "pass" for e in report["entries"])
    print("smoke test ok:", len(report["entries"]), "classical checks pass")


if __name__ == "__main__":
    main()
