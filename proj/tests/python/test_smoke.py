"""Smoke tests for the _bpps extension module."""

import _bpps as bpps


def test_generate_and_roundtrip():
    inst = bpps.generate_instance(10, 5, seed=42)
    assert inst.n == 10
    assert inst.d == 5
    text = bpps.serialize_instance(inst)
    again = bpps.parse_instance(text)
    assert bpps.serialize_instance(again) == text


def test_heuristics_feasible():
    inst = bpps.generate_instance(12, 6, seed=7)
    for sol in (bpps.ffd(inst), bpps.approx_solve(inst),
                bpps.vns(inst, c_max=20, seed=3)):
        assert bpps.is_feasible(inst, sol)
        assert 1 <= bpps.val_bpps(inst, sol) <= bpps.val_vbpp(sol)


def test_exact_matches_enumeration():
    inst = bpps.generate_instance(7, 4, seed=11)
    res = bpps.branch_and_price(inst)
    assert res["status"] == "optimal"
    opt = bpps.val_bpps(inst, bpps.solve_enumeration(inst))
    assert bpps.val_bpps(inst, res["solution"]) == opt
    assert res["lb"] == res["ub"] == opt


def test_bounds_below_optimum():
    inst = bpps.generate_instance(8, 4, seed=5)
    opt = bpps.val_bpps(inst, bpps.solve_enumeration(inst))
    assert bpps.lb_continuous(inst) <= bpps.lb_root(inst) <= opt


def test_manual_instance():
    inst = bpps.Instance(2, 100, [60, 60], [[0], [1]])
    sol = bpps.Solution([[0, 1]])
    assert bpps.is_feasible(inst, sol)
    assert bpps.val_bpps(inst, sol) == 1
