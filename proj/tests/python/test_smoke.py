from fractions import Fraction

import pytest

import qtorder


def test_free_group():
    assert qtorder.free_reduce("abBa") == "aa"
    assert qtorder.ball_size(2, 3) == 53
    assert len(qtorder.ball_enumerate(2, 1)) == 5
    assert qtorder.counting_hom("aBaB", 2) == -2
    assert qtorder.brooks_count("ababab") == 3
    assert qtorder.brooks_homogenized("abab") == 2
    assert qtorder.magnus_compare("e", "b") == "LESS"


def test_modular():
    assert qtorder.rademacher("SR") == 1
    assert qtorder.rademacher("SRR") == -1
    assert qtorder.rademacher("S") == 0
    d = qtorder.modular_decompose("RRS")
    assert d["left_s"] and d["right_s"]
    assert d["t"] == ["T2"]


def test_braids():
    assert qtorder.dehornoy_floor("1 1 1 1 1", 2) == 2
    assert qtorder.dehornoy_compare("", "1", 3) == "LESS"
    assert qtorder.handle_reduce("1 -1 2", 3) == "2"
    lo, hi = qtorder.braid_translation_number("1", 2)
    assert lo <= Fraction(1, 2) <= hi


def test_circle():
    rot = {"breakpoints": [[0, 1]], "values": [[3, 5]]}
    assert qtorder.pl_rotation_number(rot) == (Fraction(3, 5), Fraction(3, 5))
    half = {"breakpoints": [[0, 1], [1, 2]], "values": [[0, 1], [3, 4]]}
    assert qtorder.pl_eval(half, Fraction(1, 4)) == Fraction(3, 8)
    value, err = qtorder.mobius_translation_number('{"matrix": [[1, 0], [0, 1]], "winding": 1}')
    assert abs(value - 1) <= err


def test_reports_and_embedding():
    (r,) = qtorder.compute("rotation", map='{"breakpoints": [[0, 1]], "values": [[3, 5]]}', iters=100)
    assert r["value"] == {"num": 3, "den": 5}
    reps = qtorder.verify("completion", seed=7)
    assert reps and all(x["status"] == "PASS" for x in reps)
    rows = qtorder.embedding("counting", 2)
    assert len(rows) == 17


def test_errors_raise():
    with pytest.raises(qtorder.QtorderError):
        qtorder.rademacher("SX")
    with pytest.raises(qtorder.QtorderError):
        qtorder.dehornoy_floor("4", 3)
