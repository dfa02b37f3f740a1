import pytest

import levelrank as lr


def test_core_and_quotient():
    assert lr.m_core([8, 6, 1], 3) == [5, 3, 1]
    assert lr.m_quotient([8, 6, 1], 3, 2) == [[1, 1], [], []]
    assert lr.big_upsilon(3, [8, 6, 1], 2) == ([[1, 1], [], []], [3, 0, -1])
    assert lr.beta_set([8, 6, 1], 2, -4, 10) == [-4, -3, -2, 0, 6, 9]
    assert lr.is_core([5, 3, 1], 3)
    assert lr.conjugate([3, 1]) == [2, 1, 1]
    assert len(lr.enum_partitions(8)) == 22


def test_runner_exchange():
    four = ([[], [], [], [1]], [1, 0, 1, 0])
    three = lr.big_upsilon_ml(4, 3, *four)
    assert three == ([[1, 1], [], []], [3, 0, -1])
    assert lr.big_upsilon_ml(3, 4, *three) == four
    assert lr.render_abacus(*three).splitlines()[0] == "… -9 -6 -3  0  -  6  9"


def test_affine_action():
    assert lr.act_on_charges("(2,0,-1)o[201]", [0, 0, 1]) == [3, 0, -1]
    moved = lr.act_on_charged("(2,0,-1)o[201]", *lr.big_upsilon(3, [5, 3], 1))
    assert moved == lr.big_upsilon(3, [8, 6, 1], 2)


def test_gl8_duality():
    assert lr.series_intersection(8, 4, [2, 2], 3, [2]) == [[5, 3], [2, 2, 1, 1, 1, 1]]
    report = lr.verify_duality(8, 4, [2, 2], 3, [2], 4, "(1,0,0,-1)o[1032]", "(2,0,-1)o[201]")
    assert report["pass"]
    assert report["left"]["block_size"] == 2
    assert report["right"]["effective_charge"] == [0, 3, 3]
    assert not report["congruence_componentwise"]
    assert lr.verify_duality(8, 4, [2, 2], 3, [2])["witness_source"] == "searched"


def test_uglov():
    report = lr.verify_uglov(2, 3, 3, 3)
    assert report["status"] == "PASS"
    assert all(inst["status"] == "PASS" for inst in report["instances"])


def test_errors():
    with pytest.raises(ValueError):
        lr.parse_partition("3,x")
    with pytest.raises(ValueError):
        lr.m_core([1, 3], 2)
    with pytest.raises(lr.LimitError):
        lr.enum_partitions(100)
