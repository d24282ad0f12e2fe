import pytest

cy2 = pytest.importorskip("cy2")


def test_counts():
    assert cy2.T(3) == 32
    assert cy2.count("A", 2, 1) == 20
    assert cy2.count("D", 1, 1) == 10
    assert [cy2.s(m) for m in range(3, 7)] == [1, 4, 17, 82]
    assert cy2.count_ptolemy(6) == 82


def test_big_values_are_exact():
    assert cy2.T(50) > 2**64
    assert cy2.T(50) % 2 == 0


def test_category_and_perp():
    c = cy2.Category("A", 2, 2)
    assert len(c) == 18
    assert c.name == "A_{2,2}"
    perp = c.right_perp(["(1,3)"], shift=-1)
    assert perp == ["(1,3)", "(1,4)", "(1,6)", "(1,7)", "(1,9)", "(3,6)", "(3,7)", "(3,9)"]
    assert c.right_perp([[4, 6]], shift=-1) == perp


def test_enumeration():
    c = cy2.Category("D", 1, 1)
    halves = c.torsion_halves()
    assert len(halves) == 10
    assert all(c.is_torsion_half(x) for x in halves)
    records = c.records(hearts=True)
    assert sum(r["t_structure"] for r in records) == 2


def test_hearts_and_wings():
    c = cy2.Category("A", 2, 2)
    assert c.heart([])["catalog_note"] == "zero heart"
    assert c.wings("(1,3),(1,4),(2,4)") == [("(1,4)", ["(1,3)", "(1,4)", "(2,4)"])]
    assert c.svg([]).startswith("<svg")


def test_errors():
    with pytest.raises(ValueError):
        cy2.Category("E", 1, 1)
    with pytest.raises(ValueError):
        cy2.Category("A", 0, 1)
    c = cy2.Category("A", 2, 2)
    with pytest.raises(ValueError):
        c.right_perp([[1, 2]])
    with pytest.raises(ValueError):
        c.heart("(1,3),(2,4)")


def test_verify():
    assert all(ok for _, _, ok in cy2.verify())
