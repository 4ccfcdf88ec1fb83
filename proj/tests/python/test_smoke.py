import pathlib

import pytest

import toricsplit as ts

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_surface_counts():
    assert [len(ts.surfaces(k)) for k in range(5)] == [1, 1, 2, 6, 13]
    assert ts.surfaces(0) == [[1, 1, 1]]


def test_blowup_and_canonical_form():
    g = ts.blowup([1, 1, 1], 1)
    assert g == [0, -1, 0, 1]
    assert ts.canonical_form(g) == [-1, 0, 1, 0]


def test_cp2_tangent():
    fan = ts.Fan.from_graph([1, 1, 1])
    assert fan.rays == [[1, 0], [0, 1], [-1, -1]]
    result = ts.tangent_split(fan)
    assert result["xi"] == [[2, 1]] * 3
    assert result["q"] == [[1, 1, 1]] * 3
    (t,) = result["types"]
    assert sorted(t["classes"]) == [[1, 0, 0], [2, 0, 0]]


def test_hirzebruch_tangent():
    f0 = ts.Fan.from_graph([0, 0, 0, 0])
    strict = ts.tangent_split(f0, strict=True)["types"]
    assert [t["classes"] for t in strict] == [[[0, 0, 0, 0], [2, 2, 0, 0]]]
    f2 = ts.Fan.from_graph([0, 2, 0, -2])
    assert ts.tangent_splitting_system(f2) == [[2, 0], [2, 2], [2, 0], [2, -2]]
    assert ts.tangent_split(f2)["types"] == []


def test_splitting_types_roundtrip_big_ints():
    fan = ts.Fan.projective_space(2)
    big = 10**30
    xi = [[big, 0]] * 3
    types = ts.splitting_types(fan, xi)
    assert types and any([big, 0, 0] in t["classes"] for t in types)


def test_bundle_and_euler_text():
    cp2 = ts.Fan.from_text((DATA / "cp2.fan").read_text())
    res = ts.bundle_split(cp2, (DATA / "e111.bundle").read_text())
    assert res["xi"] == [[2, 1]] * 3
    assert ts.bundle_split(cp2, (DATA / "e211.bundle").read_text())["types"] == []
    f0 = ts.Fan.from_graph([0, 0, 0, 0])
    euler = "euler\n" + "".join(
        f"summand {' '.join('1' if j == i else '0' for j in range(4))} "
        f"section {' '.join('1' if j == i else '0' for j in range(4))}\n"
        for i in range(4)
    )
    assert ts.euler_split(f0, euler)["xi"] == [[1, 1, 0]] * 4


def test_table41_small():
    rows = ts.table41(5)
    assert [(k, w) for k, w, _ in rows] == [
        (3, [-1, -1, -1, -1, -1, -1]),
        (5, [-2, -1, -2, -1, -2, -1, -2, -1]),
    ]
    assert rows[0][2] == [[[2, 4, 4, 2], [-1, -2, -2, -1]]]


def test_errors_carry_kind():
    with pytest.raises(ts.Error) as info:
        ts.Fan.from_graph([1, 1, 1, 1])
    assert info.value.kind == "graph"
    with pytest.raises(ValueError):
        ts.Fan.from_text("dim 2\nbogus\n")
    with pytest.raises(ts.Error):
        ts.surfaces(13)
