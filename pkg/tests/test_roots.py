import pytest
from hypothesis import given, settings, strategies as st

from chevalley import roots as R
from chevalley.errors import InadmissibleType, NotARoot


@pytest.mark.parametrize("label,total,positive", [
    ("A2", 6, 3), ("E8", 240, 120), ("G2", 12, 6), ("F4", 48, 24), ("D4", 24, 12),
])
def test_build_counts(label, total, positive):
    phi = R.build(label)
    assert len(phi.roots) == total and len(phi.positive) == positive


def test_build_two_spellings():
    assert R.build("E", 8).positive == R.build("E8").positive


@pytest.mark.parametrize("t,l", [("A", 0), ("B", 1), ("D", 1), ("E", 5), ("G", 3), ("Z", 2)])
def test_inadmissible(t, l):
    with pytest.raises(InadmissibleType):
        R.build(t, l)


def test_g2_pairings():
    a = R.published_numbering("G2")
    assert R.pairing(a[1], a[0]) == -3
    assert R.pairing(a[5], a[0]) == 0


def test_reflections():
    phi = R.build("A2")
    a1, a2 = phi.simple
    assert R.reflect(a1, a1) == -a1
    assert R.reflect(a1, a2) == a1 + a2


def test_weyl_orders():
    assert R.weyl(R.build("G2")).order == 12
    assert R.weyl(R.build("A2")).order == 6
    assert R.weyl(R.build("B2")).order == 8


def test_weyl_cap():
    from chevalley.errors import ClosureBudgetExceeded
    with pytest.raises(ClosureBudgetExceeded):
        R.weyl(R.build("E8"))


def test_subsystem_closure_g2():
    phi = R.build("G2")
    a = R.published_numbering("G2")
    assert R.subsystem_closure(phi, [a[1], a[4]]).type_label == "A2"
    full = R.subsystem_closure(phi, [a[0], a[1]])
    assert full.type_label == "G2" and len(full.roots) == 12


def test_subsystem_single_root():
    phi = R.build("E8")
    assert R.subsystem_closure(phi, [phi.simple[0]]).type_label == "A1"


def test_even_pairing_f4():
    idx, sub = R.even_pairing_subsystem(R.build("F4"), [1])
    assert idx == [1, 3, 4, 7, 14, 17, 18, 19, 20, 24]
    assert sub.type_label == "A1+C3"


def test_even_pairing_e6():
    idx, sub = R.even_pairing_subsystem(R.build("E6"), [1])
    assert idx == [1, 2, 4, 5, 6, 9, 10, 13, 15, 20, 26, 29, 33, 34, 35, 36]
    assert sub.type_label == "A1+A5"


def test_even_pairing_e8():
    assert R.even_pairing_subsystem(R.build("E8"), [1])[1].type_label == "A1+E7"


def test_even_pairing_needs_indices():
    with pytest.raises(ValueError):
        R.even_pairing_subsystem(R.build("F4"), [])


def test_parse_root_expr():
    e7 = R.build("E7")
    r = R.parse_root_expr("1+3", e7)
    assert r == e7.simple[0] + e7.simple[2] and e7.is_positive(r)
    f4 = R.build("F4")
    assert R.parse_root_expr("α_1", f4) == f4.simple[0]


def test_parse_not_a_root():
    with pytest.raises(NotARoot):
        R.parse_root_expr("1+1", R.build("F4"))


def test_fixture_f4_line_21_flagged():
    rep = R.check_fixture("F4")
    line = next(ln for ln in rep.lines if ln.index == 21)
    assert line.status != "ok" and 21 in rep.corrections
    assert rep.matches


@pytest.mark.parametrize("label", ["F4", "E6", "E7", "E8"])
def test_fixtures_match(label):
    rep = R.check_fixture(label)
    assert rep.matches
    assert sorted(r.coords for r in rep.numbering) == sorted(r.coords for r in R.build(label).positive)


def test_fixture_unknown_correction_rejected():
    text = R._read_data("f4_positive.txt")
    with pytest.raises(ValueError):
        R.check_fixture("F4", text, "1 -> 2 0 0 0\n")


SYSTEMS = ["A3", "B3", "C3", "D4", "G2", "F4"]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SYSTEMS), st.data())
def test_reflection_preserves_system(label, data):
    phi = R.build(label)
    a = data.draw(st.sampled_from(phi.roots))
    b = data.draw(st.sampled_from(phi.roots))
    r = R.reflect(b, a)
    assert r in phi
    assert R.reflect(r, a) == b
    assert R.pairing(a, a) == 2


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3", "B3"]), st.data())
def test_weyl_permutes_roots(label, data):
    phi = R.build(label)
    W = R.weyl(phi)
    w = data.draw(st.sampled_from(W.elements))
    images = {W.apply(w, r) for r in phi.roots}
    assert images == set(phi.roots)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A4", "B3", "C3", "D4", "F4"])
def test_weyl_closure_matches_formula(label):
    phi = R.build(label)
    assert R.weyl(phi).order == R.predicted_weyl_order(phi)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["F4", "E6", "E7"]), st.data())
def test_even_pairing_stable_under_reordering(label, data):
    phi = R.build(label)
    J = data.draw(st.lists(st.integers(1, phi.rank), min_size=1, max_size=3, unique=True))
    a = R.even_pairing_subsystem(phi, J)
    b = R.even_pairing_subsystem(phi, list(reversed(J)))
    assert a[0] == b[0] and a[1].type_label == b[1].type_label
    sub = a[1]
    assert all(R.reflect(x, y) in sub.roots for x in sub.roots for y in sub.roots)
