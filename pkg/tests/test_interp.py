import itertools

import pytest

from chevalley import groups as fg, interp
from chevalley.errors import EmptyCellSet, NoPartner, NoValidB, UnsupportedFamily


@pytest.fixture(scope="module")
def psl27():
    return fg.enumerate("PSL", 2, 7)


def test_cell_set_sizes(psl27):
    assert len(interp.cell_set(psl27)) == 48
    G9 = fg.enumerate("PSL", 2, 9)
    cells = interp.cell_set(G9)
    assert len(cells) == 80
    assert all(G9.element_orders()[c] == 3 for c in cells)


@pytest.mark.parametrize("q", [3, 5])
def test_cell_set_empty_boundary(q):
    with pytest.raises(EmptyCellSet):
        interp.cell_set(fg.enumerate("PSL", 2, q))


def test_needs_psl2():
    with pytest.raises(UnsupportedFamily):
        interp.cell_set(fg.enumerate("SL", 2, 7))


def test_frame_sizes(psl27):
    frame = interp.build_frame(psl27)
    assert len(frame.X_A) == 7 and frame.A == interp.cell_set(psl27)[0]
    assert len(interp.build_frame(fg.enumerate("PSL", 2, 9)).X_A) == 9


def test_identity_is_not_a_cell(psl27):
    with pytest.raises(ValueError):
        interp.build_frame(psl27, A=psl27.identity)


def test_bad_b(psl27):
    frame = interp.build_frame(psl27)
    with pytest.raises(NoValidB):
        interp.build_frame(psl27, frame.A, B=frame.A)


def test_e_map(psl27):
    frame = interp.build_frame(psl27)
    with pytest.raises(NoPartner):
        interp.e_map(frame, psl27.identity)
    vals = [interp.e_map(frame, m) for m in frame.X_A if m != psl27.identity]
    assert all(v in set(frame.E_AB) for v in vals)
    assert interp.three_term_closed(frame)


@pytest.mark.parametrize("q", [7, 9, 11, 13])
def test_reconstruction(q):
    K, v = interp.reconstruct_field(fg.enumerate("PSL", 2, q))
    assert v["field_order"] == q and v["isomorphic"]
    assert v["disambiguation_exactly_one"] and v["two_candidates_each"]
    R = K.ring()
    n = R.size
    for a, b, c in itertools.product(range(n), repeat=3):
        assert R.mul[a][R.add[b][c]] == R.add[R.mul[a][b]][R.mul[a][c]]
        assert R.mul[R.mul[a][b]][c] == R.mul[a][R.mul[b][c]]
    assert all(R.mul[a][b] == R.mul[b][a] for a in range(n) for b in range(n))


def test_addition_has_exponent_p(psl27):
    K, _ = interp.reconstruct_field(psl27)
    R = K.ring()
    for a in range(R.size):
        x = R.zero
        for _ in range(7):
            x = R.add[x][a]
        assert x == R.zero


def test_frame_independence_q7(psl27):
    out = interp.frame_independence(psl27)
    assert out["all_isomorphic"] and out["frames"] == 672 and out["invalid_B"] == 0


@pytest.mark.parametrize("q", [3, 5])
def test_boundary_verdicts(q):
    v = interp.verdict(q)
    assert v["boundary_case"] and v["cell_set_size"] == 0
