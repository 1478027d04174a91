import dataclasses

import pytest

from chevalley import fields as F, groups as fg, reps, roots as R
from chevalley.errors import (CharThreeForbiddenForG2, NeedsImaginaryUnit, NotInvertible,
                              UnsupportedFamily)
from chevalley.matrices import Matrix

F5, F7 = F.make_field("prime", 5), F.make_field("prime", 7)


def test_sl3_root_element():
    rep = reps.representation(R.build("A2"), fld=F7)
    x = reps.x_elem(rep, rep.system.simple[0], F7(3)).matrix
    assert x.rows == ((1, 3, 0), (0, 1, 0), (0, 0, 1))


def test_x_at_zero_is_identity():
    for label, f in (("A2", F7), ("C2", F5), ("B2", F7), ("G2", F5)):
        rep = reps.representation(R.build(label), fld=f)
        for a in rep.roots:
            assert reps.x_elem(rep, a, f(0)).is_identity()


def test_g2_needs_i():
    with pytest.raises(NeedsImaginaryUnit):
        reps.representation(R.build("G2"), fld=F7)
    with pytest.raises(CharThreeForbiddenForG2):
        reps.representation(R.build("G2"), fld=F.make_field("prime", 3))
    assert reps.representation(R.build("G2"), fld=F5).n == 7


def test_wrong_variant():
    with pytest.raises(UnsupportedFamily):
        reps.representation(R.build("A2"), "symplectic")


def _diag(rep, k, t):
    return reps.h_elem(rep, reps.g2_root(k), t).matrix.diagonal()


def test_g2_h_forms():
    rep = reps.representation(R.build("G2"))
    f = rep.field
    t = f.convert(3)
    ti = f.inv(t)
    t2, t2i = f.mul(t, t), f.mul(ti, ti)
    assert _diag(rep, 1, t) == (f.one, t2, t2i, t, ti, ti, t)
    assert _diag(rep, 2, t) == (f.one, ti, t, f.one, f.one, t, ti)


def test_g2_printed_comparison_h():
    cmp = reps.g2_printed_comparison()
    assert cmp["h"][1] == [] and cmp["h"][2] == []


@pytest.mark.parametrize("label,field", [("G2", reps.QI), ("G2", F5), ("A3", reps.QQ),
                                         ("C3", reps.QQ), ("B3", reps.QQ), ("D4", reps.QQ)])
def test_chevalley_properties(label, field):
    rep = reps.representation(R.build(label), fld=field)
    assert reps.chevalley_report(rep)["ok"]


def test_g2_lemma_chain():
    out = reps.g2_lemma_chain(reps.representation(R.build("G2"), fld=F5))
    assert out["involution"] and all(out["chain"])
    assert all(out["commutes_with_H_involutions"])


def test_g2_weyl_group_order_from_matrices():
    rep = reps.representation(R.build("G2"), fld=F5)
    gens = [reps.w_elem(rep, reps.g2_root(k), 1).matrix for k in (1, 2)]
    # images of the Weyl group in N/H: act on the 12 root spaces
    perms = set()
    frontier = [Matrix.identity(F5, 7)]
    seen = {frontier[0]}
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                y = m * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    for m in seen:
        perms.add(tuple(x != 0 for r in m.rows for x in r))
    assert len(perms) == 12


def test_structure_constants_a2():
    rep = reps.representation(R.build("A2"))
    a1, a2 = rep.system.simple
    (c,) = reps.structure_constants(rep, a1, a2)
    assert c[:2] == (1, 1) and abs(c[2]) == 1


def test_structure_constants_b2_factor_two():
    rep = reps.representation(R.build("B2"))
    phi = rep.system
    e1, e2 = phi.root_from_coefficients((1, 1)), phi.root_from_coefficients((0, 1))
    (c,) = reps.structure_constants(rep, e1, e2)
    assert c[:2] == (1, 1) and abs(c[2]) == 2


def test_structure_constants_b2_long_short():
    # [x_{e1-e2}(t), x_{e2}(s)] = x_{e1}(c11 ts) x_{e1+e2}(c12 ts^2), frozen from the model
    rep = reps.representation(R.build("B2"))
    phi = rep.system
    long, short = phi.root_from_coefficients((1, 0)), phi.root_from_coefficients((0, 1))
    consts = reps.structure_constants(rep, long, short)
    assert [c[:2] for c in consts] == [(1, 1), (1, 2)]
    assert [abs(c[2]) for c in consts] == [1, 1]


def test_structure_constants_empty():
    rep = reps.representation(R.build("A3"))
    a1, _, a3 = rep.system.simple
    assert reps.structure_constants(rep, a1, a3) == []


@pytest.mark.parametrize("label,p", [("A2", 7), ("C2", 5), ("B2", 7), ("D4", 5), ("G2", 5)])
def test_relations_hold(label, p):
    rep = reps.representation(R.build(label), fld=F.make_field("prime", p))
    r = reps.verify_relations(rep, 20, 0)
    assert r.ok
    assert {rec["relation"] for rec in r.records} == {"R1", "R2", "R3", "R4", "R5", "R6"}


def test_relations_detect_a_broken_generator():
    rep = reps.representation(R.build("A2"), fld=F7)
    a = rep.system.simple[0]
    two = F7.from_int(2)
    powers = [D.scale(F7.power(two, k)) for k, D in enumerate(rep.divided[a])]
    bad = dataclasses.replace(rep, divided={**rep.divided, a: powers})
    r = reps.verify_relations(bad, 5, 0)
    assert not r.ok and r.violations


def test_relation_report_is_deterministic():
    rep = reps.representation(R.build("C2"), fld=F5)
    assert reps.verify_relations(rep, 5, 3).records == reps.verify_relations(rep, 5, 3).records


def test_bruhat_identity_and_w0():
    rep = reps.representation(R.build("A1"), fld=F7)
    I = Matrix.identity(F7, 2)
    b = reps.bruhat_sl(I, rep)
    assert b.u == b.h == b.w == b.u2 == I
    w0 = reps.w_elem(rep, rep.system.simple[0], 1).matrix
    b = reps.bruhat_sl(w0, rep)
    assert b.w == w0 and b.u == b.h == b.u2 == I


def test_bruhat_singular():
    rep = reps.representation(R.build("A1"), fld=F7)
    with pytest.raises(NotInvertible):
        reps.bruhat_sl(Matrix.from_values(F7, [[1, 2], [2, 4]]), rep)


def test_bruhat_sl2_f7_exhaustive():
    out = reps.bruhat_exhaustive(2, 7)
    assert out["ok"] and out["order"] == 336


def test_bruhat_sl3_f3_exhaustive():
    out = reps.bruhat_exhaustive(3, 3)
    assert out["ok"] and out["order"] == 5616 and out["weyl_cells_hit"] == 6


def test_commutator_width_values():
    assert reps.commutator_width(fg.enumerate("PSL", 2, 7)) == 1
    assert reps.commutator_width(fg.trivial_group()) == 0
    assert reps.commutator_width(fg.enumerate("SL", 2, 5)) <= reps.width_bound(1, 1)


def test_width_bound():
    assert reps.width_bound(1, 1) == 18


def test_h_subgroup_d4_square_condition():
    h = reps.h_subgroup(reps.representation(R.build("D4"), fld=F5))
    assert h.all_square and h.all_arise and h.index == 2


def test_h_subgroup_b3_f7_involutions():
    h = reps.h_subgroup(reps.representation(R.build("B3"), fld=F7))
    minus = F7.from_int(-1)
    for d in h.involutions:
        assert sum(1 for x in d[:3] if x == minus) % 2 == 0
    assert h.involutions


def test_h_subgroup_needs_orthogonal():
    with pytest.raises(UnsupportedFamily):
        reps.h_subgroup(reps.representation(R.build("A2"), fld=F5))
