"""The acceptance checks, shared by the test suite and ``verify-paper``.

Every check returns an :class:`Outcome` whose details are plain JSON data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import groups as fg
from . import interp, lattices, reps, roots
from .fields import finite_field


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] criterion {self.number}: {self.title}"


ROOT_TABLE_TYPES = ([("A", l) for l in range(1, 9)] + [("B", l) for l in range(2, 7)]
                    + [("C", l) for l in range(3, 7)] + [("D", l) for l in range(4, 7)]
                    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])


def table_positive_count(t: str, l: int) -> int:
    """Positive root count from the closed-form table."""
    if t == "A":
        return (l * l + l) // 2
    if t in "BC":
        return l * l
    if t == "D":
        return l * l - l
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(t, l)]


def root_tables() -> Outcome:
    rows = {}
    for t, l in ROOT_TABLE_TYPES:
        phi = roots.build(t, l)
        rows[phi.label] = {"generated": len(phi.positive), "table": table_positive_count(t, l)}
    ok = all(r["generated"] == r["table"] for r in rows.values())
    return Outcome(1, "positive-root counts match the table", ok, rows)


def fixtures() -> Outcome:
    rows = {}
    for label in ("F4", "E6", "E7", "E8"):
        rep = roots.check_fixture(label)
        rows[label] = {"lines": len(rep.lines), "flagged": len(rep.flagged),
                       "corrections": len(rep.corrections), "missing": len(rep.missing),
                       "surplus": len(rep.surplus), "matches": rep.matches}
    return Outcome(2, "printed root lists match after corrections",
                   all(r["matches"] for r in rows.values()), rows)


WEYL_EXPECTED = {"G2": 12, "A2": 6, "B2": 8, "F4": 1152}


def weyl_orders() -> Outcome:
    rows = {}
    for label, want in WEYL_EXPECTED.items():
        phi = roots.build(label)
        rows[label] = {"closure": roots.weyl(phi).order, "expected": want,
                       "formula": roots.predicted_weyl_order(phi)}
    ok = all(r["closure"] == r["expected"] == r["formula"] for r in rows.values())
    return Outcome(3, "Weyl group orders by closure", ok, rows)


def g2_representation() -> Outcome:
    phi = roots.build("G2")
    details = {}
    for name, fld in (("Q(i)", reps.QI), ("F5", finite_field(5))):
        rep = reps.representation(phi, "g2_dim7", fld)
        r = reps.chevalley_report(rep)
        details[name] = {"ok": r["ok"], "failures": [str(x) for x in r["failures"][:5]]}
    st = reps.g2_structure()
    details["corrections"] = len(st.corrections)
    cmp = reps.g2_printed_comparison()
    details["h_mismatch"] = {str(k): v for k, v in cmp["h"].items()}
    h_ok = cmp["h"][1] == [] and cmp["h"][2] == []
    ok = details["Q(i)"]["ok"] and details["F5"]["ok"] and h_ok
    return Outcome(4, "G2 model satisfies the Chevalley properties", ok, details)


RELATION_CASES = (("A2", 7), ("C2", 5), ("B2", 7), ("G2", 5))


def _b2_has_two() -> dict:
    """The commutator of the two short positive roots e_2, e_1 of B_2 must
    carry the coefficient +-2 on e_1 + e_2."""
    rep = reps.representation(roots.build("B2"))
    phi = rep.system
    e2 = phi.root_from_coefficients((0, 1))
    e1 = phi.root_from_coefficients((1, 1))
    consts = reps.structure_constants(rep, e2, e1)
    return {"constants": [list(c) for c in consts],
            "ok": len(consts) == 1 and consts[0][:2] == (1, 1) and abs(consts[0][2]) == 2}


def steinberg_relations(samples: int = 20, seed: int = 0) -> Outcome:
    details = {}
    for label, p in RELATION_CASES:
        rep = reps.representation(roots.build(label), fld=finite_field(p))
        r = reps.verify_relations(rep, samples, seed)
        kinds = sorted({rec["relation"] for rec in r.records})
        details[f"{label}/F{p}"] = {"records": len(r.records), "violations": len(r.violations),
                                    "relations": kinds, "ok": r.ok and len(kinds) == 6}
    details["B2_factor_two"] = _b2_has_two()
    details["samples"] = samples
    return Outcome(5, "Steinberg relations R1-R6", all(v["ok"] for v in details.values()
                                                       if isinstance(v, dict)), details)


def bruhat() -> Outcome:
    details = {"SL2(F7)": reps.bruhat_exhaustive(2, 7), "SL3(F5)": reps.bruhat_exhaustive(3, 5)}
    return Outcome(6, "Bruhat decomposition round trip and uniqueness",
                   all(v["ok"] for v in details.values()), details)


def commutator_widths() -> Outcome:
    bound = reps.width_bound(1, 1)
    details = {"PSL2(F7)": reps.commutator_width(fg.enumerate("PSL", 2, 7)), "bound": bound}
    ok = details["PSL2(F7)"] == 1
    for q in (5, 7, 9):
        w = reps.commutator_width(fg.enumerate("SL", 2, q))
        details[f"SL2(F{q})"] = w
        ok = ok and w <= bound
    return Outcome(7, "commutator width", ok, details)


def _centralizer_derived_abelian(G, inv: int) -> bool:
    C = fg.centralizer(G, [inv])
    return fg.is_abelian(G, fg.derived_subgroup(G, C))


def involutions() -> Outcome:
    from .logic.pipelines import phi_a1
    details = {}
    ok = True
    for q in (5, 7, 9, 11, 13):
        G = fg.enumerate("PSL", 2, q)
        classes = fg.involution_classes(G)
        row = {"classes": len(classes), "sizes": [c.size for c in classes],
               "derived_abelian": all(_centralizer_derived_abelian(G, c.representative)
                                      for c in classes),
               "phi_A1": phi_a1(G)}
        details[f"PSL2(F{q})"] = row
        ok = ok and row["classes"] == 1 and row["derived_abelian"] and row["phi_A1"]
    G = fg.enumerate("PSL", 3, 3)
    classes = fg.involution_classes(G)
    row = {"classes": len(classes), "sizes": [c.size for c in classes],
           "derived_abelian": [_centralizer_derived_abelian(G, c.representative) for c in classes],
           "phi_A1": phi_a1(G)}
    details["PSL3(F3)"] = row
    ok = ok and not any(row["derived_abelian"]) and row["phi_A1"] is False
    return Outcome(8, "involution classes and the A1 sentence", ok, details)


def transfer_sentences() -> list:
    text = roots._read_data("transfer_sentences.txt")
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith(";")]


def transfer() -> Outcome:
    from .logic.evaluate import eval_group, eval_ring
    from .logic.syntax import parse_formula
    from .logic.translate import sl, translate
    details = {}
    ok = True
    for q in (3, 5):
        G, F = fg.enumerate("SL", 2, q), finite_field(q)
        rows = []
        for s in transfer_sentences():
            f = parse_formula(s)
            a, b = eval_group(f, G), eval_ring(translate(f, sl(2)), F)
            rows.append({"sentence": s, "group": a, "ring": b})
            ok = ok and a == b
        details[f"q={q}"] = rows
    return Outcome(9, "group sentences agree with their ring translations", ok, details)


EVEN_PAIRING_EXPECTED = {
    ("F4", (1,)): ("A1+C3", [1, 3, 4, 7, 14, 17, 18, 19, 20, 24]),
    ("E6", (1,)): ("A1+A5", [1, 2, 4, 5, 6, 9, 10, 13, 15, 20, 26, 29, 33, 34, 35, 36]),
    ("E6", (1, 2)): ("D5", None),
    ("E7", (1,)): ("A1+D6", None),
    ("E8", (1,)): ("A1+E7", None),
}


def centralizer_subsystems() -> Outcome:
    details = {}
    ok = True
    for (label, J), (typ, idx) in EVEN_PAIRING_EXPECTED.items():
        got_idx, sub = roots.even_pairing_subsystem(roots.build(label), J)
        row = {"type": sub.type_label, "expected_type": typ, "indices": got_idx}
        good = sub.type_label == typ and (idx is None or got_idx == idx)
        row["ok"] = good
        ok = ok and good
        details[f"{label}/{list(J)}"] = row
    return Outcome(10, "even-pairing centralizer subsystems", ok, details)


def expected_fundamental_group(t: str, l: int) -> list:
    if t == "A":
        return [l + 1] if l + 1 > 1 else []
    if t in "BC":
        return [2]
    if t == "D":
        return [2, 2] if l % 2 == 0 else [4]
    return {("E", 6): [3], ("E", 7): [2]}.get((t, l), [])


def lattice_checks() -> Outcome:
    details = {"fundamental_groups": {}}
    ok = True
    for t, l in ROOT_TABLE_TYPES + [("B", 2), ("C", 2)]:
        phi = roots.build(t, l)
        got, want = lattices.fundamental_group(phi), expected_fundamental_group(t, l)
        details["fundamental_groups"][phi.label] = got
        ok = ok and got == want
    phi = roots.build("D6")
    f = finite_field(7)
    m = f(-1)

    def holds(L, idx):
        x = lattices.torus_identity(L, f)
        for i in idx:
            x = x * lattices.h_chi(L, phi.simple[i - 1], m)
        return x.is_identity()

    inter = [L for L in lattices.standard_lattices(phi) if L.tag.startswith("intermediate")]
    rel = {}
    for name, idx in (("h5h6", (5, 6)), ("h1h3h5", (1, 3, 5))):
        rel[name] = [L.tag for L in inter if holds(L, idx)]
        ok = ok and len(rel[name]) == 1
    ok = ok and rel["h5h6"] != rel["h1h3h5"]
    details["D6_relations"] = rel
    ad = lattices.lattice(phi, "adjoint")
    T = lattices.torus_involutions(ad, f, [(phi.simple[i], m) for i in range(4)])
    details["D6_adjoint_involution_subgroup"] = T.order_le_two
    ok = ok and T.order == T.order_le_two == 16
    return Outcome(11, "weight lattices and torus relations", ok, details)


def field_reconstruction() -> Outcome:
    details = {}
    ok = True
    for q in (7, 9, 11, 13):
        v = interp.verdict(q)
        details[f"q={q}"] = v
        ok = ok and (not v["boundary_case"] and v["field_order"] == q and v["isomorphic"]
                     and v["disambiguation_exactly_one"])
    fi = interp.frame_independence(fg.enumerate("PSL", 2, 7))
    details["frame_independence_q7"] = fi
    ok = ok and fi["all_isomorphic"]
    for q in (3, 5):
        details[f"boundary q={q}"] = interp.verdict(q)
    return Outcome(12, "field reconstruction inside PSL2", ok, details)


def square_condition() -> Outcome:
    rep = reps.representation(roots.build("D4"), fld=finite_field(5))
    h = reps.h_subgroup(rep)
    details = {"H_order": h.order, "torus_order": h.torus_order, "index": h.index,
               "all_square": h.all_square, "all_arise": h.all_arise}
    return Outcome(13, "H is the square-condition part of the torus",
                   h.all_square and h.all_arise and h.index == 2, details)


CRITERIA: dict = {
    1: root_tables, 2: fixtures, 3: weyl_orders, 4: g2_representation,
    5: steinberg_relations, 6: bruhat, 7: commutator_widths, 8: involutions,
    9: transfer, 10: centralizer_subsystems, 11: lattice_checks,
    12: field_reconstruction, 13: square_condition,
}


def run(number: int) -> Outcome:
    fn: Callable[[], Outcome] = CRITERIA[number]
    return fn()
