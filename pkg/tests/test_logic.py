import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from chevalley import groups as fg
from chevalley.errors import BudgetExceeded, ParseError, UnknownName
from chevalley.fields import finite_field
from chevalley.logic import builtins as B
from chevalley.logic.evaluate import definable_set, eval_group, eval_ring, GroupStructure
from chevalley.logic.pipelines import cell_set, ddiag2_set, define_n, eval_pipeline, phi_a1
from chevalley.logic.syntax import (App, Conn, Const, Eq, Quant, Var, E, eq, exists, forall,
                                    free_vars, mul, parse_formula, parse_term, strip_spans,
                                    substitute, to_text, term_text, is_closed)
from chevalley.logic.translate import RingTranslation, det_term, sl, translate


# ---------------------------------------------------------------- parser

def test_parse_examples():
    f = parse_formula("(forall x (= (* x (inv x)) e))")
    assert f == Quant("forall", "x", Eq(App("*", (Var("x"), App("inv", (Var("x"),)))), Const("e")))
    g = parse_formula("(exists x (not (= x e)))")
    assert isinstance(g.body, Conn) and g.body.op == "not"


def test_parse_error_offset():
    with pytest.raises(ParseError) as exc:
        parse_formula("(forall x (= x e)")
    assert exc.value.offset == 17 and exc.value.line == 1


@pytest.mark.parametrize("text", ["(= x", "(foo x)", "(forall (= x e))", ")", "(= x e) extra",
                                  "(and)"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_formula(text)


def test_comments_and_whitespace():
    f = parse_formula("; comment\n(forall x\n  (= x x)) ; trailing\n")
    assert f == parse_formula("(forall x (= x x))")


def test_capture_avoiding_substitution():
    f = parse_formula("(exists y (= x y))")
    g = substitute(f, {"x": Var("y")})
    assert free_vars(g) == {"y"}
    assert g.var != "y"


# ---------------------------------------------------------- evaluation

PSL25 = fg.enumerate("PSL", 2, 5)
PSL27 = fg.enumerate("PSL", 2, 7)
SL23 = fg.enumerate("SL", 2, 3)


def test_eval_examples():
    assert eval_group(parse_formula("(forall x (= (* x (inv x)) e))"), PSL25)
    assert eval_group(parse_formula("(exists x (and (not (= x e)) (= (* x x) e)))"), PSL27)
    assert eval_group(B.commut_n(1), PSL27, assignment={"x": PSL27.identity})


def test_involutions_as_definable_set():
    f = parse_formula("(and (not (= x e)) (= (* x x) e))")
    assert len(definable_set(f, GroupStructure(PSL27), "x")) == 21


def test_budget_exceeded():
    f = parse_formula("(forall x (forall y (forall z (= (* x (* y z)) (* (* x y) z)))))")
    with pytest.raises(BudgetExceeded):
        eval_group(f, PSL27, budget=1000, optimize=False)


def test_free_variables_rejected():
    with pytest.raises(UnknownName):
        eval_group(parse_formula("(= x e)"), PSL27)


def test_sort_mismatch():
    with pytest.raises(UnknownName):
        eval_group(parse_formula("(forall x (= (+ x 0) x))"), PSL27)


def test_ring_evaluation():
    assert eval_ring(parse_formula("(exists x (= (* x x) (neg 1)))"), finite_field(5))
    assert not eval_ring(parse_formula("(exists x (= (* x x) (neg 1)))"), finite_field(7))


# -------------------------------------------------------------- builtins

def test_cell_shape():
    f = B.cell("M")
    assert free_vars(f) == {"M"}
    assert "(not (= (* (* X X) M) (* M (* X X))))" in to_text(f)


def test_commut_2_shape():
    f = B.commut_n(2)
    assert free_vars(f) == {"x"}
    assert to_text(f).count("(inv ") == 4


def test_define_1_on_abelian_group():
    table = [[0, 1], [1, 0]]
    assert eval_group(B.define_n(1), GroupStructure(table=table, inverses=[0, 1], identity=0))


def test_unknown_builtin():
    with pytest.raises(UnknownName):
        B.builtin("nope")
    with pytest.raises(UnknownName):
        eval_pipeline("nope", PSL27)


def test_pipelines_examples():
    assert phi_a1(PSL27)
    assert not phi_a1(fg.enumerate("PSL", 3, 3))
    cells = cell_set(PSL27)
    assert len(cells) == 48
    orders = PSL27.element_orders()
    assert all(orders[c] == 7 for c in cells)


@pytest.mark.parametrize("G", [SL23, PSL25, PSL27], ids=["SL2_3", "PSL2_5", "PSL2_7"])
def test_pipelines_agree_with_raw_evaluation(G):
    S = GroupStructure(G)
    assert eval_group(B.phi_a1(), G) == phi_a1(G)
    assert eval_group(B.define_n(1), G) == define_n(G, 1)
    assert definable_set(B.cell(), S, "M") == cell_set(G)


@pytest.mark.parametrize("literal", [True, False])
def test_ddiag2_pipeline_agrees(literal):
    for G in (SL23, PSL25):
        raw = definable_set(B.ddiag2("M", literal), GroupStructure(G), "M")
        assert raw == ddiag2_set(G, literal)


def test_relativized_phi():
    member = parse_formula("(= z z)")
    f = B.phi_a1_relativized(member)
    assert eval_group(f, SL23) == eval_group(B.phi_a1(), SL23)


# ------------------------------------------------------------ translation

def test_translate_forall_identity():
    t = translate(parse_formula("(forall g (= g g))"), sl(2))
    text = to_text(t)
    assert text.startswith("(forall g_11 (forall g_12 (forall g_21 (forall g_22 (implies")
    assert "(= g_11 g_11)" in text and "(= g_22 g_22)" in text


def test_translate_product_entries():
    t = translate(parse_formula("(= g (* h f))"), sl(2))
    assert "(= g_11 (+ (* h_11 f_11) (* h_12 f_21)))" in to_text(t)


def test_translate_sl1():
    t = translate(parse_formula("(exists g (not (= g e)))"), sl(1))
    assert not eval_ring(t, finite_field(5))


@pytest.mark.parametrize("text,value", [
    ("(exists g (and (= (* g g) e) (not (= g e))))", True),
    ("(forall g (= (* g g) e))", False),
])
def test_translate_examples_f5(text, value):
    f = parse_formula(text)
    assert eval_group(f, fg.enumerate("SL", 2, 5)) == value
    assert eval_ring(translate(f, sl(2)), finite_field(5)) == value


def test_witness_inverse_strategy():
    T = RingTranslation(2, sl(2).defining_polys, "witness")
    f = parse_formula("(forall x (= (* x (inv x)) e))")
    assert eval_ring(translate(f, T), finite_field(3))


def test_tautology_translation():
    assert eval_ring(translate(parse_formula("(forall g (= g g))"), sl(2)), finite_field(3))


def test_det_term_2x2():
    m = [[Var("a"), Var("b")], [Var("c"), Var("d")]]
    assert term_text(det_term(m)) == "(+ (* a d) (neg (* b c)))"


# ------------------------------------------------------------- properties

VARS = ["x", "y", "z"]


def terms(depth):
    leaf = st.one_of(st.sampled_from([Var(v) for v in VARS]), st.just(Const("e")))
    if depth == 0:
        return leaf
    sub = terms(depth - 1)
    return st.one_of(leaf, st.builds(lambda a, b: App("*", (a, b)), sub, sub),
                     st.builds(lambda a: App("inv", (a,)), sub))


def formulas(depth):
    atom = st.builds(Eq, terms(2), terms(2))
    if depth == 0:
        return atom
    sub = formulas(depth - 1)
    return st.one_of(
        atom,
        st.builds(lambda a: Conn("not", (a,)), sub),
        st.builds(lambda a, b: Conn("and", (a, b)), sub, sub),
        st.builds(lambda a, b: Conn("or", (a, b)), sub, sub),
        st.builds(lambda a, b: Conn("implies", (a, b)), sub, sub),
        st.builds(lambda k, v, a: Quant(k, v, a), st.sampled_from(["forall", "exists"]),
                  st.sampled_from(VARS), sub),
    )


def close(f):
    for v in sorted(free_vars(f)):
        f = Quant("exists", v, f)
    return f


@settings(max_examples=200, deadline=None)
@given(formulas(3))
def test_print_parse_round_trip(f):
    assert strip_spans(parse_formula(to_text(f))) == f


@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(formulas(3))
def test_optimizer_agrees_with_naive(f):
    f = close(f)
    assert eval_group(f, SL23) == eval_group(f, SL23, optimize=False)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(formulas(2))
def test_transfer_on_random_sentences(f):
    f = close(f)
    assert eval_group(f, SL23) == eval_ring(translate(f, sl(2)), finite_field(3))


@settings(max_examples=40, deadline=None)
@given(formulas(2), st.integers(10, 2000))
def test_budget_monotone(f, b):
    f = close(f)
    try:
        small = eval_group(f, SL23, budget=b, optimize=False)
    except BudgetExceeded:
        return
    assert eval_group(f, SL23, budget=b * 10, optimize=False) == small
