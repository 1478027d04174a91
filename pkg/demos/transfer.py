"""Evaluate a group sentence in SL_2(F_q) and its ring translation over F_q."""

import sys

from chevalley import groups
from chevalley.fields import finite_field
from chevalley.logic.evaluate import eval_group, eval_ring
from chevalley.logic.syntax import parse_formula, to_text
from chevalley.logic.translate import sl, translate

SENTENCE = "(exists x (and (not (= x e)) (= (* x x) e)))"


def main(text: str = SENTENCE) -> None:
    f = parse_formula(text)
    g = translate(f, sl(2))
    print("group sentence:", text)
    print("ring translation:", to_text(g))
    for q in (3, 5, 7):
        a = eval_group(f, groups.enumerate("SL", 2, q))
        b = eval_ring(g, finite_field(q))
        print(f"q={q}: group {a}, ring {b}, agree {a == b}")


if __name__ == "__main__":
    main(*sys.argv[1:])
