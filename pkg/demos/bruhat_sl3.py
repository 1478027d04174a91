"""Decompose a random element of SL_3(F_5) as u h w u' and check the pieces."""

import random

from chevalley import groups, reps, roots
from chevalley.fields import finite_field


def show(name, M):
    print(f"{name}:")
    for row in M.rows:
        print("   ", " ".join(f"{x:2d}" for x in row))


def main(seed: int = 1) -> None:
    F = finite_field(5)
    rep = reps.representation(roots.build("A2"), fld=F)
    G = groups.enumerate("SL", 3, 5)
    g = G.matrix(random.Random(seed).randrange(G.order))
    b = reps.bruhat_sl(g, rep)
    show("g", g)
    for name in ("u", "h", "w", "u2"):
        show(name, getattr(b, name))
    print("permutation:", b.sigma)
    print("u h w u' == g:", b.product() == g)
    print("normal form valid:", reps.bruhat_valid(b))

    # the whole group, checked exhaustively
    r = reps.bruhat_exhaustive(3, 5)
    print(f"all {r['order']} elements: tuples={r['tuple_count']} ok={r['ok']}")


if __name__ == "__main__":
    main()
