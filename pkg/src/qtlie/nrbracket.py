"""The graded Lie algebra of alternating multilinear maps on g + h.

Composition follows the shuffle formula: for f of arity m and g of arity n,

    (f . g)(x_1, ..., x_{m+n-1})
        = sum over (n, m-1)-shuffles s of sign(s) *
          f(g(x_{s(1)}, ..., x_{s(n)}), x_{s(n+1)}, ..., x_{s(m+n-1)})

and the bracket is [f, g] = f . g - (-1)^{(m-1)(n-1)} g . f, under which a
Lie bracket on a space is exactly a degree-1 solution of [p, p] = 0.
"""

from __future__ import annotations

from fractions import Fraction

from .exactlin import is_zero_vec, vadd, vscale, vzero
from .multilinear import (
    INTO_G,
    INTO_H,
    GradedMap,
    MixedMap,
    canonical_tuples,
    shuffles,
)


def nr_compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """Shuffle composition f . g, arity m + n - 1."""
    if f.space != g.space:
        raise ValueError("maps on different split spaces")
    space = f.space
    m, n = f.arity, g.arity
    out_arity = m + n - 1
    if out_arity > space.total_dim:
        return GradedMap.zero(space, out_arity)
    table = {}
    shs = shuffles(n, m - 1)
    total = space.total_dim
    for t in canonical_tuples(space, out_arity):
        acc = vzero(total)
        for positions, sign in shs:
            inner = g.eval_basis(tuple(t[p] for p in positions[:n]))
            if is_zero_vec(inner):
                continue
            rest = tuple(t[p] for p in positions[n:])
            term = f.eval_first_vector(inner, rest)
            acc = vadd(acc, term if sign == 1 else vscale(term, Fraction(-1)))
        if not is_zero_vec(acc):
            table[t] = acc
    return GradedMap(space, out_arity, table)


def nr_bracket(f: GradedMap, g: GradedMap) -> GradedMap:
    """[f, g] = f . g - (-1)^{(m-1)(n-1)} g . f."""
    sign = (-1) ** ((f.arity - 1) * (g.arity - 1))
    fg = nr_compose(f, g)
    gf = nr_compose(g, f)
    return fg.sub(gf) if sign == 1 else fg.add(gf)


def is_lie_structure(bracket: MixedMap) -> tuple[bool, GradedMap]:
    """Whether an arity-2 map into its own factor satisfies Jacobi.

    Accepts bidegree (2, 0) into g or (0, 2) into h.  The returned residual is
    [b, b], which is twice the Jacobiator; it vanishes exactly when the map is
    a Lie bracket.
    """
    if not ((bracket.k, bracket.l, bracket.target) in ((2, 0, INTO_G), (0, 2, INTO_H))):
        raise ValueError("expected a (2,0)->g or (0,2)->h map")
    lifted = GradedMap.lift(bracket.space, [bracket])
    residual = nr_bracket(lifted, lifted)
    return residual.is_zero(), residual
