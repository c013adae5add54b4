"""Alternating multilinear maps on a split space g + h.

A map of bidegree (k, l) eats k vectors from g and l vectors from h and lands
in one of the two factors; it is stored sparsely on strictly increasing basis
index tuples.  The lift embeds it into the alternating maps on the direct sum
by a shuffle sum, and decomposition reads bidegree components back off values
on canonical basis tuples.

Basis bookkeeping: the direct sum has one global index range, g first
(0 .. dim_g-1) then h (dim_g .. dim_g+dim_h-1).  Sorting a global index tuple
therefore both orders each block and moves g ahead of h, so a single
inversion count yields the Koszul sign of the canonicalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactlin import ONE, ZERO, Vec, is_zero_vec, rat, vadd, vscale, vzero

IndexTuple = tuple[int, ...]

INTO_G = "g"
INTO_H = "h"


class ArityMismatch(ValueError):
    pass


class NotAlternating(ValueError):
    pass


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple[tuple[IndexTuple, int], ...]:
    """All (p, q)-shuffles of 0..p+q-1 as (positions, sign) pairs.

    ``positions`` lists the positions feeding the first block (ascending) then
    the second block (ascending); enumeration is lexicographic in the first
    block.  The sign is the permutation sign (inversion parity).
    """
    if p < 0 or q < 0:
        raise ValueError("negative block size")
    out = []
    universe = range(p + q)
    for first in itertools.combinations(universe, p):
        in_first = set(first)
        second = tuple(i for i in universe if i not in in_first)
        inversions = sum(1 for a in first for b in second if b < a)
        out.append((first + second, -1 if inversions % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def shuffles3(p: int, q: int, r: int) -> tuple[tuple[IndexTuple, int], ...]:
    """All (p, q, r)-shuffles of 0..p+q+r-1, each block ascending."""
    out = []
    universe = range(p + q + r)
    for first in itertools.combinations(universe, p):
        rest = tuple(i for i in universe if i not in set(first))
        for second in itertools.combinations(rest, q):
            third = tuple(i for i in rest if i not in set(second))
            seq = first + second + third
            inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
            out.append((seq, -1 if inversions % 2 else 1))
    return tuple(out)


def sort_sign(seq: Sequence[int]) -> tuple[int, IndexTuple]:
    """(sign, sorted tuple) of the permutation sorting ``seq``; sign 0 on repeats."""
    items = list(seq)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            return 0, tuple(items)
    return sign, tuple(items)


def _det(rows: list[Vec | list[Fraction]]) -> Fraction:
    # Small dense determinant by cofactor expansion; n stays <= arity <= ~6.
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ZERO
    sign = 1
    for c in range(n):
        head = rows[0][c]
        if head != 0:
            minor = [[row[j] for j in range(n) if j != c] for row in rows[1:]]
            acc += sign * head * _det(minor)
        sign = -sign
    return acc


@dataclass(frozen=True)
class SplitSpace:
    """A vector space split as g + h with fixed ordered bases."""

    dim_g: int
    dim_h: int
    g_names: tuple[str, ...] = ()
    h_names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim_g < 1 or self.dim_h < 1:
            raise ValueError("both factors need dimension >= 1")
        if not self.g_names:
            object.__setattr__(self, "g_names", tuple(f"g{i+1}" for i in range(self.dim_g)))
        if not self.h_names:
            object.__setattr__(self, "h_names", tuple(f"h{i+1}" for i in range(self.dim_h)))
        if len(self.g_names) != self.dim_g or len(self.h_names) != self.dim_h:
            raise ValueError("name lists must match the dimensions")

    @property
    def total_dim(self) -> int:
        return self.dim_g + self.dim_h

    def is_g(self, b: int) -> bool:
        return b < self.dim_g

    def h_global(self, local: int) -> int:
        return self.dim_g + local

    def basis_vector(self, b: int) -> Vec:
        return tuple(ONE if i == b else ZERO for i in range(self.total_dim))

    def g_part(self, v: Vec) -> Vec:
        return v[: self.dim_g]

    def h_part(self, v: Vec) -> Vec:
        return v[self.dim_g:]

    def embed_g(self, v: Vec) -> Vec:
        return v + vzero(self.dim_h)

    def embed_h(self, v: Vec) -> Vec:
        return vzero(self.dim_g) + v

    def pair(self, x: Vec, u: Vec) -> Vec:
        return x + u

    def target_dim(self, target: str) -> int:
        return self.dim_g if target == INTO_G else self.dim_h


def _validate_tuple(t: IndexTuple, dim: int, what: str) -> None:
    if any(not (0 <= i < dim) for i in t):
        raise ValueError(f"{what} index out of range in {t}")
    if any(a >= b for a, b in zip(t, t[1:])):
        raise NotAlternating(f"{what} tuple not strictly increasing: {t}")


@dataclass(frozen=True)
class MixedMap:
    """Bidegree (k, l) alternating map with values in one factor.

    ``coeffs`` maps (g tuple, h tuple) of strictly increasing local indices to
    the value vector over the target basis; missing entries are zero.
    """

    space: SplitSpace
    k: int
    l: int
    target: str
    coeffs: Mapping[tuple[IndexTuple, IndexTuple], Vec] = field(default_factory=dict)

    def __post_init__(self):
        if self.target not in (INTO_G, INTO_H):
            raise ValueError("target must be 'g' or 'h'")
        if self.k < 0 or self.l < 0 or self.k + self.l < 1:
            raise ValueError("bidegree needs k, l >= 0 and k + l >= 1")
        tdim = self.space.target_dim(self.target)
        clean: dict[tuple[IndexTuple, IndexTuple], Vec] = {}
        for (gt, ht), value in self.coeffs.items():
            gt, ht = tuple(gt), tuple(ht)
            if len(gt) != self.k or len(ht) != self.l:
                raise ValueError(f"tuple lengths {gt}, {ht} do not match bidegree ({self.k}, {self.l})")
            _validate_tuple(gt, self.space.dim_g, "g")
            _validate_tuple(ht, self.space.dim_h, "h")
            value = tuple(rat(c) for c in value)
            if len(value) != tdim:
                raise ValueError("value length does not match target dimension")
            if not is_zero_vec(value):
                clean[(gt, ht)] = value
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, space: SplitSpace, k: int, l: int, target: str) -> "MixedMap":
        return cls(space, k, l, target, {})

    @property
    def arity(self) -> int:
        return self.k + self.l

    def is_zero(self) -> bool:
        return not self.coeffs

    def value(self, gt: IndexTuple, ht: IndexTuple) -> Vec:
        return self.coeffs.get((tuple(gt), tuple(ht)), vzero(self.space.target_dim(self.target)))

    def value_signed(self, gt: Sequence[int], ht: Sequence[int]) -> Vec:
        """Value on possibly unsorted tuples, with the alternating sign."""
        sg, gs = sort_sign(gt)
        if sg == 0:
            return vzero(self.space.target_dim(self.target))
        sh, hs = sort_sign(ht)
        if sh == 0:
            return vzero(self.space.target_dim(self.target))
        v = self.value(gs, hs)
        return v if sg * sh == 1 else vscale(v, Fraction(-1))

    def eval_vectors(self, gvecs: Sequence[Vec], hvecs: Sequence[Vec]) -> Vec:
        """Multilinear alternating evaluation on coordinate vectors."""
        if len(gvecs) != self.k or len(hvecs) != self.l:
            raise ArityMismatch(f"expected {self.k} g-vectors and {self.l} h-vectors")
        acc = vzero(self.space.target_dim(self.target))
        for (gt, ht), value in self.coeffs.items():
            dg = _det([[gv[i] for i in gt] for gv in gvecs])
            if dg == 0:
                continue
            dh = _det([[hv[j] for j in ht] for hv in hvecs])
            if dh == 0:
                continue
            acc = vadd(acc, vscale(value, dg * dh))
        return acc

    def add(self, other: "MixedMap") -> "MixedMap":
        self._check_compatible(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return MixedMap(self.space, self.k, self.l, self.target,
                        {key: vadd(self.value(*key), other.value(*key)) for key in keys})

    def sub(self, other: "MixedMap") -> "MixedMap":
        return self.add(other.scale(Fraction(-1)))

    def scale(self, c: Fraction | int | str) -> "MixedMap":
        c = rat(c)
        return MixedMap(self.space, self.k, self.l, self.target,
                        {key: vscale(v, c) for key, v in self.coeffs.items()})

    def _check_compatible(self, other: "MixedMap") -> None:
        if (self.space, self.k, self.l, self.target) != (other.space, other.k, other.l, other.target):
            raise ValueError("mixed maps of different shape")

    def entries(self):
        """Deterministic iteration order for reports and serialization."""
        return sorted(self.coeffs.items())

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, MixedMap)
                and (self.space, self.k, self.l, self.target) == (other.space, other.k, other.l, other.target)
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.space, self.k, self.l, self.target, tuple(sorted(self.coeffs.items()))))


@dataclass(frozen=True)
class GradedMap:
    """Alternating multilinear map on the direct sum, stored on canonical
    (strictly increasing global index) tuples."""

    space: SplitSpace
    arity: int
    table: Mapping[IndexTuple, Vec] = field(default_factory=dict)

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be >= 1")
        clean: dict[IndexTuple, Vec] = {}
        for t, v in self.table.items():
            t = tuple(t)
            if len(t) != self.arity:
                raise ValueError(f"tuple {t} does not match arity {self.arity}")
            if any(a >= b for a, b in zip(t, t[1:])):
                raise NotAlternating(f"non-canonical tuple {t}")
            v = tuple(rat(c) for c in v)
            if len(v) != self.space.total_dim:
                raise ValueError("value length does not match total dimension")
            if not is_zero_vec(v):
                clean[t] = v
        object.__setattr__(self, "table", clean)

    @classmethod
    def zero(cls, space: SplitSpace, arity: int) -> "GradedMap":
        return cls(space, arity, {})

    @classmethod
    def lift(cls, space: SplitSpace, parts: Iterable[MixedMap]) -> "GradedMap":
        """Sum of lifts of bidegree components, all of one arity."""
        parts = list(parts)
        if not parts:
            raise ValueError("need at least one component to lift")
        arity = parts[0].arity
        table: dict[IndexTuple, list[Fraction]] = {}
        for m in parts:
            if m.space != space:
                raise ValueError("component on a different split space")
            if m.arity != arity:
                raise ArityMismatch("components of unequal arity")
            offset = 0 if m.target == INTO_G else space.dim_g
            for (gt, ht), value in m.coeffs.items():
                key = gt + tuple(space.h_global(j) for j in ht)
                slot = table.setdefault(key, [ZERO] * space.total_dim)
                for i, c in enumerate(value):
                    slot[offset + i] += c
        return cls(space, arity, {t: tuple(v) for t, v in table.items()})

    @property
    def degree(self) -> int:
        return self.arity - 1

    def is_zero(self) -> bool:
        return not self.table

    def value(self, t: IndexTuple) -> Vec:
        return self.table.get(tuple(t), vzero(self.space.total_dim))

    def eval_basis(self, args: Sequence[int]) -> Vec:
        """Evaluate on global basis indices in any order (alternating)."""
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments")
        sign, canon = sort_sign(args)
        if sign == 0:
            return vzero(self.space.total_dim)
        v = self.table.get(canon)
        if v is None:
            return vzero(self.space.total_dim)
        return v if sign == 1 else vscale(v, Fraction(-1))

    def eval_first_vector(self, head: Vec, rest: Sequence[int]) -> Vec:
        """Evaluate with a coordinate vector in slot 1 and basis indices after."""
        acc = vzero(self.space.total_dim)
        for b, c in enumerate(head):
            if c != 0:
                acc = vadd(acc, vscale(self.eval_basis((b, *rest)), c))
        return acc

    def eval_vectors(self, vecs: Sequence[Vec]) -> Vec:
        """Full multilinear alternating evaluation on coordinate vectors."""
        if len(vecs) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments")
        acc = vzero(self.space.total_dim)
        for t, value in self.table.items():
            d = _det([[v[i] for i in t] for v in vecs])
            if d != 0:
                acc = vadd(acc, vscale(value, d))
        return acc

    def components(self) -> list[MixedMap]:
        """Bidegree decomposition; inverse of ``lift`` on canonical storage."""
        buckets: dict[tuple[int, int, str], dict[tuple[IndexTuple, IndexTuple], Vec]] = {}
        dim_g = self.space.dim_g
        for t, value in self.table.items():
            gt = tuple(i for i in t if i < dim_g)
            ht = tuple(i - dim_g for i in t if i >= dim_g)
            bidegree = (len(gt), len(ht))
            gpart = self.space.g_part(value)
            if not is_zero_vec(gpart):
                buckets.setdefault((*bidegree, INTO_G), {})[(gt, ht)] = gpart
            hpart = self.space.h_part(value)
            if not is_zero_vec(hpart):
                buckets.setdefault((*bidegree, INTO_H), {})[(gt, ht)] = hpart
        return [MixedMap(self.space, k, l, target, coeffs)
                for (k, l, target), coeffs in sorted(buckets.items())]

    def component(self, k: int, l: int, target: str) -> MixedMap:
        """One bidegree component (zero map if absent)."""
        for m in self.components():
            if (m.k, m.l, m.target) == (k, l, target):
                return m
        return MixedMap.zero(self.space, k, l, target)

    def add(self, other: "GradedMap") -> "GradedMap":
        if self.space != other.space or self.arity != other.arity:
            raise ValueError("graded maps of different shape")
        keys = set(self.table) | set(other.table)
        return GradedMap(self.space, self.arity,
                         {t: vadd(self.value(t), other.value(t)) for t in keys})

    def sub(self, other: "GradedMap") -> "GradedMap":
        return self.add(other.scale(Fraction(-1)))

    def scale(self, c: Fraction | int | str) -> "GradedMap":
        c = rat(c)
        return GradedMap(self.space, self.arity, {t: vscale(v, c) for t, v in self.table.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GradedMap)
                and (self.space, self.arity) == (other.space, other.arity)
                and self.table == other.table)

    def __hash__(self):
        return hash((self.space, self.arity, tuple(sorted(self.table.items()))))


def canonical_tuples(space: SplitSpace, arity: int):
    return itertools.combinations(range(space.total_dim), arity)


def lift_eval(m: GradedMap, args: Sequence[Vec]) -> Vec:
    """Evaluate the lift of a graded map on vectors of the direct sum."""
    return m.eval_vectors(args)


def decompose(f: GradedMap) -> list[MixedMap]:
    """Bidegree components whose lifts sum back to ``f``."""
    return f.components()


def graded_map_from_values(space: SplitSpace, arity: int,
                           values: Mapping[Sequence[int], Vec]) -> GradedMap:
    """Build a graded map from values on arbitrary basis tuples.

    Checks that the data is alternating: repeated-index tuples must map to
    zero and permuted tuples must agree up to sign.
    """
    table: dict[IndexTuple, Vec] = {}
    for raw, value in values.items():
        value = tuple(rat(c) for c in value)
        sign, canon = sort_sign(tuple(raw))
        if sign == 0:
            if not is_zero_vec(value):
                raise NotAlternating(f"repeated indices {tuple(raw)} carry a nonzero value")
            continue
        oriented = value if sign == 1 else vscale(value, Fraction(-1))
        if canon in table:
            if table[canon] != oriented:
                raise NotAlternating(f"values on permutations of {canon} disagree")
        else:
            table[canon] = oriented
    return GradedMap(space, arity, table)


def identity_map(space: SplitSpace) -> GradedMap:
    return GradedMap(space, 1, {(b,): space.basis_vector(b) for b in range(space.total_dim)})
