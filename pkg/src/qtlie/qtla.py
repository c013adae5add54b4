"""Quasi-twilled Lie algebras: structure data, verification, catalog.

A quasi-twilled structure on g + h is the bracket of a Lie algebra in which h
is a subalgebra, split into five bidegree components

    pi:    (2,0) -> g     bracket of two g's, g part
    rho:   (1,1) -> h     mixed bracket, h part
    mu:    (0,2) -> h     bracket of two h's
    eta:   (1,1) -> g     mixed bracket, g part
    theta: (2,0) -> h     bracket of two g's, h part

Their lifted sum Omega is a Lie structure exactly when seven component
equations hold; ``verify_structure_equations`` computes all seven residuals
and the direct [Omega, Omega] cross-check.

Sign dictionary for the two mixed-map conventions (fixed here, used
everywhere): the action form of rho is rho(x)v = rho(x, v), and the action
form of eta is eta(u)y = -eta(y, u).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exactlin import Matrix, Vec, is_zero_vec, rat, vadd, vscale, vsub, vzero
from .multilinear import INTO_G, INTO_H, GradedMap, MixedMap, SplitSpace
from .nrbracket import is_lie_structure, nr_bracket, nr_compose


class PremiseError(ValueError):
    """A catalog builder's input fails its defining identity."""


class CertificateError(ValueError):
    """A derived object fails the identity its construction promises."""


# ---------------------------------------------------------------------------
# Lie algebras by structure constants, and representations as matrix lists
# ---------------------------------------------------------------------------

@dataclass
class LieAlgebra:
    """Finite-dimensional Lie algebra over Q given by structure constants.

    ``brackets`` holds [e_i, e_j] for i < j only; other pairs follow by
    antisymmetry, diagonal pairs are zero.
    """

    dim: int
    brackets: Mapping[tuple[int, int], Vec] = field(default_factory=dict)
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.names:
            self.names = tuple(f"x{i+1}" for i in range(self.dim))
        if len(self.names) != self.dim:
            raise ValueError("name count must match dimension")
        clean = {}
        for (i, j), v in self.brackets.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bad bracket key ({i}, {j})")
            v = tuple(rat(c) for c in v)
            if len(v) != self.dim:
                raise ValueError("bracket value of wrong length")
            if not is_zero_vec(v):
                clean[(i, j)] = v
        self.brackets = clean

    def bracket_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return vzero(self.dim)
        if i < j:
            return self.brackets.get((i, j), vzero(self.dim))
        return vscale(self.brackets.get((j, i), vzero(self.dim)), Fraction(-1))

    def bracket(self, a: Vec, b: Vec) -> Vec:
        acc = vzero(self.dim)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb == 0 or i == j:
                    continue
                acc = vadd(acc, vscale(self.bracket_basis(i, j), ca * cb))
        return acc

    def jacobi_residual(self, i: int, j: int, k: int) -> Vec:
        ei, ej, ek = (self.basis_vector(t) for t in (i, j, k))
        return vadd(vadd(self.bracket(self.bracket(ei, ej), ek),
                         self.bracket(self.bracket(ej, ek), ei)),
                    self.bracket(self.bracket(ek, ei), ej))

    def is_lie(self) -> bool:
        return all(is_zero_vec(self.jacobi_residual(i, j, k))
                   for i, j, k in itertools.combinations(range(self.dim), 3))

    def basis_vector(self, i: int) -> Vec:
        return tuple(Fraction(1) if t == i else Fraction(0) for t in range(self.dim))

    def as_pi(self, space: SplitSpace) -> MixedMap:
        """This bracket as the (2,0) -> g component on ``space``."""
        if space.dim_g != self.dim:
            raise ValueError("dimension mismatch with the g factor")
        return MixedMap(space, 2, 0, INTO_G,
                        {((i, j), ()): v for (i, j), v in self.brackets.items()})

    def as_mu(self, space: SplitSpace) -> MixedMap:
        """This bracket as the (0,2) -> h component on ``space``."""
        if space.dim_h != self.dim:
            raise ValueError("dimension mismatch with the h factor")
        return MixedMap(space, 0, 2, INTO_H,
                        {((), (i, j)): v for (i, j), v in self.brackets.items()})

    def as_theta(self, space: SplitSpace, scale: Fraction = Fraction(1)) -> MixedMap:
        """This bracket, scaled, as the (2,0) -> h component (needs dim_h == dim)."""
        if space.dim_g != self.dim or space.dim_h != self.dim:
            raise ValueError("theta from a bracket needs dim_g == dim_h == dim")
        return MixedMap(space, 2, 0, INTO_H,
                        {((i, j), ()): vscale(v, rat(scale)) for (i, j), v in self.brackets.items()})

    @classmethod
    def from_mixed_map(cls, m: MixedMap, names: tuple[str, ...] = ()) -> "LieAlgebra":
        if (m.k, m.l, m.target) == (2, 0, INTO_G):
            dim = m.space.dim_g
            table = {gt: v for (gt, _), v in m.coeffs.items()}
        elif (m.k, m.l, m.target) == (0, 2, INTO_H):
            dim = m.space.dim_h
            table = {ht: v for (_, ht), v in m.coeffs.items()}
        else:
            raise ValueError("not an arity-2 map into its own factor")
        return cls(dim, table, names)

    @classmethod
    def sl2(cls) -> "LieAlgebra":
        # basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
        z = Fraction(0)
        return cls(3, {
            (0, 1): (Fraction(-2), z, z),
            (0, 2): (z, Fraction(1), z),
            (1, 2): (z, z, Fraction(-2)),
        }, names=("e", "h", "f"))

    @classmethod
    def aff1(cls) -> "LieAlgebra":
        # basis (x, y): [x,y] = y
        return cls(2, {(0, 1): (Fraction(0), Fraction(1))}, names=("x", "y"))

    @classmethod
    def heisenberg3(cls) -> "LieAlgebra":
        # basis (p, q, z): [p,q] = z
        zero = Fraction(0)
        return cls(3, {(0, 1): (zero, zero, Fraction(1))}, names=("p", "q", "z"))

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls(dim, {})


Rep = Sequence[Matrix]  # one operator per basis element of the acting algebra


def adjoint_rep(lie: LieAlgebra) -> list[Matrix]:
    return [Matrix.from_columns([lie.bracket_basis(i, c) for c in range(lie.dim)], lie.dim)
            for i in range(lie.dim)]


def trivial_rep(lie: LieAlgebra, vdim: int) -> list[Matrix]:
    return [Matrix.zero(vdim, vdim) for _ in range(lie.dim)]


def representation_residuals(lie: LieAlgebra, mats: Rep, vdim: int) -> list[tuple[tuple[int, int], Matrix]]:
    """Deviations of rho([e_i, e_j]) from [rho(e_i), rho(e_j)] on basis pairs."""
    if len(mats) != lie.dim or any(m.rows != vdim or m.cols != vdim for m in mats):
        raise ValueError("representation shape mismatch")
    out = []
    for i, j in itertools.combinations(range(lie.dim), 2):
        lhs = Matrix.zero(vdim, vdim)
        for t, c in enumerate(lie.bracket_basis(i, j)):
            if c != 0:
                lhs = lhs.add(mats[t].scale(c))
        comm = mats[i].mul(mats[j]).add(mats[j].mul(mats[i]).neg())
        diff = lhs.add(comm.neg())
        if not diff.is_zero():
            out.append(((i, j), diff))
    return out


def derivation_residuals(acting: LieAlgebra, target: LieAlgebra, mats: Rep) -> list[tuple[tuple[int, int, int], Vec]]:
    """Deviations of rho(x)[u,v] from [rho(x)u, v] + [u, rho(x)v]."""
    out = []
    for x in range(acting.dim):
        for u, v in itertools.combinations(range(target.dim), 2):
            eu, ev = target.basis_vector(u), target.basis_vector(v)
            lhs = mats[x].apply(target.bracket_basis(u, v))
            rhs = vadd(target.bracket(mats[x].apply(eu), ev),
                       target.bracket(eu, mats[x].apply(ev)))
            diff = vsub(lhs, rhs)
            if not is_zero_vec(diff):
                out.append(((x, u, v), diff))
    return out


def cocycle_residuals(lie: LieAlgebra, mats: Rep, vdim: int,
                      omega: Mapping[tuple[int, int], Vec]) -> list[tuple[tuple[int, int, int], Vec]]:
    """Chevalley-Eilenberg 2-cocycle deviations of omega for (V; rho)."""

    def w(i: int, j: int) -> Vec:
        if i == j:
            return vzero(vdim)
        if i < j:
            return tuple(rat(c) for c in omega.get((i, j), vzero(vdim)))
        return vscale(tuple(rat(c) for c in omega.get((j, i), vzero(vdim))), Fraction(-1))

    def w_vec(a: Vec, j: int) -> Vec:
        acc = vzero(vdim)
        for i, c in enumerate(a):
            if c != 0:
                acc = vadd(acc, vscale(w(i, j), c))
        return acc

    out = []
    for i, j, k in itertools.combinations(range(lie.dim), 3):
        acc = mats[i].apply(w(j, k))
        acc = vsub(acc, mats[j].apply(w(i, k)))
        acc = vadd(acc, mats[k].apply(w(i, j)))
        acc = vsub(acc, w_vec(lie.bracket_basis(i, j), k))
        acc = vadd(acc, w_vec(lie.bracket_basis(i, k), j))
        acc = vsub(acc, w_vec(lie.bracket_basis(j, k), i))
        if not is_zero_vec(acc):
            out.append(((i, j, k), acc))
    return out


# ---------------------------------------------------------------------------
# Quasi-twilled structures
# ---------------------------------------------------------------------------

@dataclass
class QuasiTwilled:
    """The five components of a split bracket on g + h.

    Construction does not verify the structure equations (tests need broken
    inputs); the catalog builders do.
    """

    space: SplitSpace
    pi: MixedMap
    rho: MixedMap
    mu: MixedMap
    eta: MixedMap
    theta: MixedMap

    def __post_init__(self):
        expected = {
            "pi": (2, 0, INTO_G), "rho": (1, 1, INTO_H), "mu": (0, 2, INTO_H),
            "eta": (1, 1, INTO_G), "theta": (2, 0, INTO_H),
        }
        for name, (k, l, target) in expected.items():
            m: MixedMap = getattr(self, name)
            if m.space != self.space:
                raise ValueError(f"{name} lives on a different split space")
            if (m.k, m.l, m.target) != (k, l, target):
                raise ValueError(f"{name} has bidegree {(m.k, m.l, m.target)}, expected {(k, l, target)}")

    @classmethod
    def from_components(cls, space: SplitSpace, pi=None, rho=None, mu=None, eta=None, theta=None) -> "QuasiTwilled":
        return cls(
            space,
            pi if pi is not None else MixedMap.zero(space, 2, 0, INTO_G),
            rho if rho is not None else MixedMap.zero(space, 1, 1, INTO_H),
            mu if mu is not None else MixedMap.zero(space, 0, 2, INTO_H),
            eta if eta is not None else MixedMap.zero(space, 1, 1, INTO_G),
            theta if theta is not None else MixedMap.zero(space, 2, 0, INTO_H),
        )

    def components(self) -> dict[str, MixedMap]:
        return {"pi": self.pi, "rho": self.rho, "mu": self.mu, "eta": self.eta, "theta": self.theta}

    def omega(self) -> GradedMap:
        return GradedMap.lift(self.space, [self.pi, self.rho, self.mu, self.eta, self.theta])

    # action-convention accessors (sign dictionary lives here only)
    def rho_action(self, i: int, u: Vec) -> Vec:
        """rho(e_i) u in h."""
        return self.rho.eval_vectors([self.space.g_part(self.space.basis_vector(i))], [u])

    def eta_action(self, a: int, x: Vec) -> Vec:
        """eta(f_a) x = -eta(x, f_a) in g."""
        unit = tuple(Fraction(1) if t == a else Fraction(0) for t in range(self.space.dim_h))
        return vscale(self.eta.eval_vectors([x], [unit]), Fraction(-1))


def assemble_omega(qt: QuasiTwilled) -> GradedMap:
    """The lifted degree-1 element whose square encodes all seven equations."""
    return qt.omega()


STRUCTURE_EQUATION_NAMES = (
    "[mu,mu]",
    "[pi,pi] + 2 eta.theta",
    "2[mu,eta] + [eta,eta]",
    "[rho,mu] + rho.eta",
    "[rho,theta] + [pi,theta]",
    "[pi,eta] + eta.rho",
    "[mu,theta] + [pi,rho] + theta.eta + (1/2)[rho,rho]",
)


@dataclass
class StructureReport:
    residuals: tuple[tuple[str, GradedMap], ...]
    omega_square: GradedMap

    @property
    def all_zero(self) -> bool:
        return all(r.is_zero() for _, r in self.residuals)

    def failing(self) -> list[str]:
        return [name for name, r in self.residuals if not r.is_zero()]

    def consistent_with_omega_square(self) -> bool:
        """[Omega, Omega] must equal e1 + e2 + e3 + 2(e4 + e5 + e6 + e7)."""
        maps = [r for _, r in self.residuals]
        acc = maps[0].add(maps[1]).add(maps[2])
        for r in maps[3:]:
            acc = acc.add(r.scale(2))
        return acc == self.omega_square


def verify_structure_equations(qt: QuasiTwilled) -> StructureReport:
    space = qt.space
    lift_one = lambda m: GradedMap.lift(space, [m])
    pi, rho, mu, eta, theta = map(lift_one, (qt.pi, qt.rho, qt.mu, qt.eta, qt.theta))
    half = Fraction(1, 2)
    residuals = (
        nr_bracket(mu, mu),
        nr_bracket(pi, pi).add(nr_compose(eta, theta).scale(2)),
        nr_bracket(mu, eta).scale(2).add(nr_bracket(eta, eta)),
        nr_bracket(rho, mu).add(nr_compose(rho, eta)),
        nr_bracket(rho, theta).add(nr_bracket(pi, theta)),
        nr_bracket(pi, eta).add(nr_compose(eta, rho)),
        nr_bracket(mu, theta).add(nr_bracket(pi, rho)).add(nr_compose(theta, eta)).add(nr_bracket(rho, rho).scale(half)),
    )
    omega = qt.omega()
    return StructureReport(tuple(zip(STRUCTURE_EQUATION_NAMES, residuals)), nr_bracket(omega, omega))


def is_quasi_twilled(qt: QuasiTwilled) -> bool:
    return verify_structure_equations(qt).all_zero


def induced_representation_sigma(qt: QuasiTwilled) -> list[Matrix]:
    """The action of (h, mu) on g given by sigma(v)x = -eta(x, v).

    Verifies the representation law sigma(mu(u,v)) = [sigma(u), sigma(v)] on
    all basis pairs and raises ``CertificateError`` if it fails.
    """
    space = qt.space
    mats = [Matrix.from_columns(
        [qt.eta_action(a, tuple(Fraction(1) if t == i else Fraction(0) for t in range(space.dim_g)))
         for i in range(space.dim_g)], space.dim_g)
        for a in range(space.dim_h)]
    mu_lie = LieAlgebra.from_mixed_map(qt.mu)
    bad = representation_residuals(mu_lie, mats, space.dim_g)
    if bad:
        pair, _ = bad[0]
        raise CertificateError(f"sigma fails the representation law on basis pair {pair}")
    return mats


# ---------------------------------------------------------------------------
# Matched pairs
# ---------------------------------------------------------------------------

@dataclass
class MatchedPair:
    """Two Lie structures with mutual actions, stored in the two-slot
    convention of the split bracket (see the sign dictionary above)."""

    space: SplitSpace
    lie_g: MixedMap    # (2,0) -> g
    lie_h: MixedMap    # (0,2) -> h
    rho: MixedMap      # (1,1) -> h
    eta: MixedMap      # (1,1) -> g

    @classmethod
    def from_actions(cls, g: LieAlgebra, h: LieAlgebra,
                     rho_mats: Rep, eta_mats: Rep) -> "MatchedPair":
        """Build from action-convention data: rho_mats[i] acts on h,
        eta_mats[a] acts on g; eta is stored flipped per the dictionary."""
        space = SplitSpace(g.dim, h.dim, tuple(g.names), tuple(h.names))
        rho = MixedMap(space, 1, 1, INTO_H, {
            ((i,), (a,)): rho_mats[i].column(a)
            for i in range(g.dim) for a in range(h.dim)
        })
        eta = MixedMap(space, 1, 1, INTO_G, {
            ((i,), (a,)): vscale(eta_mats[a].column(i), Fraction(-1))
            for i in range(g.dim) for a in range(h.dim)
        })
        return cls(space, g.as_pi(space), h.as_mu(space), rho, eta)

    def rho_action_matrices(self) -> list[Matrix]:
        space = self.space
        return [Matrix.from_columns(
            [self.rho.value((i,), (a,)) for a in range(space.dim_h)], space.dim_h)
            for i in range(space.dim_g)]

    def eta_action_matrices(self) -> list[Matrix]:
        space = self.space
        return [Matrix.from_columns(
            [vscale(self.eta.value((i,), (a,)), Fraction(-1)) for i in range(space.dim_g)], space.dim_g)
            for a in range(space.dim_h)]


@dataclass
class MatchedPairReport:
    lie_g_ok: bool
    lie_h_ok: bool
    rho_rep_ok: bool
    eta_rep_ok: bool
    compat_h: list          # rho(x)[u,v] identity failures
    compat_g: list          # eta(u)[x,y] identity failures

    @property
    def ok(self) -> bool:
        return (self.lie_g_ok and self.lie_h_ok and self.rho_rep_ok
                and self.eta_rep_ok and not self.compat_h and not self.compat_g)


def verify_matched_pair(mp: MatchedPair) -> MatchedPairReport:
    space = mp.space
    g = LieAlgebra.from_mixed_map(mp.lie_g)
    h = LieAlgebra.from_mixed_map(mp.lie_h)
    rho_mats = mp.rho_action_matrices()
    eta_mats = mp.eta_action_matrices()

    lie_g_ok = g.is_lie()
    lie_h_ok = h.is_lie()
    rho_rep_ok = not representation_residuals(g, rho_mats, space.dim_h) if lie_g_ok else False
    eta_rep_ok = not representation_residuals(h, eta_mats, space.dim_g) if lie_h_ok else False

    compat_h = []
    # rho(x)[u,v] = [rho(x)u, v] + [u, rho(x)v] + rho(eta(v)x)u - rho(eta(u)x)v
    def rho_vec(xv: Vec, u: Vec) -> Vec:
        acc = vzero(space.dim_h)
        for i, c in enumerate(xv):
            if c != 0:
                acc = vadd(acc, vscale(rho_mats[i].apply(u), c))
        return acc

    def eta_vec(uv: Vec, x: Vec) -> Vec:
        acc = vzero(space.dim_g)
        for a, c in enumerate(uv):
            if c != 0:
                acc = vadd(acc, vscale(eta_mats[a].apply(x), c))
        return acc

    for i in range(space.dim_g):
        x = g.basis_vector(i)
        for a, b in itertools.combinations(range(space.dim_h), 2):
            u, v = h.basis_vector(a), h.basis_vector(b)
            lhs = rho_mats[i].apply(h.bracket(u, v))
            rhs = vadd(h.bracket(rho_mats[i].apply(u), v), h.bracket(u, rho_mats[i].apply(v)))
            rhs = vadd(rhs, rho_vec(eta_mats[b].apply(x), u))
            rhs = vsub(rhs, rho_vec(eta_mats[a].apply(x), v))
            diff = vsub(lhs, rhs)
            if not is_zero_vec(diff):
                compat_h.append(((i, a, b), diff))

    compat_g = []
    # eta(u)[x,y] = [eta(u)x, y] + [x, eta(u)y] + eta(rho(y)u)x - eta(rho(x)u)y
    for a in range(space.dim_h):
        u = h.basis_vector(a)
        for i, j in itertools.combinations(range(space.dim_g), 2):
            x, y = g.basis_vector(i), g.basis_vector(j)
            lhs = eta_mats[a].apply(g.bracket(x, y))
            rhs = vadd(g.bracket(eta_mats[a].apply(x), y), g.bracket(x, eta_mats[a].apply(y)))
            rhs = vadd(rhs, eta_vec(rho_mats[j].apply(u), x))
            rhs = vsub(rhs, eta_vec(rho_mats[i].apply(u), y))
            diff = vsub(lhs, rhs)
            if not is_zero_vec(diff):
                compat_g.append(((a, i, j), diff))

    return MatchedPairReport(lie_g_ok, lie_h_ok, rho_rep_ok, eta_rep_ok, compat_h, compat_g)


def matched_pair_to_qt(mp: MatchedPair) -> QuasiTwilled:
    return QuasiTwilled.from_components(mp.space, pi=mp.lie_g, rho=mp.rho, mu=mp.lie_h, eta=mp.eta)


def qt_to_matched_pair(qt: QuasiTwilled) -> MatchedPair:
    if not qt.theta.is_zero():
        raise ValueError("theta must vanish for a matched pair")
    return MatchedPair(qt.space, qt.pi, qt.mu, qt.rho, qt.eta)


# ---------------------------------------------------------------------------
# Catalog of standard constructions
# ---------------------------------------------------------------------------

def _post_verify(qt: QuasiTwilled, kind: str) -> QuasiTwilled:
    report = verify_structure_equations(qt)
    if not report.all_zero:
        raise CertificateError(f"catalog '{kind}' output fails: {', '.join(report.failing())}")
    return qt


def catalog_modified(g: LieAlgebra, lam: Fraction | int | str) -> QuasiTwilled:
    """Doubled algebra with bracket ([x,v]-[y,u], lam[x,y]+[u,v])."""
    if not g.is_lie():
        raise PremiseError("g fails the Jacobi identity")
    space = SplitSpace(g.dim, g.dim, tuple(g.names), tuple(f"{n}'" for n in g.names))
    eta = MixedMap(space, 1, 1, INTO_G, {
        ((i,), (a,)): g.bracket_basis(i, a)
        for i in range(g.dim) for a in range(g.dim) if i != a
    })
    qt = QuasiTwilled.from_components(
        space, eta=eta, mu=g.as_mu(space), theta=g.as_theta(space, rat(lam)))
    return _post_verify(qt, "modified")


def catalog_action(g: LieAlgebra, h: LieAlgebra, rho_mats: Rep,
                   lam: Fraction | int | str) -> QuasiTwilled:
    """Action algebra: ([x,y], rho(x)v - rho(y)u + lam[u,v])."""
    if not g.is_lie():
        raise PremiseError("g fails the Jacobi identity")
    if not h.is_lie():
        raise PremiseError("h fails the Jacobi identity")
    if representation_residuals(g, rho_mats, h.dim):
        raise PremiseError("rho fails the representation law")
    if derivation_residuals(g, h, rho_mats):
        raise PremiseError("rho does not act by derivations of h")
    space = SplitSpace(g.dim, h.dim, tuple(g.names), tuple(h.names))
    rho = MixedMap(space, 1, 1, INTO_H, {
        ((i,), (a,)): rho_mats[i].column(a) for i in range(g.dim) for a in range(h.dim)
    })
    qt = QuasiTwilled.from_components(
        space, pi=g.as_pi(space), rho=rho, mu=h.as_mu(space).scale(rat(lam)))
    return _post_verify(qt, "action")


def catalog_semidirect(g: LieAlgebra, vdim: int, rho_mats: Rep) -> QuasiTwilled:
    """Semidirect product with an abelian factor: ([x,y], rho(x)v - rho(y)u)."""
    if not g.is_lie():
        raise PremiseError("g fails the Jacobi identity")
    if representation_residuals(g, rho_mats, vdim):
        raise PremiseError("rho fails the representation law")
    space = SplitSpace(g.dim, vdim, tuple(g.names), ())
    rho = MixedMap(space, 1, 1, INTO_H, {
        ((i,), (a,)): rho_mats[i].column(a) for i in range(g.dim) for a in range(vdim)
    })
    qt = QuasiTwilled.from_components(space, pi=g.as_pi(space), rho=rho)
    return _post_verify(qt, "semidirect")


def catalog_direct(g: LieAlgebra, h: LieAlgebra) -> QuasiTwilled:
    """Direct product: ([x,y], [u,v])."""
    if not g.is_lie():
        raise PremiseError("g fails the Jacobi identity")
    if not h.is_lie():
        raise PremiseError("h fails the Jacobi identity")
    space = SplitSpace(g.dim, h.dim, tuple(g.names), tuple(h.names))
    qt = QuasiTwilled.from_components(space, pi=g.as_pi(space), mu=h.as_mu(space))
    return _post_verify(qt, "direct")


def catalog_cocycle(g: LieAlgebra, vdim: int, rho_mats: Rep,
                    omega: Mapping[tuple[int, int], Vec]) -> QuasiTwilled:
    """Central-type extension data: ([x,y], rho(x)v - rho(y)u + omega(x,y))."""
    if not g.is_lie():
        raise PremiseError("g fails the Jacobi identity")
    if representation_residuals(g, rho_mats, vdim):
        raise PremiseError("rho fails the representation law")
    if cocycle_residuals(g, rho_mats, vdim, omega):
        raise PremiseError("omega fails the 2-cocycle identity")
    space = SplitSpace(g.dim, vdim, tuple(g.names), ())
    rho = MixedMap(space, 1, 1, INTO_H, {
        ((i,), (a,)): rho_mats[i].column(a) for i in range(g.dim) for a in range(vdim)
    })
    theta = MixedMap(space, 2, 0, INTO_H, {
        ((i, j), ()): tuple(rat(c) for c in v) for (i, j), v in omega.items()
    })
    qt = QuasiTwilled.from_components(space, pi=g.as_pi(space), rho=rho, theta=theta)
    return _post_verify(qt, "cocycle")


def catalog_reynolds(g: LieAlgebra) -> QuasiTwilled:
    """The cocycle construction with V = g, rho = ad, omega = the bracket."""
    return _post_verify(
        catalog_cocycle(g, g.dim, adjoint_rep(g), dict(g.brackets)), "reynolds")


def catalog_matched(mp: MatchedPair) -> QuasiTwilled:
    report = verify_matched_pair(mp)
    if not report.ok:
        parts = []
        if not report.lie_g_ok:
            parts.append("g fails Jacobi")
        if not report.lie_h_ok:
            parts.append("h fails Jacobi")
        if not report.rho_rep_ok:
            parts.append("rho fails the representation law")
        if not report.eta_rep_ok:
            parts.append("eta fails the representation law")
        if report.compat_h:
            parts.append("rho/eta compatibility on h fails")
        if report.compat_g:
            parts.append("eta/rho compatibility on g fails")
        raise PremiseError("; ".join(parts))
    return _post_verify(matched_pair_to_qt(mp), "matched")


CATALOG_KINDS = ("modified", "action", "semidirect", "direct", "cocycle", "reynolds", "matched")


def catalog(kind: str, **params) -> QuasiTwilled:
    """Named constructions; each validates its premises and its output."""
    builders = {
        "modified": catalog_modified,
        "action": catalog_action,
        "semidirect": catalog_semidirect,
        "direct": catalog_direct,
        "cocycle": catalog_cocycle,
        "reynolds": catalog_reynolds,
        "matched": catalog_matched,
    }
    if kind not in builders:
        raise ValueError(f"unknown catalog kind {kind!r}; expected one of {CATALOG_KINDS}")
    return builders[kind](**params)
