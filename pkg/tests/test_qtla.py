from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from _support import random_mixed_map, random_vec
from qtlie.exactlin import Matrix, vzero
from qtlie.multilinear import INTO_G, INTO_H, MixedMap, SplitSpace, lift_eval
from qtlie.qtla import (
    CertificateError,
    LieAlgebra,
    MatchedPair,
    PremiseError,
    QuasiTwilled,
    adjoint_rep,
    assemble_omega,
    catalog,
    catalog_action,
    catalog_cocycle,
    catalog_direct,
    catalog_matched,
    catalog_modified,
    catalog_reynolds,
    catalog_semidirect,
    cocycle_residuals,
    induced_representation_sigma,
    matched_pair_to_qt,
    qt_to_matched_pair,
    trivial_rep,
    verify_matched_pair,
    verify_structure_equations,
)

SL2 = LieAlgebra.sl2()
AFF1 = LieAlgebra.aff1()
HEIS = LieAlgebra.heisenberg3()
AB2 = LieAlgebra.abelian(2)
BASE_ALGEBRAS = (SL2, AFF1, HEIS, AB2)


def sl2_borel_matched_pair() -> MatchedPair:
    # sl(2) split as span(e) + span(h, f); both are subalgebras, so the two
    # projected actions form a matched pair.
    g = LieAlgebra.abelian(1)
    h = LieAlgebra(2, {(0, 1): (Fraction(0), Fraction(-2))}, names=("h", "f"))
    rho = [Matrix([[0, 1], [0, 0]])]          # rho(e): h -> 0, f -> h
    eta = [Matrix([[2]]), Matrix([[0]])]      # eta(h)e = 2e, eta(f)e = 0
    return MatchedPair.from_actions(g, h, rho, eta)


def test_standard_algebras_are_lie():
    for lie in BASE_ALGEBRAS:
        assert lie.is_lie()


def test_assemble_omega_matches_displayed_formula():
    qt = catalog_modified(SL2, 1)
    space = qt.space
    rng = random.Random(21)
    x, y = random_vec(rng, 3), random_vec(rng, 3)
    u, v = random_vec(rng, 3), random_vec(rng, 3)
    value = lift_eval(assemble_omega(qt), [space.pair(x, u), space.pair(y, v)])
    g_expect = tuple(a - b for a, b in zip(SL2.bracket(x, v), SL2.bracket(y, u)))
    h_expect = tuple(a + b for a, b in zip(SL2.bracket(u, v), SL2.bracket(x, y)))
    assert space.g_part(value) == g_expect
    assert space.h_part(value) == h_expect


def test_assemble_omega_zero_components():
    space = SplitSpace(2, 2)
    qt = QuasiTwilled.from_components(space)
    assert assemble_omega(qt).is_zero()


def test_direct_product_cross_terms_vanish():
    qt = catalog_direct(SL2, SL2)
    space = qt.space
    e_g = space.basis_vector(0)
    e_h = space.basis_vector(3)
    assert lift_eval(assemble_omega(qt), [e_g, e_h]) == vzero(6)


def test_action_omega_mixed_value():
    qt = catalog_action(SL2, SL2, adjoint_rep(SL2), 1)
    space = qt.space
    rng = random.Random(22)
    x = random_vec(rng, 3)
    v = random_vec(rng, 3)
    value = lift_eval(assemble_omega(qt), [space.embed_g(x), space.embed_h(v)])
    assert space.g_part(value) == vzero(3)
    assert space.h_part(value) == SL2.bracket(x, v)


def catalog_suite() -> list[tuple[str, QuasiTwilled]]:
    builds: list[tuple[str, QuasiTwilled]] = []
    for lie in BASE_ALGEBRAS:
        tag = "/".join(lie.names)
        builds.append((f"modified({tag})", catalog_modified(lie, 1)))
        builds.append((f"modified({tag},1/2)", catalog_modified(lie, Fraction(1, 2))))
        builds.append((f"action({tag},ad)", catalog_action(lie, lie, adjoint_rep(lie), 1)))
        builds.append((f"semidirect({tag},ad)", catalog_semidirect(lie, lie.dim, adjoint_rep(lie))))
        builds.append((f"semidirect({tag},triv)", catalog_semidirect(lie, 2, trivial_rep(lie, 2))))
        builds.append((f"direct({tag},aff1)", catalog_direct(lie, AFF1)))
        builds.append((f"reynolds({tag})", catalog_reynolds(lie)))
    builds.append(("action(sl2,aff1,0,1)", catalog_action(SL2, AFF1, trivial_rep(SL2, 2), 1)))
    builds.append(("matched(sl2-borel)", catalog_matched(sl2_borel_matched_pair())))
    return builds


@pytest.mark.parametrize("name,qt", catalog_suite(), ids=lambda arg: arg if isinstance(arg, str) else "")
def test_catalog_outputs_are_quasi_twilled(name, qt):
    report = verify_structure_equations(qt)
    assert report.all_zero, f"{name}: {report.failing()}"
    assert report.omega_square.is_zero()
    assert report.consistent_with_omega_square()
    # h stays a subalgebra: no g component on pure-h pairs
    space = qt.space
    omega = assemble_omega(qt)
    for a, b in itertools.combinations(range(space.dim_h), 2):
        value = omega.value((space.h_global(a), space.h_global(b)))
        assert space.g_part(value) == vzero(space.dim_g)


def test_structure_equation_isolated_mu_failure():
    space = SplitSpace(1, 3)
    bad_mu = MixedMap(space, 0, 2, INTO_H, {
        ((), (0, 1)): (Fraction(1), Fraction(0), Fraction(0)),
        ((), (0, 2)): (Fraction(0), Fraction(0), Fraction(1)),
    })  # the broken bracket [e,h]=e, [e,f]=f, [h,f]=0 placed on the h side
    report = verify_structure_equations(QuasiTwilled.from_components(space, mu=bad_mu))
    assert report.failing() == ["[mu,mu]"]
    assert report.consistent_with_omega_square()


def test_structure_equation_isolated_cocycle_failure():
    # adjoint sl(2) with omega(e, h) = e, which is not a 2-cocycle: only the
    # [rho,theta] + [pi,theta] residual may fire.
    space = SplitSpace(3, 3)
    rho_mats = adjoint_rep(SL2)
    rho = MixedMap(space, 1, 1, INTO_H, {
        ((i,), (a,)): rho_mats[i].column(a) for i in range(3) for a in range(3)
    })
    omega = {(0, 1): (Fraction(1), Fraction(0), Fraction(0))}
    theta = MixedMap(space, 2, 0, INTO_H, {(key, ()): v for key, v in omega.items()})
    qt = QuasiTwilled.from_components(space, pi=SL2.as_pi(space), rho=rho, theta=theta)
    report = verify_structure_equations(qt)
    assert report.failing() == ["[rho,theta] + [pi,theta]"]
    with pytest.raises(PremiseError, match="2-cocycle"):
        catalog_cocycle(SL2, 3, rho_mats, omega)


def test_cocycle_identity_agrees_with_structure_residual():
    # The standalone 2-cocycle check and residual 5 of the assembled structure
    # must give the same verdict, cocycle or not.
    rng = random.Random(23)
    rho_mats = adjoint_rep(SL2)
    space = SplitSpace(3, 3)
    rho = MixedMap(space, 1, 1, INTO_H, {
        ((i,), (a,)): rho_mats[i].column(a) for i in range(3) for a in range(3)
    })
    for _ in range(12):
        omega = {(i, j): random_vec(rng, 3) for i, j in itertools.combinations(range(3), 2)}
        theta = MixedMap(space, 2, 0, INTO_H, {(key, ()): v for key, v in omega.items()})
        qt = QuasiTwilled.from_components(space, pi=SL2.as_pi(space), rho=rho, theta=theta)
        residual5 = dict(verify_structure_equations(qt).residuals)["[rho,theta] + [pi,theta]"]
        assert (not cocycle_residuals(SL2, rho_mats, 3, omega)) == residual5.is_zero()


def test_seven_equations_iff_omega_square_on_perturbations():
    rng = random.Random(24)
    base = catalog_action(AFF1, AFF1, adjoint_rep(AFF1), 1)
    space = base.space
    for _ in range(10):
        parts = dict(base.components())
        victim = rng.choice(list(parts))
        shape = parts[victim]
        noise = random_mixed_map(rng, space, shape.k, shape.l, shape.target, density=0.4)
        parts[victim] = shape.add(noise)
        qt = QuasiTwilled(space, parts["pi"], parts["rho"], parts["mu"], parts["eta"], parts["theta"])
        report = verify_structure_equations(qt)
        assert report.all_zero == report.omega_square.is_zero()
        assert report.consistent_with_omega_square()


def test_sigma_trivial_when_eta_zero():
    qt = catalog_semidirect(SL2, 3, adjoint_rep(SL2))
    mats = induced_representation_sigma(qt)
    assert all(m.is_zero() for m in mats)


def test_sigma_of_matched_catalog_is_eta_action():
    mp = sl2_borel_matched_pair()
    qt = catalog_matched(mp)
    assert induced_representation_sigma(qt) == mp.eta_action_matrices()


def test_sigma_of_modified_catalog_is_adjoint():
    qt = catalog_modified(SL2, 1)
    # sigma(v)x = -eta(x, v) = -[x, v] = [v, x] = ad(v) x
    assert induced_representation_sigma(qt) == adjoint_rep(SL2)


def test_sigma_certificate_failure():
    space = SplitSpace(2, 2)
    eta = MixedMap(space, 1, 1, INTO_G, {
        ((0,), (0,)): (Fraction(0), Fraction(1)),
        ((1,), (1,)): (Fraction(1), Fraction(0)),
    })
    mu = AB2.as_mu(space)
    bad = QuasiTwilled.from_components(space, eta=eta, mu=mu)
    # sigma(u), sigma(v) do not commute although mu = 0 demands they do
    with pytest.raises(CertificateError):
        induced_representation_sigma(bad)


def test_matched_pair_verification_and_round_trip():
    mp = sl2_borel_matched_pair()
    report = verify_matched_pair(mp)
    assert report.ok
    qt = matched_pair_to_qt(mp)
    back = qt_to_matched_pair(qt)
    assert back.lie_g == mp.lie_g and back.lie_h == mp.lie_h
    assert back.rho == mp.rho and back.eta == mp.eta


def test_matched_pair_trivial_cases():
    both_zero = MatchedPair.from_actions(AB2, AB2, trivial_rep(AB2, 2), trivial_rep(AB2, 2))
    assert verify_matched_pair(both_zero).ok
    # an action algebra is a matched pair with eta = 0
    action_mp = MatchedPair.from_actions(SL2, SL2, adjoint_rep(SL2), trivial_rep(SL2, 3))
    assert verify_matched_pair(action_mp).ok


def test_matched_pair_failure_detected():
    # use a non-representation rho
    rho = [Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]])]
    mp = MatchedPair.from_actions(AFF1, AB2, rho, trivial_rep(AB2, 2))
    assert not verify_matched_pair(mp).ok
    with pytest.raises(PremiseError):
        catalog_matched(mp)


def test_decompose_action_omega_components():
    lam = Fraction(5, 3)
    qt = catalog_action(SL2, SL2, adjoint_rep(SL2), lam)
    omega = assemble_omega(qt)
    parts = {(m.k, m.l, m.target): m for m in omega.components()}
    assert parts[(2, 0, INTO_G)] == SL2.as_pi(qt.space)
    assert parts[(0, 2, INTO_H)] == SL2.as_mu(qt.space).scale(lam)
    assert parts[(1, 1, INTO_H)] == qt.rho
    assert (2, 0, INTO_H) not in parts and (1, 1, INTO_G) not in parts


def test_catalog_dispatcher():
    qt = catalog("modified", g=SL2, lam=1)
    assert verify_structure_equations(qt).all_zero
    with pytest.raises(ValueError, match="unknown catalog kind"):
        catalog("nonsense")


def test_builders_reject_bad_premises():
    broken = LieAlgebra(3, {
        (0, 1): (Fraction(1), Fraction(0), Fraction(0)),
        (0, 2): (Fraction(0), Fraction(0), Fraction(1)),
    })
    assert not broken.is_lie()
    with pytest.raises(PremiseError, match="Jacobi"):
        catalog_modified(broken, 1)
    bad_rep = [Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]])]
    with pytest.raises(PremiseError, match="representation"):
        catalog_semidirect(AFF1, 2, bad_rep)
