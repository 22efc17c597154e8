"""MDS (extended) GRS codes with Galois hulls of prescribed dimension.

Three routes produce multipliers ``v`` whose ``(p^e' + 1)``-th powers equal
``lam * u_i * h(a_i)`` for a known witness, then scale the first ``s``
multipliers by an ``alpha`` with ``alpha^(p^e' + 1) != 1``.  Each scaled
coordinate removes one dimension from the hull:

* :func:`theorem_a_construct` starts from an e-Galois self-orthogonal seed
  with ``e = gcd(e', h)`` and ``h / e`` even;
* :func:`theorem_b_construct` starts from a Hermitian self-orthogonal seed
  with ``h / gcd(e', h)`` odd;
* :func:`theorem_c_code` builds the seed itself on a union of cosets of an
  additive subspace when ``2^t = p^e + 1`` and ``2^t | h/m``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import grs
from .bounds import bezout_twist, dimension_bound
from .exceptions import FieldError, HypothesisError, NoRootError
from .gf import GF, _nth_root_code, find_alpha
from .grs import GrsSpec, SelfOrthogonalWitness


@dataclass(frozen=True)
class TwistPlan:
    """Exponent ``mu`` and scalar ``alpha`` applied to the seed multipliers.

    ``mu (p^e' + 1) + nu (p^h - 1) = target`` and ``beta = alpha^(p^e'+1)``;
    the first ``s`` coordinates are multiplied by ``alpha``.
    """

    e_prime: int
    target: int
    mu: int
    nu: int
    alpha: int
    beta: int
    s: int

    def to_dict(self, F: GF) -> dict:
        return {
            "e_prime": self.e_prime,
            "target": self.target,
            "mu": self.mu,
            "nu": self.nu,
            "alpha": F.element_digits(self.alpha),
            "beta": F.element_digits(self.beta),
            "s": self.s,
        }


@dataclass(frozen=True)
class CosetPointSet:
    """Locators ``H + beta_j eta`` for ``j < w``, with ``H`` a GF(p^m)-subspace of dimension ``z``."""

    field: GF
    m: int
    z: int
    w: int
    t: int
    H_basis: tuple[int, ...]
    eta: int
    beta_labels: tuple[int, ...]
    points: tuple[int, ...]
    epsilon: int

    @property
    def n(self) -> int:
        return len(self.points)

    def to_dict(self) -> dict:
        F = self.field
        return {
            "m": self.m,
            "z": self.z,
            "w": self.w,
            "t": self.t,
            "H_basis": [F.element_digits(x) for x in self.H_basis],
            "eta": F.element_digits(self.eta),
            "beta_labels": [F.element_digits(x) for x in self.beta_labels],
            "epsilon": F.element_digits(self.epsilon),
            "n": self.n,
        }


def _check_l(k: int, l: int, extended: bool) -> int:
    """Number of twisted coordinates for hull dimension ``l``."""
    top = k - 1 if extended else k
    if not 0 <= l <= top:
        raise HypothesisError(f"hull dimension l={l} outside 0..{top}")
    return k - l - 1 if extended else k - l


def make_twist_plan(F: GF, e_prime: int, target: int, k: int, l: int, extended: bool) -> TwistPlan:
    s = _check_l(k, l, extended)
    mu, nu = bezout_twist(F.p, F.h, e_prime, target)
    try:
        alpha = find_alpha(F, e_prime).value
    except FieldError as exc:
        raise HypothesisError(str(exc)) from exc
    beta = F.pow(alpha, F.p**e_prime + 1)
    return TwistPlan(e_prime=e_prime, target=target, mu=mu, nu=nu, alpha=alpha, beta=beta, s=s)


def apply_twist(F: GF, v, plan: TwistPlan) -> tuple[int, ...]:
    """``(alpha v_1^mu, ..., alpha v_s^mu, v_{s+1}^mu, ..., v_n^mu)``."""
    powered = [F.pow(x, plan.mu) for x in v]
    return tuple(F.mul(plan.alpha, x) if i < plan.s else x for i, x in enumerate(powered))


def _check_k(p: int, e_prime: int, n: int, deg_h: int, k: int) -> None:
    top = dimension_bound(p, e_prime, n, deg_h)
    if not 1 <= k <= top:
        raise HypothesisError(f"k={k} outside 1..{top} = floor((p^e'+n-1-deg h)/(p^e'+1))")


def _seed_witness(seed: GrsSpec, e: int, witness: SelfOrthogonalWitness | None) -> SelfOrthogonalWitness:
    if seed.extended and seed.k < 2:
        raise HypothesisError("extended seeds need dimension m >= 2")
    if not grs.check_self_orthogonal(seed, e):
        raise HypothesisError(f"seed is not {e}-Galois self-orthogonal")
    if witness is None:
        return grs.recover_h(seed, e)
    if witness.e != e or not grs.check_witness(seed, witness):
        raise HypothesisError("witness does not satisfy lam u_i h(a_i) = v_i^(p^e+1)")
    return witness


def theorem_a_plan(seed: GrsSpec, e_prime: int, k: int, l: int,
                   witness: SelfOrthogonalWitness | None = None) -> tuple[TwistPlan, SelfOrthogonalWitness]:
    F = seed.field
    p, h = F.p, F.h
    if F.q < 5:
        raise HypothesisError("q must be at least 5")
    if not 1 <= e_prime <= h - 1:
        raise HypothesisError(f"e'={e_prime} outside 1..h-1")
    e = math.gcd(e_prime, h)
    if (h // e) % 2:
        raise HypothesisError(f"h/e must be even (h={h}, e=gcd(e',h)={e})")
    witness = _seed_witness(seed, e, witness)
    _check_k(p, e_prime, seed.n, witness.deg_h, k)
    return make_twist_plan(F, e_prime, p**e + 1, k, l, seed.extended), witness


def theorem_a_construct(seed: GrsSpec, e_prime: int, k: int, l: int,
                        witness: SelfOrthogonalWitness | None = None) -> GrsSpec:
    """``[n, k]`` (or ``[n+1, k]``) MDS code whose e'-Galois hull has dimension ``l``.

    ``seed`` must be e-Galois self-orthogonal for ``e = gcd(e', h)`` with
    ``h / e`` even.  Multipliers become ``v_i^mu`` where
    ``mu (p^e' + 1) = p^e + 1 (mod p^h - 1)``, so that
    ``(v_i^mu)^(p^e'+1) = v_i^(p^e+1) = lam u_i h(a_i)``.
    """
    plan, _ = theorem_a_plan(seed, e_prime, k, l, witness)
    return GrsSpec(seed.field, seed.a, apply_twist(seed.field, seed.v, plan), k, seed.extended)


def theorem_b_plan(seed: GrsSpec, e_prime: int, k: int, l: int,
                   witness: SelfOrthogonalWitness | None = None) -> tuple[TwistPlan, SelfOrthogonalWitness]:
    F = seed.field
    p, h = F.p, F.h
    if p == 2:
        raise HypothesisError("q must be odd")
    if h % 2:
        raise HypothesisError("h must be even")
    if not 0 <= e_prime <= h - 1:
        raise HypothesisError(f"e'={e_prime} outside 0..h-1")
    if (h // math.gcd(e_prime, h)) % 2 == 0:
        raise HypothesisError(f"h/gcd(e',h) must be odd (h={h}, e'={e_prime})")
    witness = _seed_witness(seed, h // 2, witness)
    _check_k(p, e_prime, seed.n, witness.deg_h, k)
    return make_twist_plan(F, e_prime, 2, k, l, seed.extended), witness


def theorem_b_construct(seed: GrsSpec, e_prime: int, k: int, l: int,
                        witness: SelfOrthogonalWitness | None = None) -> GrsSpec:
    """As :func:`theorem_a_construct`, from a Hermitian self-orthogonal seed.

    ``v_i^(sqrt(q)+1)`` lies in GF(sqrt(q)) and so has a square root
    ``v'_i``; with ``mu (p^e' + 1) = 2 (mod p^h - 1)`` the multipliers
    ``v'_i^mu`` satisfy ``(v'_i^mu)^(p^e'+1) = lam u_i h(a_i)``.
    """
    plan, _ = theorem_b_plan(seed, e_prime, k, l, witness)
    F = seed.field
    r1 = F.p ** (F.h // 2) + 1
    roots = [_nth_root_code(F, F.pow(x, r1), 2) for x in seed.v]
    return GrsSpec(F, seed.a, apply_twist(F, roots, plan), k, seed.extended)


def theorem_c_points(F: GF, m: int, z: int, w: int, t: int) -> CosetPointSet:
    """Canonical coset point set over GF(p^m).

    ``H`` is spanned over GF(p^m) by ``1, g, ..., g^(z-1)`` (``g`` the field
    generator) and ``eta = g^z``.  Labels ``beta`` are the elements of
    GF(p^m), zero first and then by discrete log.  Points run over the
    cosets in label order; inside a coset, ``H`` is enumerated with the
    coefficient of ``1`` varying slowest.
    """
    p, h = F.p, F.h
    if m < 1 or h % m:
        raise HypothesisError(f"m={m} must divide h={h}")
    if not 1 <= z <= h // m - 1:
        raise HypothesisError(f"z={z} outside 1..h/m-1={h // m - 1}")
    if not 1 <= w <= p**m:
        raise HypothesisError(f"w={w} outside 1..p^m={p**m}")
    if t < 1 or (h // m) % (2**t):
        raise HypothesisError(f"2^t={2**t} must divide h/m={h // m}")
    labels = F.subfield(m)
    basis = tuple(F.exp(i) for i in range(z))
    eta = F.exp(z)
    H = []
    for coeffs in itertools.product(labels, repeat=z):
        H.append(F.sum(F.mul(c, b) for c, b in zip(coeffs, basis)))
    assert eta not in set(H), "eta fell inside H"
    points = tuple(F.add(x, F.mul(beta, eta)) for beta in labels[:w] for x in H)
    eps = F.mul(
        F.prod(x for x in H if x),
        F.pow(F.prod(F.sub(eta, x) for x in H), w - 1),
    )
    ps = CosetPointSet(F, m, z, w, t, basis, eta, tuple(labels[:w]), points, eps)
    for x in coset_normalized_u(ps):
        assert x and F.frob(x, m) == x, "epsilon * u_i is not in GF(p^m)^*"
    return ps


def coset_normalized_u(ps: CosetPointSet) -> list[int]:
    """``epsilon * u_i`` for every point."""
    F = ps.field
    return [F.mul(ps.epsilon, u) for u in grs.compute_u(F, ps.points)]


def theorem_c_plan(ps: CosetPointSet, e: int, k: int, l: int, extended: bool = False) -> TwistPlan:
    F = ps.field
    if not 0 <= e <= F.h - 1:
        raise HypothesisError(f"e={e} outside 0..h-1")
    if 2**ps.t != F.p**e + 1:
        raise HypothesisError(f"2^t={2**ps.t} must equal p^e+1={F.p**e + 1}")
    _check_k(F.p, e, ps.n, 0, k)
    return make_twist_plan(F, e, F.p**e + 1, k, l, extended)


def theorem_c_code(ps: CosetPointSet, e: int, k: int, l: int, extended: bool = False) -> GrsSpec:
    """``[n, k]`` (or ``[n+1, k]``) MDS code on the coset points with e-Galois hull of dimension ``l``.

    Multipliers are the ``2^t``-th roots of ``epsilon u_i``; with ``l = k``
    the code is e-Galois self-orthogonal with witness ``h = 1``,
    ``lam = epsilon``.
    """
    plan = theorem_c_plan(ps, e, k, l, extended)
    F = ps.field
    d = 2**ps.t
    try:
        v = [_nth_root_code(F, x, d) for x in coset_normalized_u(ps)]
    except NoRootError as exc:  # pragma: no cover
        raise AssertionError(f"missing {d}-th root: {exc}") from exc
    return GrsSpec(F, ps.points, apply_twist(F, v, plan), k, extended)
