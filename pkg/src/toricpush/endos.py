"""Finite toric endomorphisms: fan-compatible lattice self-maps, the pullback
action on the Picard lattice, and the int-amplified decision."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .divisors import PicLattice, Positivity, kleiman_forms, positivity
from .errors import EndoError
from .fans import Fan
from .feasibility import feasible_point, make_constraint
from .lattice import IntMatrix, kernel_basis


@dataclass(frozen=True)
class ToricEndomorphism:
    """Lattice self-map F with F v_rho = c_rho * v_{pi(rho)} for every ray."""

    fan: Fan
    matrix: IntMatrix
    pi: tuple[int, ...]
    mults: tuple[int, ...]

    @property
    def pi_inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self.pi)
        for i, j in enumerate(self.pi):
            inv[j] = i
        return tuple(inv)


def build_endo(fan: Fan, matrix: IntMatrix) -> ToricEndomorphism:
    """Derive ray permutation and multiplicities from F; reject incompatible maps."""
    if matrix.nrows != fan.dim or matrix.ncols != fan.dim:
        raise EndoError("endomorphism matrix must be %dx%d" % (fan.dim, fan.dim))
    if matrix.det() == 0:
        raise EndoError("not finite: matrix is singular")
    pi = []
    mults = []
    for rho, v in enumerate(fan.rays):
        image = matrix.mul_vector(v)
        target = None
        for j, w in enumerate(fan.rays):
            # image == c * w for a positive integer c?
            nz = next((i for i in range(fan.dim) if w[i] != 0), None)
            if nz is None or w[nz] == 0 or image[nz] % w[nz] != 0:
                continue
            c = image[nz] // w[nz]
            if c > 0 and all(image[i] == c * w[i] for i in range(fan.dim)):
                target = (j, c)
                break
        if target is None:
            raise EndoError("not ray-compatible: F maps ray %s off the fan's rays"
                            % (v,))
        pi.append(target[0])
        mults.append(target[1])
    if sorted(pi) != list(range(fan.nrays)):
        raise EndoError("not ray-compatible: ray images collide")
    cone_sets = {frozenset(c) for c in fan.max_cones}
    for cone in fan.max_cones:
        if frozenset(pi[i] for i in cone) not in cone_sets:
            raise EndoError("not cone-compatible: image of cone %s is not a cone"
                            % (cone,))
    endo = ToricEndomorphism(fan=fan, matrix=matrix, pi=tuple(pi),
                             mults=tuple(mults))
    _recheck(endo)
    return endo


def _recheck(endo: ToricEndomorphism) -> None:
    for rho, v in enumerate(endo.fan.rays):
        image = endo.matrix.mul_vector(v)
        expected = tuple(endo.mults[rho] * x
                         for x in endo.fan.rays[endo.pi[rho]])
        if image != expected:
            raise EndoError("internal inconsistency: F v != c * v_pi")


def multiplication_endo(fan: Fan, q: int) -> ToricEndomorphism:
    """The multiplication-by-q map (q >= 1)."""
    if q < 1:
        raise EndoError("multiplication factor must be positive")
    return build_endo(fan, IntMatrix.identity(fan.dim).scale(q))


def degree(endo: ToricEndomorphism) -> int:
    return abs(endo.matrix.det())


def compose(e1: ToricEndomorphism, e2: ToricEndomorphism) -> ToricEndomorphism:
    """The endomorphism e1 after e2 (lattice matrix F1 @ F2)."""
    if e1.fan != e2.fan:
        raise EndoError("cannot compose endomorphisms of different fans")
    return build_endo(e1.fan, e1.matrix @ e2.matrix)


def pullback_divisor(endo: ToricEndomorphism, coeffs) -> tuple[int, ...]:
    """Divisor-level pullback: f* sends D_{rho'} to c_rho D_rho, rho = pi^{-1}(rho')."""
    coeffs = tuple(int(a) for a in coeffs)
    return tuple(endo.mults[rho] * coeffs[endo.pi[rho]]
                 for rho in range(endo.fan.nrays))


def pullback_matrix(endo: ToricEndomorphism, pic: PicLattice) -> IntMatrix:
    """Matrix of f* on the Picard lattice in the canonical basis."""
    if pic.fan != endo.fan:
        raise EndoError("Picard lattice belongs to a different fan")
    cols = []
    for j in range(pic.rank):
        unit = [0] * pic.rank
        unit[j] = 1
        cols.append(pic.class_of(pullback_divisor(endo, pic.lift(unit))))
    return IntMatrix.from_rows(list(zip(*cols)))


def _strict_class_constraints(fan: Fan, pic: PicLattice, transform: IntMatrix):
    """Kleiman forms composed with h -> lift(transform @ h), margins >= 1."""
    cons = []
    comp = pic.lift_mat @ transform  # nrays x rank
    for form in kleiman_forms(fan):
        coeffs = [sum(Fraction(form[i]) * comp.entries[i][j]
                      for i in range(fan.nrays))
                  for j in range(pic.rank)]
        cons.append(make_constraint(coeffs, 1))
    return cons


def is_int_amplified(endo: ToricEndomorphism,
                     pic: PicLattice) -> tuple[bool, tuple[int, ...] | None]:
    """Decide whether some ample H has f*H - H ample; returns a certificate.

    Both strict inequality systems are scale-invariant, so strictness is
    normalized to margins >= 1 and decided by exact rational feasibility.
    """
    r = pic.rank
    ident = IntMatrix.identity(r)
    pb = pullback_matrix(endo, pic)
    cons = _strict_class_constraints(endo.fan, pic, ident)
    if feasible_point(cons, r) is None:
        raise EndoError("no ample class found; fan may be non-projective")
    cons += _strict_class_constraints(endo.fan, pic, pb - ident)
    point = feasible_point(cons, r)
    if point is None:
        return False, None
    scale = lcm(*[x.denominator for x in point]) if point else 1
    cert = tuple(int(x * scale) for x in point)
    fstar_minus = tuple(a - b for a, b in
                        zip(pb.mul_vector(cert), cert))
    if (positivity(endo.fan, pic.lift(cert)) is not Positivity.AMPLE
            or positivity(endo.fan, pic.lift(fstar_minus)) is not Positivity.AMPLE):
        raise EndoError("certificate re-check failed (internal error)")
    return True, cert


def fixed_classes(endo: ToricEndomorphism, pic: PicLattice) -> list[tuple[int, ...]]:
    """Integer basis of ker(f* - id) on the Picard lattice."""
    pb = pullback_matrix(endo, pic)
    return kernel_basis(pb - IntMatrix.identity(pic.rank))
