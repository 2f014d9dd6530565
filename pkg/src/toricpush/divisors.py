"""Torus-invariant divisors: the Picard lattice, section counts, nef/ample tests."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import FanError
from .fans import Fan
from .feasibility import (is_feasible, make_constraint, solve_rational,
                          variable_bounds)
from .lattice import IntMatrix, inverse_unimodular, smith_normal_form


@dataclass(frozen=True)
class PicLattice:
    """Picard lattice of a smooth complete toric variety in a canonical basis.

    to_class_mat projects ray-coefficient space onto Z^rank; lift_mat is an
    integer right-inverse section.  Both come from the Smith normal form of
    the ray matrix, so the basis is deterministic.
    """

    fan: Fan
    rank: int
    to_class_mat: IntMatrix
    lift_mat: IntMatrix

    def class_of(self, coeffs) -> tuple[int, ...]:
        return self.to_class_mat.mul_vector(coeffs)

    def lift(self, cls) -> tuple[int, ...]:
        return self.lift_mat.mul_vector(cls)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank


@lru_cache(maxsize=None)
def class_group(fan: Fan) -> PicLattice:
    """Pic(X) = Z^rays / (image of the character lattice), via SNF."""
    n, k = fan.dim, fan.nrays
    ray_matrix = IntMatrix.from_rows(fan.rays)  # k x n, rows are rays
    snf = smith_normal_form(ray_matrix)
    factors = snf.invariant_factors()
    if snf.rank() != n or any(d != 1 for d in factors[:n]):
        raise FanError("class group has torsion or rays do not span; "
                       "input is not a valid smooth complete fan")
    rank = k - n
    if rank < 1:
        raise FanError("Picard rank zero is not supported")
    uinv = inverse_unimodular(snf.U)
    to_class = IntMatrix.from_rows(snf.U.entries[n:])
    lift = IntMatrix.from_rows([row[n:] for row in uinv.entries])
    return PicLattice(fan=fan, rank=rank, to_class_mat=to_class, lift_mat=lift)


def _section_polytope_constraints(fan: Fan, coeffs):
    # <m, v_rho> >= -a_rho for every ray
    return [make_constraint(ray, -a) for ray, a in zip(fan.rays, coeffs)]


def h0(fan: Fan, coeffs) -> int:
    """Number of global sections: lattice points of the section polytope."""
    coeffs = tuple(int(a) for a in coeffs)
    if len(coeffs) != fan.nrays:
        raise FanError("divisor needs one coefficient per ray")
    cons = _section_polytope_constraints(fan, coeffs)
    if not is_feasible(cons, fan.dim):
        return 0
    box = []
    for i in range(fan.dim):
        lo, hi = variable_bounds(cons, fan.dim, i)
        if lo is None or hi is None:
            raise FanError("section polytope unbounded; fan is not complete")
        box.append(range(math.ceil(lo), math.floor(hi) + 1))
    count = 0
    rays = fan.rays
    for m in product(*box):
        if all(sum(mi * vi for mi, vi in zip(m, ray)) >= -a
               for ray, a in zip(rays, coeffs)):
            count += 1
    return count


@lru_cache(maxsize=None)
def h0_class(fan: Fan, cls: tuple[int, ...]) -> int:
    """h0 of the canonical lift of a divisor class (cached; h0 is class-invariant)."""
    return h0(fan, class_group(fan).lift(cls))


class Positivity(enum.Enum):
    AMPLE = "ample"
    NEF_NOT_AMPLE = "nef-not-ample"
    NOT_NEF = "not-nef"


@lru_cache(maxsize=None)
def kleiman_forms(fan: Fan) -> tuple[tuple[Fraction, ...], ...]:
    """Linear forms on ray-coefficient space, one per (max cone, outside ray).

    Each form sends a divisor's coefficients to <m_sigma, v_rho> + a_rho;
    the divisor is nef iff all values are >= 0 and ample iff all are > 0.
    """
    forms = []
    n, k = fan.dim, fan.nrays
    for cone in fan.max_cones:
        if len(cone) != n:
            raise FanError("positivity needs a complete fan")
        rows = fan.cone_rays(cone)
        # m_sigma solves <m, v_rho> = -a_rho on the cone; smooth => unique
        # m_sigma is linear in a: columns = solutions for unit coefficient vectors
        cols = []
        for pos in range(n):
            rhs = [0] * n
            rhs[pos] = -1
            sol = solve_rational(rows, rhs)
            if sol is None:
                raise FanError("degenerate maximal cone %s" % (cone,))
            cols.append(sol)
        for rho in range(k):
            if rho in cone:
                continue
            form = [Fraction(0)] * k
            v = fan.rays[rho]
            for pos, idx in enumerate(cone):
                contrib = sum(cols[pos][i] * v[i] for i in range(n))
                form[idx] += contrib
            form[rho] += 1
            forms.append(tuple(form))
    return tuple(forms)


def positivity(fan: Fan, coeffs) -> Positivity:
    """Toric Kleiman criterion for nefness and ampleness."""
    coeffs = tuple(int(a) for a in coeffs)
    values = [sum(c * a for c, a in zip(form, coeffs))
              for form in kleiman_forms(fan)]
    if all(v > 0 for v in values):
        return Positivity.AMPLE
    if all(v >= 0 for v in values):
        return Positivity.NEF_NOT_AMPLE
    return Positivity.NOT_NEF
