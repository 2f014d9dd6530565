"""Pic-graded Cox ring machinery: the induced monomial endomorphism, the
contracting criterion, graded shifts of the pushforward module, and the
Pic / f*Pic coset bookkeeping."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .divisors import PicLattice, class_group, h0_class
from .endos import ToricEndomorphism, degree, pullback_matrix
from .errors import EndoError, VerificationError
from .fans import Fan
from .feasibility import is_feasible, make_constraint, variable_bounds
from .lattice import (IntMatrix, coset_representatives, kernel_basis,
                      solve_diophantine)
from .pushforward import decompose_pushforward


@dataclass(frozen=True)
class CoxRing:
    """Polynomial ring with one variable per ray, graded by the Picard lattice."""

    fan: Fan
    pic: PicLattice
    degrees: tuple[tuple[int, ...], ...]  # degree_of(x_rho) = class of D_rho


@dataclass(frozen=True)
class CoxEndomorphism:
    """Monomial substitution x_{rho'} -> x_{source}^{exponent} induced by f."""

    ring: CoxRing
    endo: ToricEndomorphism
    sources: tuple[int, ...]
    exponents: tuple[int, ...]


@dataclass(frozen=True)
class ShiftList:
    shifts: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def cox_ring(fan: Fan) -> CoxRing:
    pic = class_group(fan)
    degrees = []
    for rho in range(fan.nrays):
        unit = [0] * fan.nrays
        unit[rho] = 1
        degrees.append(pic.class_of(unit))
    return CoxRing(fan=fan, pic=pic, degrees=tuple(degrees))


@lru_cache(maxsize=None)
def _degree_matrix(ring: CoxRing) -> IntMatrix:
    return IntMatrix.from_rows(list(zip(*ring.degrees)))  # rank x nrays


@lru_cache(maxsize=None)
def graded_dimension(ring: CoxRing, cls: tuple[int, ...]) -> int:
    """Number of monomials of degree cls: nonnegative exponent vectors e with
    sum_rho e_rho * deg(x_rho) = cls, counted by direct Diophantine enumeration.

    This is an enumeration path independent of the section-polytope count in
    divisors.h0; the two are cross-checked in the test suite.
    """
    cls = tuple(int(c) for c in cls)
    deg = _degree_matrix(ring)
    e0 = solve_diophantine(deg, cls)
    if e0 is None:
        return 0
    kernel = kernel_basis(deg)
    if not kernel:
        return 1 if all(e >= 0 for e in e0) else 0
    # count integer t with e0 + K t >= 0 (a bounded polytope for complete fans)
    nt = len(kernel)
    cons = [make_constraint([kernel[j][rho] for j in range(nt)], -e0[rho])
            for rho in range(ring.fan.nrays)]
    if not is_feasible(cons, nt):
        return 0
    box = []
    for i in range(nt):
        lo, hi = variable_bounds(cons, nt, i)
        if lo is None or hi is None:
            raise VerificationError("graded piece is infinite-dimensional; "
                                    "fan is not complete")
        box.append(range(math.ceil(lo), math.floor(hi) + 1))
    count = 0
    for t in product(*box):
        if all(e0[rho] + sum(kernel[j][rho] * t[j] for j in range(nt)) >= 0
               for rho in range(ring.fan.nrays)):
            count += 1
    return count


def induced_cox_endo(endo: ToricEndomorphism, ring: CoxRing) -> CoxEndomorphism:
    """phi sends x_{rho'} to x_{pi^{-1}(rho')} raised to c_{pi^{-1}(rho')}."""
    if ring.fan != endo.fan:
        raise EndoError("ring and endomorphism live on different fans")
    pi_inv = endo.pi_inverse
    sources = tuple(pi_inv[rp] for rp in range(endo.fan.nrays))
    exponents = tuple(endo.mults[s] for s in sources)
    pb = pullback_matrix(endo, ring.pic)
    zero = ring.pic.zero()
    for rp in range(endo.fan.nrays):
        image_degree = tuple(exponents[rp] * d for d in ring.degrees[sources[rp]])
        if image_degree != pb.mul_vector(ring.degrees[rp]):
            raise EndoError("grading incompatibility for variable %d" % rp)
        if image_degree == zero:
            raise EndoError("variable maps into degree zero; "
                            "phi^{-1}(m) = m fails")
    return CoxEndomorphism(ring=ring, endo=endo, sources=sources,
                           exponents=exponents)


def contracting_exponent(phi: CoxEndomorphism) -> int | None:
    """Least e with phi^e(x) in m^2 for every variable x, searched up to the
    number of rays; None iff some ray orbit has all multiplicities 1.

    phi^e(x_rho) is a pure power, so membership in m^2 is just "accumulated
    exponent >= 2".
    """
    nrays = phi.ring.fan.nrays
    for e in range(1, nrays + 1):
        ok = True
        for rho in range(nrays):
            acc = 1
            cur = rho
            for _ in range(e):
                acc *= phi.exponents[cur]
                cur = phi.sources[cur]
            if acc < 2:
                ok = False
                break
        if ok:
            return e
    return None


def pic_coset_decomposition(endo: ToricEndomorphism,
                            pic: PicLattice) -> list[tuple[int, ...]]:
    """Canonical representatives of Pic(X) / f* Pic(X)."""
    pb = pullback_matrix(endo, pic)
    if pb.det() == 0:
        raise EndoError("f* not injective on Pic")
    return coset_representatives(pb)


def module_shifts(endo: ToricEndomorphism, coeffs, box: int = 2) -> ShiftList:
    """Shifts of the graded pushforward module of O(M), verified degreewise.

    The shift multiset comes from the floor-formula decomposition; the graded
    dimension identity dim(E_M)_mu = sum_i dim R_{lambda_i + mu} is then
    checked exactly for every mu in the given Pic-coordinate box.
    """
    fan = endo.fan
    pic = class_group(fan)
    ring = cox_ring(fan)
    coeffs = tuple(int(a) for a in coeffs)
    shifts = decompose_pushforward(endo, coeffs).summands
    m_class = pic.class_of(coeffs)
    pb = pullback_matrix(endo, pic)
    for mu in product(range(-box, box + 1), repeat=pic.rank):
        lhs = h0_class(fan, tuple(a + b for a, b in
                                  zip(m_class, pb.mul_vector(mu))))
        rhs = sum(graded_dimension(ring, tuple(a + b for a, b in zip(lam, mu)))
                  for lam in shifts)
        if lhs != rhs:
            raise VerificationError(
                "graded dimension mismatch at mu=%s: %d != %d (bug or "
                "counterexample)" % (mu, lhs, rhs))
    return ShiftList(shifts=shifts)


def rank_bookkeeping(endo: ToricEndomorphism, ring: CoxRing,
                     pic: PicLattice) -> dict:
    """Check prod_rho c_rho = deg(f) * |Pic / f*Pic| and report the numbers."""
    prod_c = math.prod(endo.mults)
    deg = degree(endo)
    index = abs(pullback_matrix(endo, pic).det())
    if prod_c != deg * index:
        raise VerificationError(
            "rank bookkeeping fails: prod c = %d but degree * index = %d * %d"
            % (prod_c, deg, index))
    return {"product_of_multiplicities": prod_c, "degree": deg,
            "pic_index": index}
