"""Exact rational linear feasibility via Fourier-Motzkin elimination.

A constraint is a pair (coeffs, rhs) meaning  sum_j coeffs[j] * x_j >= rhs,
with all numbers Fractions (or ints).  Problem sizes in this package are tiny
(at most a handful of variables), so the classical doubly-exponential blowup
is irrelevant.
"""

from __future__ import annotations

from fractions import Fraction

Constraint = tuple[tuple[Fraction, ...], Fraction]


def make_constraint(coeffs, rhs) -> Constraint:
    return (tuple(Fraction(c) for c in coeffs), Fraction(rhs))


def equality_constraints(coeffs, rhs) -> list[Constraint]:
    c = make_constraint(coeffs, rhs)
    return [c, (tuple(-x for x in c[0]), -c[1])]


def _eliminate(cons: list[Constraint], k: int) -> list[Constraint]:
    pos, neg, out = [], [], []
    for c in cons:
        ck = c[0][k]
        if ck > 0:
            pos.append(c)
        elif ck < 0:
            neg.append(c)
        else:
            out.append(c)
    for (cp, rp) in pos:
        for (cn, rn) in neg:
            a, b = cp[k], cn[k]  # a > 0 > b; (-b)*cp + a*cn kills x_k
            coeffs = tuple(-b * x + a * y for x, y in zip(cp, cn))
            out.append((coeffs, -b * rp + a * rn))
    return out


def feasible_point(cons: list[Constraint], nvars: int) -> list[Fraction] | None:
    """A rational point satisfying every constraint, or None if infeasible.

    The point is chosen deterministically (midpoints of the FM bound
    intervals, 0 on unbounded coordinates).
    """
    cons = [make_constraint(c, r) for c, r in cons]
    systems = [cons]
    current = cons
    for k in range(nvars - 1, -1, -1):
        current = _eliminate(current, k)
        systems.append(current)
    if any(rhs > 0 for _, rhs in systems[-1]):
        return None
    x: list[Fraction] = []
    for k in range(nvars):
        sys_k = systems[nvars - 1 - k]  # involves variables 0..k only
        lo = hi = None
        for coeffs, rhs in sys_k:
            ck = coeffs[k]
            if ck == 0:
                continue
            rest = sum((coeffs[j] * x[j] for j in range(k)), Fraction(0))
            bound = (rhs - rest) / ck
            if ck > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is None and hi is None:
            x.append(Fraction(0))
        elif lo is None:
            x.append(hi)
        elif hi is None:
            x.append(lo)
        else:
            x.append((lo + hi) / 2)
    return x


def is_feasible(cons: list[Constraint], nvars: int) -> bool:
    return feasible_point(cons, nvars) is not None


def variable_bounds(cons: list[Constraint], nvars: int,
                    i: int) -> tuple[Fraction | None, Fraction | None]:
    """Exact (min, max) of x_i over the feasible region; None = unbounded.

    The region must be nonempty (check with is_feasible first).
    """
    current = [make_constraint(c, r) for c, r in cons]
    for k in range(nvars):
        if k != i:
            current = _eliminate(current, k)
    lo = hi = None
    for coeffs, rhs in current:
        ck = coeffs[i]
        if ck == 0:
            continue
        bound = rhs / ck
        if ck > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    return lo, hi


def solve_rational(rows, b) -> list[Fraction] | None:
    """Solve the square system rows @ x = b exactly; None if singular."""
    n = len(rows)
    a = [[Fraction(e) for e in row] + [Fraction(bi)]
         for row, bi in zip(rows, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        p = a[k][k]
        a[k] = [x / p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]
