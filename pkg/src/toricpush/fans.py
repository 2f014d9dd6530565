"""Fans of smooth projective toric varieties: validation and standard builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import FanError
from .feasibility import equality_constraints, is_feasible, make_constraint
from .errors import LatticeError
from .lattice import IntMatrix, cone_is_smooth, is_primitive, smith_normal_form


@dataclass(frozen=True)
class Fan:
    """Simplicial fan: primitive integer rays plus maximal cones as index sets."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    @property
    def nrays(self) -> int:
        return len(self.rays)

    def cone_rays(self, cone) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in cone]


@dataclass(frozen=True)
class FanReport:
    smooth: bool
    complete: bool
    projective: str = "assumed"


def _check_structure(dim, rays, max_cones):
    if dim < 1:
        raise FanError("dimension must be positive")
    rays = tuple(tuple(int(e) for e in r) for r in rays)
    for r in rays:
        if len(r) != dim:
            raise FanError("ray has wrong dimension")
        if not is_primitive(r):
            raise FanError("ray not primitive: %s" % (r,))
    if len(set(rays)) != len(rays):
        raise FanError("duplicate ray")
    cones = []
    for c in max_cones:
        c = tuple(sorted(int(i) for i in c))
        if len(set(c)) != len(c):
            raise FanError("repeated ray index in cone %s" % (c,))
        if not c:
            raise FanError("empty maximal cone")
        if any(i < 0 or i >= len(rays) for i in c):
            raise FanError("cone index out of range: %s" % (c,))
        if len(c) > dim:
            raise FanError("cone %s has more than dim rays (not simplicial)" % (c,))
        cones.append(c)
    if not cones:
        raise FanError("fan has no maximal cones")
    if len(set(cones)) != len(cones):
        raise FanError("duplicate maximal cone")
    for c, d in combinations(cones, 2):
        if set(c) <= set(d) or set(d) <= set(c):
            raise FanError("maximal cone contained in another")
    return rays, tuple(cones)


def _cones_intersect_properly(fan: Fan, c1, c2) -> bool:
    """Check sigma ∩ tau = cone(common rays), via exact rational feasibility.

    An improper intersection means some point of sigma ∩ tau needs a strictly
    positive coefficient on a non-shared ray; strictness is normalized to
    margin >= 1 (the cone is scale-invariant).
    """
    common = set(c1) & set(c2)
    r1, r2 = fan.cone_rays(c1), fan.cone_rays(c2)
    k1, k2 = len(r1), len(r2)
    nvars = k1 + k2
    base = []
    for coord in range(fan.dim):
        coeffs = [r[coord] for r in r1] + [-r[coord] for r in r2]
        base.extend(equality_constraints(coeffs, 0))
    for j in range(nvars):
        unit = [0] * nvars
        unit[j] = 1
        base.append(make_constraint(unit, 0))
    strict_positions = ([i for i, idx in enumerate(c1) if idx not in common]
                        + [k1 + j for j, idx in enumerate(c2) if idx not in common])
    for pos in strict_positions:
        unit = [0] * nvars
        unit[pos] = 1
        if is_feasible(base + [make_constraint(unit, 1)], nvars):
            return False
    return True


def _walls(cone):
    return [tuple(w) for w in combinations(cone, len(cone) - 1)]


def _is_complete(fan: Fan) -> bool:
    # pure n-dimensional + every wall in exactly two cones + wall-connected
    if any(len(c) != fan.dim for c in fan.max_cones):
        return False
    incidence: dict[tuple[int, ...], list[int]] = {}
    for ci, cone in enumerate(fan.max_cones):
        for w in _walls(cone):
            incidence.setdefault(w, []).append(ci)
    if any(len(v) != 2 for v in incidence.values()):
        return False
    # connectivity across walls
    adj: dict[int, set[int]] = {i: set() for i in range(len(fan.max_cones))}
    for a, b in incidence.values():
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(fan.max_cones)


def validate_fan(dim, rays, max_cones, name="") -> tuple[Fan, FanReport]:
    """Validate raw fan data; raises FanError if it is not a fan at all.

    Smoothness and completeness are reported, not required.
    """
    rays, cones = _check_structure(dim, rays, max_cones)
    fan = Fan(dim=dim, rays=rays, max_cones=cones, name=name)
    smooth = True
    for c in cones:
        try:
            ok = cone_is_smooth(fan.cone_rays(c))
        except LatticeError as exc:
            raise FanError(str(exc)) from exc
        if not ok:
            # dependent rays never define a simplicial cone
            rs = fan.cone_rays(c)
            if smith_normal_form(IntMatrix.from_rows(rs)).rank() < len(rs):
                raise FanError("cone %s has linearly dependent rays" % (c,))
            smooth = False
    for c1, c2 in combinations(cones, 2):
        if not _cones_intersect_properly(fan, c1, c2):
            raise FanError("cones %s and %s overlap improperly" % (c1, c2))
    return fan, FanReport(smooth=smooth, complete=_is_complete(fan))


def projective_space(n: int) -> Fan:
    """Fan of P^n: standard basis rays plus their negative sum."""
    if n < 1:
        raise FanError("projective_space needs n >= 1")
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [tuple(sorted(set(range(n + 1)) - {i})) for i in range(n + 1)]
    fan, report = validate_fan(n, rays, cones, name="P%d" % n)
    assert report.smooth and report.complete
    return fan


def product_fan(f: Fan, g: Fan, name="") -> Fan:
    """Fan of the product variety."""
    dim = f.dim + g.dim
    rays = [r + (0,) * g.dim for r in f.rays]
    rays += [(0,) * f.dim + r for r in g.rays]
    cones = [tuple(c1) + tuple(f.nrays + i for i in c2)
             for c1 in f.max_cones for c2 in g.max_cones]
    fan, report = validate_fan(dim, rays, cones,
                               name=name or "%sx%s" % (f.name, g.name))
    assert report.smooth and report.complete
    return fan


def hirzebruch(a: int) -> Fan:
    """Hirzebruch surface F_a with rays e1, e2, -e1 + a*e2, -e2."""
    if a < 0:
        raise FanError("hirzebruch needs a >= 0")
    rays = [(1, 0), (0, 1), (-1, a), (0, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    fan, report = validate_fan(2, rays, cones, name="F%d" % a)
    assert report.smooth and report.complete
    return fan


def standard_fan(kind: str, *params) -> Fan:
    """Builders by name: projective_space(n), hirzebruch(a), product(F,G)."""
    if kind == "projective_space":
        return projective_space(*params)
    if kind == "hirzebruch":
        return hirzebruch(*params)
    if kind == "product":
        return product_fan(*params)
    raise FanError("unknown standard fan %r" % kind)
