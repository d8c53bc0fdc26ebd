"""Cubical digitization: from continuous shapes to cube graphs.

Space is divided into closed axis-aligned cubes of edge length L with
corners on the integer lattice scaled by L.  A shape's cubical model
is the set of cubes its point set meets; the model graph has one
vertex per cube, two cubes adjacent when they touch, which for closed
cubes means every index differs by at most one.

Circles, segments, sphere surfaces, and cube surfaces are tested
against each cube exactly, via coordinate clamping or slab clipping.
Implicit surfaces (zero sets of an expression in x, y[, z]) are tested
by sampling the expression on each cube's corner lattice, refined by
`subdivision_depth` halvings, and looking for a sign change; features
thinner than the sample spacing can be missed, so implicit models are
correct up to that resolution only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, DomainError
from .graph import Graph

DEFAULT_CUBE_BUDGET = 200_000
IMPLICIT_DEFAULT_BOUND = 8.0

_EVAL_NAMES = {
    "sqrt": np.sqrt, "sin": np.sin, "cos": np.cos, "tan": np.tan,
    "exp": np.exp, "log": np.log, "abs": np.abs, "hypot": np.hypot,
    "minimum": np.minimum, "maximum": np.maximum, "pi": math.pi, "e": math.e,
}


def _check_finite(values, what: str) -> None:
    for v in values:
        if not isinstance(v, (int, float)) or not math.isfinite(v):
            raise DomainError(f"{what} must be finite numbers, got {v!r}")


@dataclass(frozen=True)
class Circle:
    center: tuple[float, float]
    radius: float

    def __post_init__(self):
        _check_finite((*self.center, self.radius), "circle parameters")
        if self.radius <= 0:
            raise DomainError("circle radius must be positive")


@dataclass(frozen=True)
class Segment:
    a: tuple[float, float]
    b: tuple[float, float]

    def __post_init__(self):
        _check_finite((*self.a, *self.b), "segment endpoints")


@dataclass(frozen=True)
class SphereSurface:
    center: tuple[float, float, float]
    radius: float

    def __post_init__(self):
        _check_finite((*self.center, self.radius), "sphere parameters")
        if self.radius <= 0:
            raise DomainError("sphere radius must be positive")


@dataclass(frozen=True)
class CubeSurface:
    corner: tuple[float, float, float]
    side: float

    def __post_init__(self):
        _check_finite((*self.corner, self.side), "cube parameters")
        if self.side <= 0:
            raise DomainError("cube side must be positive")


@dataclass(frozen=True)
class ImplicitSurface:
    """Zero set of an expression in x, y and optionally z, within +-bound."""

    expression: str
    dim: int
    bound: float = IMPLICIT_DEFAULT_BOUND

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise DomainError("implicit surfaces live in 2 or 3 dimensions")
        if not (isinstance(self.bound, (int, float)) and math.isfinite(self.bound) and self.bound > 0):
            raise DomainError("implicit bound must be a positive finite number")
        compile_implicit(self.expression, self.dim)


Shape = Circle | Segment | SphereSurface | CubeSurface | ImplicitSurface


def compile_implicit(expression: str, dim: int):
    """Compile an implicit expression, allowing only x, y, z and math names."""
    try:
        code = compile(expression, "<shape>", "eval")
    except SyntaxError as exc:
        raise DomainError(f"bad implicit expression: {exc}") from None
    allowed = set(_EVAL_NAMES) | ({"x", "y"} if dim == 2 else {"x", "y", "z"})
    stray = set(code.co_names) - allowed
    if stray:
        raise DomainError(f"implicit expression uses unknown names: {sorted(stray)}")
    return code


@dataclass(frozen=True)
class CubicalModel:
    edge_length: float
    dim: int
    cubes: frozenset[tuple[int, ...]]
    graph: Graph = field(compare=False)


def cube_label(index: tuple[int, ...]) -> str:
    return "c" + "_".join(str(c) for c in index)


def cube_graph(cubes) -> Graph:
    """Intersection graph of closed grid cubes: adjacency is Chebyshev distance 1."""
    cubes = set(cubes)
    edges = []
    for c in cubes:
        for other in _chebyshev_neighbors(c):
            if other in cubes and other > c:
                edges.append((cube_label(c), cube_label(other)))
    return Graph((cube_label(c) for c in cubes), edges)


def _chebyshev_neighbors(c: tuple[int, ...]):
    deltas = [()]
    for coord in c:
        deltas = [d + (coord + step,) for d in deltas for step in (-1, 0, 1)]
    for cand in deltas:
        if cand != c:
            yield cand


def model_graph(model: CubicalModel) -> Graph:
    return model.graph


# -- per-shape cube tests ----------------------------------------------------


def _index_range(lo: float, hi: float, L: float) -> range:
    return range(math.floor(lo / L) - 1, math.floor(hi / L) + 2)


def _box(index: tuple[int, ...], L: float) -> list[tuple[float, float]]:
    return [(c * L, (c + 1) * L) for c in index]


def _dist_bounds_sq(center, box) -> tuple[float, float]:
    near = far = 0.0
    for c, (lo, hi) in zip(center, box):
        lo_d, hi_d = lo - c, hi - c
        near += max(lo_d, 0.0, -hi_d) ** 2
        far += max(abs(lo_d), abs(hi_d)) ** 2
    return near, far


def _round_cubes(shape, L: float):
    """Cubes meeting a circle or sphere surface: near <= r <= far."""
    center, r = shape.center, shape.radius
    ranges = [_index_range(c - r, c + r, L) for c in center]
    out = []
    for index in _product(ranges):
        near, far = _dist_bounds_sq(center, _box(index, L))
        if near <= r * r <= far:
            out.append(index)
    return out


def _segment_cubes(shape: Segment, L: float):
    p, q = shape.a, shape.b
    ranges = [_index_range(min(a, b), max(a, b), L) for a, b in zip(p, q)]
    out = []
    for index in _product(ranges):
        if _segment_meets_box(p, q, _box(index, L)):
            out.append(index)
    return out


def _segment_meets_box(p, q, box) -> bool:
    t0, t1 = 0.0, 1.0
    for (lo, hi), a, b in zip(box, p, q):
        d = b - a
        if d == 0.0:
            if not lo <= a <= hi:
                return False
            continue
        ta, tb = (lo - a) / d, (hi - a) / d
        if ta > tb:
            ta, tb = tb, ta
        t0, t1 = max(t0, ta), min(t1, tb)
        if t0 > t1:
            return False
    return True


def _cube_surface_cubes(shape: CubeSurface, L: float):
    corner, side = shape.corner, shape.side
    ranges = [_index_range(c, c + side, L) for c in corner]
    out = []
    for index in _product(ranges):
        box = _box(index, L)
        touches = all(lo <= c + side and hi >= c for (lo, hi), c in zip(box, corner))
        inside = all(lo > c and hi < c + side for (lo, hi), c in zip(box, corner))
        if touches and not inside:
            out.append(index)
    return out


def _product(ranges):
    out = [()]
    for r in ranges:
        out = [t + (i,) for t in out for i in r]
    return out


def _implicit_cubes(shape: ImplicitSurface, L: float, depth: int, budget: int):
    code = compile_implicit(shape.expression, shape.dim)
    lo_idx = math.floor(-shape.bound / L)
    hi_idx = math.ceil(shape.bound / L)
    counts = hi_idx - lo_idx
    step = 1 << depth
    samples = counts * step + 1
    if samples ** shape.dim > 64_000_000:
        raise CapacityError(
            "implicit sampling lattice too large; lower the bound or depth, or raise edge length"
        )
    axis = np.linspace(lo_idx * L, hi_idx * L, samples)
    grids = np.meshgrid(*([axis] * shape.dim), indexing="ij")
    env = dict(_EVAL_NAMES)
    env.update(zip(("x", "y", "z"), grids))
    try:
        values = eval(code, {"__builtins__": {}}, env)  # names vetted at compile time
    except Exception as exc:
        raise DomainError(f"implicit expression failed to evaluate: {exc}") from None
    values = np.asarray(values, dtype=float)
    if values.shape != grids[0].shape:
        values = np.broadcast_to(values, grids[0].shape)
    lo_block = values
    hi_block = values
    for ax in range(shape.dim):
        win_lo = np.lib.stride_tricks.sliding_window_view(lo_block, step + 1, axis=ax)
        win_hi = np.lib.stride_tricks.sliding_window_view(hi_block, step + 1, axis=ax)
        sel = [slice(None)] * win_lo.ndim
        sel[ax] = slice(0, None, step)
        lo_block = win_lo[tuple(sel)].min(axis=-1)
        hi_block = win_hi[tuple(sel)].max(axis=-1)
    mask = (lo_block <= 0.0) & (hi_block >= 0.0)
    hits = np.argwhere(mask)
    if len(hits) > budget:
        raise CapacityError(f"implicit model has {len(hits)} cubes, above budget {budget}")
    return [tuple(int(i) + lo_idx for i in hit) for hit in hits]


def digitize(
    shape: Shape,
    edge_length: float,
    subdivision_depth: int = 0,
    *,
    max_cubes: int = DEFAULT_CUBE_BUDGET,
) -> CubicalModel:
    """Cubical model of a shape on the grid of the given edge length.

    `subdivision_depth` refines the sample lattice for implicit shapes
    only; the analytic shapes are tested exactly.
    """
    if not (isinstance(edge_length, (int, float)) and math.isfinite(edge_length) and edge_length > 0):
        raise DomainError("edge length must be a positive finite number")
    if not isinstance(subdivision_depth, int) or subdivision_depth < 0 or subdivision_depth > 12:
        raise DomainError("subdivision depth must be an integer in [0, 12]")
    L = float(edge_length)
    if isinstance(shape, (Circle, SphereSurface)):
        cubes = _round_cubes(shape, L)
    elif isinstance(shape, Segment):
        cubes = _segment_cubes(shape, L)
    elif isinstance(shape, CubeSurface):
        cubes = _cube_surface_cubes(shape, L)
    elif isinstance(shape, ImplicitSurface):
        cubes = _implicit_cubes(shape, L, subdivision_depth, max_cubes)
    else:
        raise DomainError(f"unknown shape {shape!r}")
    if len(cubes) > max_cubes:
        raise CapacityError(f"model has {len(cubes)} cubes, above budget {max_cubes}")
    dim = 2 if isinstance(shape, (Circle, Segment)) else (
        shape.dim if isinstance(shape, ImplicitSurface) else 3
    )
    cubes = frozenset(cubes)
    return CubicalModel(L, dim, cubes, cube_graph(cubes))


# -- shape mini-language -----------------------------------------------------
#
#   circle:cx,cy,r        segment:x1,y1,x2,y2      sphere:cx,cy,cz,r
#   cubesurf:x,y,z,side   implicit:<expr in x,y[,z]>


def parse_shape(text: str, *, implicit_bound: float = IMPLICIT_DEFAULT_BOUND) -> Shape:
    kind, sep, rest = text.partition(":")
    if not sep:
        raise DomainError(f"shape must look like kind:args, got {text!r}")
    if kind == "implicit":
        expr = rest.strip()
        if not expr:
            raise DomainError("implicit shape needs an expression")
        try:
            code = compile(expr, "<shape>", "eval")
        except SyntaxError as exc:
            raise DomainError(f"bad implicit expression: {exc}") from None
        dim = 3 if "z" in code.co_names else 2
        return ImplicitSurface(expr, dim, implicit_bound)

    def floats(n: int) -> list[float]:
        parts = rest.split(",")
        if len(parts) != n:
            raise DomainError(f"{kind} takes {n} comma-separated numbers, got {rest!r}")
        try:
            return [float(p) for p in parts]
        except ValueError:
            raise DomainError(f"bad number in shape arguments: {rest!r}") from None

    if kind == "circle":
        cx, cy, r = floats(3)
        return Circle((cx, cy), r)
    if kind == "segment":
        x1, y1, x2, y2 = floats(4)
        return Segment((x1, y1), (x2, y2))
    if kind == "sphere":
        cx, cy, cz, r = floats(4)
        return SphereSurface((cx, cy, cz), r)
    if kind == "cubesurf":
        x, y, z, side = floats(4)
        return CubeSurface((x, y, z), side)
    raise DomainError(
        f"unknown shape kind {kind!r}; expected circle, segment, sphere, cubesurf, or implicit"
    )
