"""BFS metrics (components, diameter, girth) and constructive witnesses.

BFS results are exact and assume nothing about the graph.  The witness
builders do the opposite: they exploit the Frobenius-family structure to
produce short paths and cycles in closed form, and every witness is
re-validated edge by edge before it is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    Acyclic,
    NoSixCycle,
    SamePoint,
    SolveFailed,
    UnsupportedRegime,
)
from .fields import FieldElement, fq_solve
from .graphs import FamilySpec, Graph, Line, Point, adjacent, line_through, point_through
from .spectrum import component_count_formula

_BFS_BATCH = 1024


# ---------------------------------------------------------------------------
# BFS oracles.

def components(graph: Graph) -> tuple[int, list[int]]:
    """Number of connected components and their sizes, in discovery order
    (ordered by smallest contained vertex id)."""
    labels, sizes = _component_labels(graph)
    return len(sizes), sizes


def _component_labels(graph: Graph) -> tuple[list[int], list[int]]:
    adj = graph.adjacency
    n = graph.n
    labels = [-1] * n
    sizes: list[int] = []
    for start in range(n):
        if labels[start] >= 0:
            continue
        comp = len(sizes)
        labels[start] = comp
        size = 1
        dq = deque([start])
        while dq:
            u = dq.popleft()
            for v in adj[u]:
                if labels[v] < 0:
                    labels[v] = comp
                    size += 1
                    dq.append(v)
        sizes.append(size)
    return labels, sizes


def eccentricities(graph: Graph):
    """Exact eccentricity of every vertex within its component.

    Runs batched BFS as sparse matrix products: a frontier column advances one
    level per product, and a column's eccentricity is the last level that
    reached a new vertex."""
    import numpy as np

    A = graph.csr()
    n = graph.n
    ecc = np.zeros(n, dtype=np.int64)
    for lo in range(0, n, _BFS_BATCH):
        hi = min(lo + _BFS_BATCH, n)
        b = hi - lo
        frontier = np.zeros((n, b), dtype=np.int32)
        frontier[np.arange(lo, hi), np.arange(b)] = 1
        visited = frontier > 0
        view = ecc[lo:hi]
        step = 0
        while True:
            reached = A @ frontier
            newly = (reached > 0) & ~visited
            active = newly.any(axis=0)
            if not active.any():
                break
            step += 1
            view[active] = step
            visited |= newly
            frontier = newly.astype(np.int32)
    return ecc


def diameter(graph: Graph) -> int:
    """Exact diameter: the maximum eccentricity over all vertices, taken per
    component for disconnected graphs."""
    return int(eccentricities(graph).max())


def component_diameters(graph: Graph) -> list[int]:
    labels, sizes = _component_labels(graph)
    ecc = eccentricities(graph)
    out = [0] * len(sizes)
    for v, comp in enumerate(labels):
        if ecc[v] > out[comp]:
            out[comp] = int(ecc[v])
    return out


def girth(graph: Graph) -> int:
    """Exact girth by truncated BFS from every vertex.

    A non-tree edge (u, w) seen from source s closes a walk of length
    dist(u) + dist(w) + 1 which contains a cycle no longer than that, and for
    every s on a shortest cycle the bound is attained, so the minimum over
    all sources is exact.  Expansion is cut off once a level cannot improve
    the best cycle found so far."""
    adj = graph.adjacency
    n = graph.n
    best: int | None = None
    for src in range(n):
        dist = {src: 0}
        parent = {src: -1}
        dq = deque([src])
        while dq:
            u = dq.popleft()
            du = dist[u]
            if best is not None and 2 * du + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    dq.append(w)
                elif w != parent[u]:
                    cand = du + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    if best is None:
        raise Acyclic("graph contains no cycle")
    return best


# ---------------------------------------------------------------------------
# Common neighbors (Frobenius family).

def common_neighbor(graph: Graph, P: Point, P2: Point) -> Line | None:
    """The unique line adjacent to both points, if any.

    Two distinct points share a neighbor exactly when their difference has
    the shape (u, l u, l u^p, ..., l u^(p^(m-1))) with u nonzero; the line is
    then forced: l_1 = l and l_k = l_1 p_1^(p^(k-2)) - p_k."""
    spec = graph.spec
    if spec.family != "linearized":
        raise UnsupportedRegime("common-neighbor solving needs the Frobenius family")
    if P == P2:
        raise SamePoint("common_neighbor needs two distinct points")
    u = P.coords[0] - P2.coords[0]
    if not u:
        return None
    l = (P.coords[1] - P2.coords[1]) / u
    for k in range(2, spec.m + 2):
        if P.coords[k - 1] - P2.coords[k - 1] != l * u.frob(k - 2):
            return None
    line = line_through(spec, P, l)
    if not (adjacent(spec, P, line) and adjacent(spec, P2, line)):
        raise SolveFailed("constructed line fails adjacency; internal error")
    return line


# ---------------------------------------------------------------------------
# Diameter witnesses (Frobenius family, m <= e).

@dataclass(frozen=True)
class PathWitness:
    """A validated walk: consecutive vertices adjacent, sides alternating."""

    vertices: tuple
    step_weights: tuple[FieldElement, ...]
    anchors: tuple[FieldElement, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def _validated_walk(spec, verts, start, end, step_weights=(), anchors=()) -> PathWitness:
    if verts[0] != start or verts[-1] != end:
        raise SolveFailed("walk endpoints do not match the request")
    for a, b in zip(verts, verts[1:]):
        if isinstance(a, Point) == isinstance(b, Point):
            raise SolveFailed("walk sides fail to alternate")
        pt, ln = (a, b) if isinstance(a, Point) else (b, a)
        if not adjacent(spec, pt, ln):
            raise SolveFailed("walk contains a non-edge")
    return PathWitness(tuple(verts), tuple(step_weights), tuple(anchors))


def _line_walk(spec: FamilySpec, start: Line, end: Line, x1: FieldElement):
    """Solve for line-side increments through m+1 anchor points.

    Anchors are x_1 and x_1 + t^i; their pairwise differences are basis
    elements, hence F_p-independent, which makes the Moore-type system below
    uniquely solvable.  Returns (anchors, increments, full uncompressed walk).
    """
    F = spec.field
    m = spec.m
    xs = [x1] + [x1 + F.basis[i] for i in range(m)]
    delta = [end.coords[j] - start.coords[j] for j in range(m + 1)]
    rows = [[F.one] * (m + 1)]
    for k in range(2, m + 2):
        rows.append([x.frob(k - 2) for x in xs])
    ts = fq_solve(F, rows, delta)
    if ts is None:
        raise SolveFailed("anchor system unsolvable; anchors not independent?")
    walk = [start]
    cur = start
    for x, t in zip(xs, ts):
        pt = point_through(spec, cur, x)
        cur = line_through(spec, pt, cur.coords[0] + t)
        walk.extend((pt, cur))
    if cur != end:
        raise SolveFailed("line walk failed to land on the target")
    return xs, ts, walk


def _compress_backtracks(walk):
    """Drop backtrack detours a-b-a; they arise from zero increments."""
    out = list(walk[:1])
    for v in walk[1:]:
        if len(out) >= 2 and out[-2] == v:
            out.pop()
        else:
            out.append(v)
    return out


def diameter_witness(graph: Graph, a, b) -> PathWitness:
    """A walk from a to b of length at most 2(m+1), built in closed form.

    Works for the Frobenius family with m <= e.  Same-side line pairs solve
    the anchor system directly; point pairs solve the transposed system with
    basis increments on the first coordinate; mixed pairs route the line-side
    walk through the requested point."""
    spec = graph.spec
    if spec.family != "linearized":
        raise UnsupportedRegime("witness construction needs the Frobenius family")
    if spec.m > spec.e:
        raise UnsupportedRegime(
            f"witness anchors need m <= e; m={spec.m}, e={spec.e}"
        )
    if a == b:
        return PathWitness((a,), (), ())
    F = spec.field
    if isinstance(a, Line) and isinstance(b, Line):
        xs, ts, walk = _line_walk(spec, a, b, F.zero)
        return _validated_walk(spec, _compress_backtracks(walk), a, b, ts, xs)
    if isinstance(a, Point) and isinstance(b, Point):
        return _point_walk(spec, a, b)
    if isinstance(a, Point) and isinstance(b, Line):
        return _mixed_walk(spec, a, b)
    if isinstance(a, Line) and isinstance(b, Point):
        w = _mixed_walk(spec, b, a)
        verts = tuple(reversed(w.vertices))
        return _validated_walk(spec, verts, a, b, w.step_weights, w.anchors)
    raise TypeError("witness endpoints must be Point or Line")


def _point_walk(spec: FamilySpec, a: Point, b: Point) -> PathWitness:
    F = spec.field
    m = spec.m
    us = [F.basis[i] for i in range(m)]
    us.append(b.coords[0] - a.coords[0] - sum(us, F.zero))
    delta = [b.coords[k - 1] - a.coords[k - 1] for k in range(2, m + 2)]
    rows = [[u.frob(k - 2) for u in us[:m]] for k in range(2, m + 2)]
    sol = fq_solve(F, rows, delta)
    if sol is None:
        raise SolveFailed("point-side Moore system unsolvable")
    l1s = list(sol) + [F.zero]
    walk = [a]
    cur = a
    for u, l1 in zip(us, l1s):
        ln = line_through(spec, cur, l1)
        cur = point_through(spec, ln, cur.coords[0] + u)
        walk.extend((ln, cur))
    if cur != b:
        raise SolveFailed("point walk failed to land on the target")
    return _validated_walk(
        spec, _compress_backtracks(walk), a, b, tuple(l1s), tuple(us)
    )


def _mixed_walk(spec: FamilySpec, a: Point, b: Line) -> PathWitness:
    """Point-to-line walk: start from a neighbor line of a, run the line-side
    walk anchored so its first intermediate point is a itself, then drop the
    leading line."""
    F = spec.field
    first = line_through(spec, a, F.zero)
    xs, ts, walk = _line_walk(spec, first, b, a.coords[0])
    trimmed = walk[1:]  # starts at the point with first coordinate a.p1 == a
    trimmed = _compress_backtracks(trimmed)
    return _validated_walk(spec, trimmed, a, b, ts, xs)


# ---------------------------------------------------------------------------
# Cycle witnesses and the cycle coefficient system.

@dataclass(frozen=True)
class CycleWitness:
    """A candidate closed walk built from first-coordinate decrements u_i and
    line slopes c_i.  points/lines are the constructed vertices; closure is
    the point the construction returns to (equal to points[0] for a genuine
    cycle)."""

    spec: FamilySpec
    points: tuple[Point, ...]
    lines: tuple[Line, ...]
    us: tuple[FieldElement, ...]
    cs: tuple[FieldElement, ...]
    closure: Point

    @property
    def length(self) -> int:
        return 2 * len(self.points)

    def is_closed(self) -> bool:
        return self.closure == self.points[0]

    def vertices_distinct(self) -> bool:
        return len(set(self.points)) == len(self.points) and len(set(self.lines)) == len(
            self.lines
        )

    def edges_valid(self) -> bool:
        t = len(self.points)
        for i in range(t):
            if not adjacent(self.spec, self.points[i], self.lines[i]):
                return False
            nxt = self.points[(i + 1) % t] if i + 1 < t else self.closure
            if not adjacent(self.spec, nxt, self.lines[i]):
                return False
        return True

    def is_valid_cycle(self) -> bool:
        return self.is_closed() and self.vertices_distinct() and self.edges_valid()

    def vertex_sequence(self) -> tuple:
        out = []
        for pt, ln in zip(self.points, self.lines):
            out.extend((pt, ln))
        out.append(self.closure)
        return tuple(out)


def cycle_from_coefficients(spec: FamilySpec, us, cs, start: Point | None = None) -> CycleWitness:
    """Construct the closed walk determined by decrements u_i and slopes c_i:
    L_i is the neighbor of P_i with first coordinate c_i, and P_(i+1) is the
    neighbor of L_i with first coordinate p_1(P_i) - u_i."""
    if spec.family != "linearized":
        raise UnsupportedRegime("cycle construction needs the Frobenius family")
    if len(us) != len(cs) or len(us) < 2:
        raise ValueError("need matching u and c lists with at least two steps")
    F = spec.field
    us = tuple(u if isinstance(u, FieldElement) else F.from_int(u) for u in us)
    cs = tuple(c if isinstance(c, FieldElement) else F.from_int(c) for c in cs)
    if start is None:
        start = Point((F.zero,) * (spec.m + 1))
    points = [start]
    lines = []
    cur = start
    for i, (u, c) in enumerate(zip(us, cs)):
        ln = line_through(spec, cur, c)
        lines.append(ln)
        cur = point_through(spec, ln, cur.coords[0] - u)
        if i + 1 < len(us):
            points.append(cur)
    return CycleWitness(spec, tuple(points), tuple(lines), us, cs, cur)


def verify_cycle_system(witness: CycleWitness) -> bool:
    """The m+1 closure equations: sum u_i = 0 and, for each Frobenius power
    j < m, sum c_i u_i^(p^j) = 0.

    Necessary for a closed cycle with these coefficients but not sufficient:
    the constructed walk can still revisit a vertex."""
    spec = witness.spec
    F = spec.field
    if any(not u for u in witness.us):
        raise ValueError("cycle coefficients u_i must be nonzero")
    if sum(witness.us, F.zero):
        return False
    for j in range(spec.m):
        acc = F.zero
        for u, c in zip(witness.us, witness.cs):
            acc = acc + c * u.frob(j)
        if acc:
            return False
    return True


def _first_zero_trace_pair(F):
    """Smallest (by canonical order) beta != 0 with tr(beta) = 0 and alpha != 0
    solving alpha^2 + alpha = beta."""
    for bi in range(1, F.q):
        beta = F.from_index(bi)
        if beta.trace():
            continue
        for ai in range(1, F.q):
            alpha = F.from_index(ai)
            if alpha * alpha + alpha == beta:
                return alpha, beta
    return None


def cycle_witness_6(spec: FamilySpec) -> CycleWitness:
    """An explicit 6-cycle for the Frobenius family.

    Odd characteristic admits the integer witness u = (1, 1, -2),
    c = (1, -1, 0) from the all-zero point.  For p = 2 a 6-cycle needs
    e >= 2 and m = 1; it comes from any beta != 0 of trace zero and an
    alpha with alpha^2 + alpha = beta."""
    if spec.family != "linearized":
        raise UnsupportedRegime("cycle construction needs the Frobenius family")
    F = spec.field
    if spec.p % 2:
        w = cycle_from_coefficients(spec, (1, 1, -2), (1, -1, 0))
    elif spec.e >= 2 and spec.m == 1:
        pair = _first_zero_trace_pair(F)
        if pair is None:
            raise SolveFailed("no trace-zero beta admits alpha^2 + alpha = beta")
        alpha, beta = pair
        us = (alpha * alpha, alpha, beta)
        cs = (F.zero, beta / alpha, F.one)
        w = cycle_from_coefficients(spec, us, cs)
    else:
        raise NoSixCycle(
            f"girth is 8 for p=2 with e={spec.e}, m={spec.m}; no 6-cycle exists"
        )
    if not w.is_valid_cycle():
        raise SolveFailed("constructed 6-cycle failed validation")
    return w


def cycle_witness_8(spec: FamilySpec) -> CycleWitness:
    """An explicit 8-cycle in the girth-8 regimes: p = 2 with e = m = 1, or
    p = 2 with m >= 2.  Uses u = (1, 1, 1, 1), c = (0, 1, 0, 1)."""
    if spec.family != "linearized":
        raise UnsupportedRegime("cycle construction needs the Frobenius family")
    if spec.p != 2 or not (spec.m >= 2 or (spec.e == 1 and spec.m == 1)):
        raise UnsupportedRegime(
            f"8-cycle witness applies to p=2 with e=m=1 or m>=2; "
            f"got p={spec.p}, e={spec.e}, m={spec.m}"
        )
    w = cycle_from_coefficients(spec, (1, 1, 1, 1), (0, 1, 0, 1))
    if not w.is_valid_cycle():
        raise SolveFailed("constructed 8-cycle failed validation")
    return w


# ---------------------------------------------------------------------------
# Report assembly.

@dataclass(frozen=True)
class PredictedMetrics:
    components: int | None
    diameter: int | None
    girth: int | None


def predicted_metrics(spec: FamilySpec) -> PredictedMetrics:
    """Closed-form expectations where the theory provides them.

    Component counts follow from the function-rank formula for every family.
    Diameter 2(m+1) and the girth table apply to the Frobenius family only;
    outside their regimes the fields stay None."""
    comp = component_count_formula(spec)
    diam = None
    g = None
    if spec.family == "linearized":
        if spec.m <= spec.e:
            diam = 2 * (spec.m + 1)
        if spec.p % 2:
            g = 6
        elif spec.e >= 2 and spec.m == 1:
            g = 6
        elif spec.m >= 2 or spec.e == 1:
            g = 8
    return PredictedMetrics(comp, diam, g)


@dataclass(frozen=True)
class MetricsReport:
    spec: FamilySpec
    components: int
    sizes: list[int]
    diameter: int
    girth: int
    predicted: PredictedMetrics

    @property
    def matches(self) -> dict[str, bool | None]:
        pred = self.predicted
        return {
            "components": None if pred.components is None else pred.components == self.components,
            "diameter": None if pred.diameter is None else pred.diameter == self.diameter,
            "girth": None if pred.girth is None else pred.girth == self.girth,
        }

    @property
    def all_match(self) -> bool:
        return all(v is not False for v in self.matches.values())

    def to_json_dict(self) -> dict:
        return {
            "spec": self.spec.to_json_dict(),
            "components": self.components,
            "sizes": list(self.sizes),
            "diameter": self.diameter,
            "girth": self.girth,
            "predicted": {
                "components": self.predicted.components,
                "diameter": self.predicted.diameter,
                "girth": self.predicted.girth,
            },
            "match": self.matches,
        }


def metrics_report(graph: Graph) -> MetricsReport:
    count, sizes = components(graph)
    return MetricsReport(
        spec=graph.spec,
        components=count,
        sizes=sizes,
        diameter=diameter(graph),
        girth=girth(graph),
        predicted=predicted_metrics(graph.spec),
    )
