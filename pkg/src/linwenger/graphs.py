"""Bipartite point-line graphs over GF(p^e).

A point P = (p_1, ..., p_(m+1)) and a line L = [l_1, ..., l_(m+1)] are
adjacent when

    l_k + p_k = f_k(p_1) * l_1   for k = 2, ..., m+1,

so each side is q-regular: fixing P, every choice of l_1 determines the rest
of L, and symmetrically for lines.  The family maps f_k select the graph:
"linearized" uses Frobenius monomials x^(p^(k-2)), "wenger" uses plain powers
x^(k-1), and "custom" takes explicit coefficient vectors over the field.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import BudgetExceeded, OutOfRange
from .fields import GF, Field, FieldElement
from .linearized import EXPLICIT, FROBENIUS, MONOMIAL, LinPoly

FAMILIES = ("linearized", "wenger", "custom")
DEFAULT_VERTEX_BUDGET = 2_000_000

_KIND_OF = {"linearized": FROBENIUS, "wenger": MONOMIAL, "custom": EXPLICIT}


@dataclass(frozen=True)
class FamilySpec:
    """Parameters that pin down one graph: field, number of coordinates, and
    the family of maps f_2, ..., f_(m+1).

    For the custom family, f_indices holds one coefficient vector per map,
    each coefficient recorded by its canonical element index so the spec stays
    hashable and serializable.
    """

    p: int
    e: int
    m: int
    family: str = "linearized"
    modulus: tuple[int, ...] | None = None
    f_indices: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.m < 1:
            raise ValueError(f"need m >= 1, got {self.m}")
        if self.family == "custom":
            if self.f_indices is None or len(self.f_indices) != self.m:
                raise ValueError("custom family needs one coefficient vector per map")
            object.__setattr__(
                self, "f_indices", tuple(tuple(int(c) for c in poly) for poly in self.f_indices)
            )
        elif self.f_indices is not None:
            raise ValueError("f_indices is only meaningful for the custom family")
        if self.modulus is not None:
            object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        self.field  # construct eagerly so bad parameters fail here

    @functools.cached_property
    def field(self) -> Field:
        return GF(self.p, self.e, self.modulus)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n_vertices(self) -> int:
        return 2 * self.q ** (self.m + 1)

    @property
    def n_edges(self) -> int:
        return self.q ** (self.m + 2)

    @property
    def is_linearized(self) -> bool:
        return self.family == "linearized"

    @functools.cached_property
    def _f_elements(self) -> tuple[tuple[FieldElement, ...], ...] | None:
        if self.family != "custom":
            return None
        F = self.field
        return tuple(
            tuple(F.from_index(c % F.q) for c in poly) for poly in self.f_indices
        )

    def f_eval(self, k: int, x: FieldElement) -> FieldElement:
        """f_k(x) for 2 <= k <= m+1."""
        if not 2 <= k <= self.m + 1:
            raise ValueError(f"family index {k} outside [2, {self.m + 1}]")
        if self.family == "linearized":
            return x.frob(k - 2)
        if self.family == "wenger":
            return x ** (k - 1)
        acc = self.field.zero
        for c in reversed(self._f_elements[k - 2]):
            acc = acc * x + c
        return acc

    def f_values(self, x: FieldElement) -> tuple[FieldElement, ...]:
        return tuple(self.f_eval(k, x) for k in range(2, self.m + 2))

    def theta(self, u: FieldElement) -> tuple[FieldElement, ...]:
        """The generator map u -> (1, f_2(u), ..., f_(m+1)(u))."""
        return (self.field.one,) + self.f_values(u)

    @functools.cached_property
    def theta_injective(self) -> bool:
        seen = set()
        for u in self.field.elements():
            img = tuple(x.index for x in self.f_values(u))
            if img in seen:
                return False
            seen.add(img)
        return True

    def weight_tuple(self, index: int) -> tuple[FieldElement, ...]:
        """Weight vector number `index`, digits base q, w_1 least significant."""
        F = self.field
        out = []
        for _ in range(self.m + 1):
            out.append(F.from_index(index % F.q))
            index //= F.q
        return tuple(out)

    def lin_poly(self, weights) -> LinPoly:
        if self.family == "custom":
            return LinPoly(self.field, weights, EXPLICIT, self._f_elements)
        return LinPoly(self.field, weights, _KIND_OF[self.family])

    # -- construction helpers -------------------------------------------------

    @classmethod
    def linearized(cls, p: int, e: int, m: int, modulus=None) -> "FamilySpec":
        return cls(p, e, m, "linearized", modulus)

    @classmethod
    def wenger(cls, p: int, e: int, m: int, modulus=None) -> "FamilySpec":
        return cls(p, e, m, "wenger", modulus)

    @classmethod
    def custom(cls, p: int, e: int, m: int, f_indices, modulus=None) -> "FamilySpec":
        return cls(p, e, m, "custom", modulus, tuple(tuple(x) for x in f_indices))

    def to_json_dict(self) -> dict:
        out = {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "family": self.family,
            "modulus": list(self.field.modulus),
        }
        if self.family == "custom":
            out["f_list"] = [list(poly) for poly in self.f_indices]
        return out


@dataclass(frozen=True)
class Point:
    coords: tuple[FieldElement, ...]

    side = "point"

    def __repr__(self):
        return "(" + ", ".join(repr(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Line:
    coords: tuple[FieldElement, ...]

    side = "line"

    def __repr__(self):
        return "[" + ", ".join(repr(c) for c in self.coords) + "]"


def adjacent(spec: FamilySpec, P: Point, L: Line) -> bool:
    """The m defining equations l_k + p_k = f_k(p_1) l_1."""
    p1, l1 = P.coords[0], L.coords[0]
    for k in range(2, spec.m + 2):
        if L.coords[k - 1] + P.coords[k - 1] != spec.f_eval(k, p1) * l1:
            return False
    return True


def point_through(spec: FamilySpec, L: Line, p1: FieldElement) -> Point:
    """The unique neighbor of L with first coordinate p1."""
    l1 = L.coords[0]
    coords = [p1]
    for k in range(2, spec.m + 2):
        coords.append(spec.f_eval(k, p1) * l1 - L.coords[k - 1])
    return Point(tuple(coords))


def line_through(spec: FamilySpec, P: Point, l1: FieldElement) -> Line:
    """The unique neighbor of P with first coordinate l1."""
    p1 = P.coords[0]
    coords = [l1]
    for k in range(2, spec.m + 2):
        coords.append(spec.f_eval(k, p1) * l1 - P.coords[k - 1])
    return Line(tuple(coords))


class Graph:
    """One constructed graph.  Vertices are addressable either as
    Point/Line objects or as integer ids:

        id = side * q^(m+1) + sum_j index(v_(j+1)) * q^j,   point side = 0.

    Lazy graphs answer neighbor queries by solving the adjacency equations;
    materialize() additionally stores all adjacency lists for BFS work.
    """

    def __init__(self, spec: FamilySpec, vertex_budget: int = DEFAULT_VERTEX_BUDGET):
        self.spec = spec
        self.vertex_budget = vertex_budget
        self.injective_theta = spec.theta_injective
        self._adj: list[list[int]] | None = None
        self._csr = None

    # -- size ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.spec.n_vertices

    @property
    def n_edges(self) -> int:
        return self.spec.n_edges

    @property
    def half(self) -> int:
        """Vertices per side."""
        return self.spec.q ** (self.spec.m + 1)

    # -- id codec -------------------------------------------------------------

    def encode(self, v: Point | Line) -> int:
        q = self.spec.q
        acc = 0
        for c in reversed(v.coords):
            acc = acc * q + c.index
        if isinstance(v, Line):
            acc += self.half
        return acc

    def decode(self, vid: int) -> Point | Line:
        if not 0 <= vid < self.n:
            raise OutOfRange(f"vertex id {vid} outside [0, {self.n})")
        side, local = divmod(vid, self.half)
        F = self.spec.field
        coords = []
        for _ in range(self.spec.m + 1):
            coords.append(F.from_index(local % F.q))
            local //= F.q
        return Line(tuple(coords)) if side else Point(tuple(coords))

    # -- neighbors ------------------------------------------------------------

    def neighbors_of_point(self, P: Point) -> list[Line]:
        """All q neighbors, ordered by the canonical index of l_1."""
        return [line_through(self.spec, P, l1) for l1 in self.spec.field.elements()]

    def neighbors_of_line(self, L: Line) -> list[Point]:
        """All q neighbors, ordered by the canonical index of p_1."""
        return [point_through(self.spec, L, p1) for p1 in self.spec.field.elements()]

    def neighbor_ids(self, vid: int) -> list[int]:
        if self._adj is not None:
            return self._adj[vid]
        v = self.decode(vid)
        nbrs = (
            self.neighbors_of_point(v) if isinstance(v, Point) else self.neighbors_of_line(v)
        )
        return [self.encode(u) for u in nbrs]

    def is_adjacent(self, P: Point, L: Line) -> bool:
        return adjacent(self.spec, P, L)

    # -- materialization --------------------------------------------------------

    @property
    def materialized(self) -> bool:
        return self._adj is not None

    def materialize(self) -> "Graph":
        if self._adj is not None:
            return self
        if self.n > self.vertex_budget:
            raise BudgetExceeded(
                f"{self.n} vertices exceed the materialization budget {self.vertex_budget}"
            )
        spec = self.spec
        F = spec.field
        q, m, half = F.q, spec.m, self.half
        adj: list[list[int]] = [[] for _ in range(self.n)]
        elts = [F.from_index(i) for i in range(q)]
        for pid in range(half):
            local = pid
            idx = []
            for _ in range(m + 1):
                idx.append(local % q)
                local //= q
            p1 = elts[idx[0]]
            fvals = spec.f_values(p1)
            pcoords = [elts[i] for i in idx]
            row = adj[pid]
            for l1i in range(q):
                l1 = elts[l1i]
                lid = 0
                for k in range(m, 0, -1):
                    lk = fvals[k - 1] * l1 - pcoords[k]
                    lid = lid * q + lk.index
                lid = lid * q + l1i
                lid += half
                row.append(lid)
                adj[lid].append(pid)
        self._adj = adj
        return self

    @property
    def adjacency(self) -> list[list[int]]:
        self.materialize()
        return self._adj

    def csr(self):
        """Adjacency as a scipy CSR matrix with int32 entries 0/1."""
        if self._csr is None:
            import numpy as np
            from scipy import sparse

            adj = self.adjacency
            q = self.spec.q
            indptr = np.arange(0, self.n * q + 1, q, dtype=np.int64)
            indices = np.fromiter(
                (u for row in adj for u in row), dtype=np.int32, count=self.n * q
            )
            data = np.ones(self.n * q, dtype=np.int32)
            A = sparse.csr_matrix((data, indices, indptr), shape=(self.n, self.n))
            A.sort_indices()
            self._csr = A
        return self._csr

    # -- edge streaming -----------------------------------------------------------

    def edges(self):
        """All edges as (point id, line id) pairs, sorted lexicographically."""
        if self._adj is not None:
            for pid in range(self.half):
                for lid in sorted(self._adj[pid]):
                    yield pid, lid
            return
        for pid in range(self.half):
            yield from ((pid, lid) for lid in sorted(self.neighbor_ids(pid)))

    def meta_dict(self) -> dict:
        base = self.spec.to_json_dict()
        base.update(
            vertices=self.n,
            edges=self.n_edges,
            regular=self.spec.q,
            injective_theta=self.injective_theta,
        )
        return base

    def __repr__(self):
        s = self.spec
        return f"Graph({s.family} p={s.p} e={s.e} m={s.m}, {self.n} vertices)"


def build(
    spec: FamilySpec,
    mode: str = "lazy",
    max_vertices: int = DEFAULT_VERTEX_BUDGET,
) -> Graph:
    """Construct the graph for a spec; materialized mode also stores adjacency."""
    if mode not in ("lazy", "materialized"):
        raise ValueError(f"mode must be 'lazy' or 'materialized', got {mode!r}")
    g = Graph(spec, vertex_budget=max_vertices)
    if mode == "materialized":
        g.materialize()
    return g


@dataclass(frozen=True)
class CayleySet:
    """Generating set of the line-side square graph: difference tuples
    (t, t f_2(u), ..., t f_(m+1)(u)) for t nonzero, u arbitrary."""

    tuples: frozenset
    injective: bool

    @property
    def size(self) -> int:
        return len(self.tuples)


def cayley_generators(spec: FamilySpec) -> CayleySet:
    F = spec.field
    gens = set()
    for t in F.elements():
        if not t:
            continue
        for u in F.elements():
            gens.add((t,) + tuple(t * fv for fv in spec.f_values(u)))
    return CayleySet(frozenset(gens), spec.theta_injective)


def export(graph: Graph, fmt: str, sink) -> None:
    """Write the graph to a path or text file object.

    edgelist: one "u v" per line with u < v, lexicographically sorted,
    newline-terminated.  dimacs: "p edge N M" header then 1-indexed "e u v"
    lines.  json_meta: the parameter/size summary as a JSON object.
    """
    if fmt == "json":
        fmt = "json_meta"
    if fmt not in ("edgelist", "dimacs", "json_meta"):
        raise ValueError(f"unknown export format {fmt!r}")
    if fmt in ("edgelist", "dimacs") and graph.n > graph.vertex_budget:
        raise BudgetExceeded(
            f"{graph.n} vertices exceed the export budget {graph.vertex_budget}"
        )
    if isinstance(sink, (str, Path)):
        with open(sink, "w", encoding="utf-8") as fh:
            export(graph, fmt, fh)
        return
    if fmt == "edgelist":
        for u, v in graph.edges():
            sink.write(f"{u} {v}\n")
    elif fmt == "dimacs":
        sink.write(f"p edge {graph.n} {graph.n_edges}\n")
        for u, v in graph.edges():
            sink.write(f"e {u + 1} {v + 1}\n")
    else:
        json.dump(graph.meta_dict(), sink, indent=2)
        sink.write("\n")
