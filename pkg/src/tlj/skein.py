"""Skein modules of holed disks on trivalent spines, and HI moves.

A spine is a ribbon graph (counterclockwise half-edge order at every
vertex) with trivalent internal vertices, univalent boundary vertices at
marked points and possibly vertex-free circles.  A coloring gives every edge
a simple label so that each internal vertex is q-admissible; colorings form
the basis of the skein module ``C(s)``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import (
    EulerMismatch,
    InvalidDegree,
    InvalidEdge,
    LabelOutOfRange,
    NotAdmissible,
    ParseError,
)
from .fusion import q_admissible, sixj
from .linalg import identity_matrix
from .nets import NetVertex, ribbon_counts
from .scalar import cyclo_ring

__all__ = [
    "Spine",
    "load_spine",
    "read_spine",
    "spine_path",
    "library",
    "Coloring",
    "SkeinBasis",
    "enumerate_colorings",
    "HIMove",
    "apply_hi",
    "HIMatrix",
    "hi_matrix",
    "transport",
    "spine_isomorphism",
    "necklace_spine",
    "comb_spine",
    "verlinde_dimension",
    "brute_force_dimension",
    "pentagon_paths_agree",
]


def _hkey(h):
    return (isinstance(h, str), h)


def _rotate_min(hs: tuple) -> tuple:
    if not hs:
        return hs
    i = min(range(len(hs)), key=lambda t: _hkey(hs[t]))
    return hs[i:] + hs[:i]


class Spine:
    """Trivalent spine of a disk with ``holes`` holes.

    ``edges[e]`` is a pair of half-edge ids; edges are referred to by index.
    ``boundary_labels`` optionally maps boundary-attached edge indices to
    fixed labels.
    """

    def __init__(self, vertices, edges, free_loops=0, holes=None, boundary_labels=None):
        verts = []
        for v in vertices:
            if not isinstance(v, NetVertex):
                v = NetVertex(**v)
            hs = tuple(v.half_edges)
            if v.kind == "internal":
                hs = _rotate_min(hs)
            verts.append(NetVertex(v.kind, hs, v.side, v.position))
        self.vertices = verts
        self.edges = [tuple(e) for e in edges]
        self.free_loops = int(free_loops)
        self.boundary_labels = {int(k): int(v) for k, v in (boundary_labels or {}).items()}
        self._index()
        self.holes = self._euler_holes() if holes is None else int(holes)
        self._validate()

    def _index(self):
        self._vertex_of = {}
        for vi, v in enumerate(self.vertices):
            for h in v.half_edges:
                if h in self._vertex_of:
                    raise ParseError(f"half-edge {h} appears at two vertices")
                self._vertex_of[h] = vi
        self._edge_of = {}
        for ei, e in enumerate(self.edges):
            if len(e) != 2:
                raise ParseError(f"edge {ei} must join two half-edges")
            for h in e:
                if h not in self._vertex_of:
                    raise ParseError(f"edge {ei} uses unknown half-edge {h}")
                if h in self._edge_of:
                    raise ParseError(f"half-edge {h} lies on two edges")
                self._edge_of[h] = ei
        if set(self._edge_of) != set(self._vertex_of):
            raise ParseError("some half-edge is not on any edge")

    def _euler_holes(self) -> int:
        return 1 - (len(self.vertices) - len(self.edges))

    def _validate(self):
        for vi, v in enumerate(self.vertices):
            if v.kind == "internal" and len(v.half_edges) != 3:
                raise InvalidDegree(f"internal vertex {vi} has degree {len(v.half_edges)}")
            if v.kind == "boundary":
                if len(v.half_edges) != 1:
                    raise InvalidDegree(f"boundary vertex {vi} has degree {len(v.half_edges)}")
                if v.side not in ("top", "bottom") or v.position is None:
                    raise ParseError(f"boundary vertex {vi} needs a side and a position")
            if v.kind not in ("internal", "boundary"):
                raise ParseError(f"unknown vertex kind {v.kind!r}")
        if self.free_loops < 0 or self.holes < 0:
            raise ParseError("free_loops and holes must be non-negative")
        if not self.vertices:
            # a bare circle is the spine of the annulus
            if self.free_loops != 1 or self.holes != 1:
                raise EulerMismatch(
                    f"{self.free_loops} free loop(s) cannot be the spine of a "
                    f"{self.holes}-holed disk"
                )
            return
        if self.free_loops:
            raise EulerMismatch("a free loop next to a graph gives a disconnected spine")
        V, E = len(self.vertices), len(self.edges)
        if V - E != 1 - self.holes:
            raise EulerMismatch(f"V - E = {V - E}, a {self.holes}-holed disk needs {1 - self.holes}")
        Vr, Er, F, comps = ribbon_counts(self.vertices, self.edges)
        if comps != 1:
            raise EulerMismatch(f"spine has {comps} components")
        if Vr - Er + F != 2:
            raise EulerMismatch(
                f"ribbon structure has {F} faces; a planar {self.holes}-holed disk needs "
                f"{2 - Vr + Er}"
            )
        for e in self.boundary_labels:
            if e not in self.boundary_edges():
                raise ParseError(f"edge {e} carries a boundary label but is not boundary-attached")

    # -- structure ----------------------------------------------------------

    def vertex_of(self, h) -> int:
        return self._vertex_of[h]

    def edge_of(self, h) -> int:
        return self._edge_of[h]

    def boundary_edges(self) -> list[int]:
        return sorted(
            {
                self._edge_of[v.half_edges[0]]
                for v in self.vertices
                if v.kind == "boundary"
            }
        )

    def internal_edges(self) -> list[int]:
        """Edges joining two distinct internal vertices (valid HI edges)."""
        out = []
        for ei, (h1, h2) in enumerate(self.edges):
            v1, v2 = self.vertices[self._vertex_of[h1]], self.vertices[self._vertex_of[h2]]
            if v1.kind == v2.kind == "internal" and self._vertex_of[h1] != self._vertex_of[h2]:
                out.append(ei)
        return out

    def vertex_edges(self, vi: int) -> tuple:
        return tuple(self._edge_of[h] for h in self.vertices[vi].half_edges)

    # -- equality & I/O -----------------------------------------------------

    def _key(self):
        return (
            tuple((v.kind, v.half_edges, v.side, v.position) for v in self.vertices),
            tuple(self.edges),
            self.free_loops,
            self.holes,
        )

    def __eq__(self, other):
        if not isinstance(other, Spine):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def to_json(self) -> dict:
        verts = []
        for v in self.vertices:
            d = {"kind": v.kind}
            if v.kind == "boundary":
                d["side"], d["position"] = v.side, v.position
            d["edge_cyclic_order"] = list(v.half_edges)
            verts.append(d)
        out = {
            "vertices": verts,
            "edges": [list(e) for e in self.edges],
            "free_loops": self.free_loops,
            "holes": self.holes,
        }
        if self.boundary_labels:
            out["boundary_labels"] = {str(k): v for k, v in sorted(self.boundary_labels.items())}
        return out

    def __repr__(self):
        return (
            f"Spine({len(self.vertices)} vertices, {len(self.edges)} edges, "
            f"{self.free_loops} free loops, {self.holes} holes)"
        )


def load_spine(text_or_obj) -> Spine:
    """Build a :class:`Spine` from JSON text or a parsed document."""
    if isinstance(text_or_obj, (str, bytes)):
        try:
            obj = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
    else:
        obj = text_or_obj
    if not isinstance(obj, dict):
        raise ParseError("a spine document is a JSON object")
    try:
        verts = [
            NetVertex(
                kind=v["kind"],
                half_edges=tuple(v.get("edge_cyclic_order", [])),
                side=v.get("side"),
                position=v.get("position"),
            )
            for v in obj.get("vertices", [])
        ]
        return Spine(
            verts,
            obj.get("edges", []),
            obj.get("free_loops", 0),
            obj.get("holes"),
            obj.get("boundary_labels"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (EulerMismatch, InvalidDegree, ParseError)):
            raise
        raise ParseError(f"malformed spine document: {exc}") from exc


def library() -> list[str]:
    """Names of the packaged example spines."""
    root = resources.files("tlj") / "data" / "spines"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def spine_path(name_or_path: str):
    """Resolve a file path, or the bare name of a packaged spine."""
    p = Path(name_or_path)
    if p.exists():
        return p
    stem = p.name[:-5] if p.name.endswith(".json") else p.name
    cand = resources.files("tlj") / "data" / "spines" / f"{stem}.json"
    if cand.is_file():
        return cand
    raise FileNotFoundError(name_or_path)


def read_spine(name_or_path: str) -> Spine:
    return load_spine(spine_path(name_or_path).read_text())


# ---------------------------------------------------------------------------
# Colorings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    edge_labels: tuple
    loop_labels: tuple = ()

    def as_tuple(self) -> tuple:
        return self.edge_labels + self.loop_labels


@dataclass
class SkeinBasis:
    spine: Spine
    n: int
    boundary_labels: dict
    colorings: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.colorings)

    def index(self) -> dict:
        return {c: i for i, c in enumerate(self.colorings)}


def _resolve_boundary(spine: Spine, n: int, boundary_labels) -> dict:
    labels = dict(spine.boundary_labels)
    if boundary_labels is not None:
        labels = {int(k): int(v) for k, v in dict(boundary_labels).items()}
    need = set(spine.boundary_edges())
    if set(labels) != need:
        raise LabelOutOfRange(
            f"boundary labels given for edges {sorted(labels)}, expected {sorted(need)}"
        )
    for e, x in labels.items():
        if not 0 <= x <= n - 2:
            raise LabelOutOfRange(f"boundary label {x} on edge {e} is not simple at root {n}")
    return labels


def enumerate_colorings(spine: Spine, n: int, boundary_labels=None) -> SkeinBasis:
    """All q-admissible colorings, lexicographic in edge index order."""
    if n < 2:
        raise LabelOutOfRange("root parameter must be at least 2")
    fixed = _resolve_boundary(spine, n, boundary_labels)
    E = len(spine.edges)
    simple = range(n - 1)
    # vertices become checkable once their largest edge index is assigned
    ready: dict[int, list] = {}
    for vi, v in enumerate(spine.vertices):
        if v.kind == "internal":
            es = spine.vertex_edges(vi)
            ready.setdefault(max(es), []).append(es)
    labels = [0] * E
    found = []

    def rec(e):
        if e == E:
            found.append(tuple(labels))
            return
        choices = [fixed[e]] if e in fixed else simple
        for x in choices:
            labels[e] = x
            if all(q_admissible(labels[a], labels[b], labels[c], n) for a, b, c in ready.get(e, ())):
                rec(e + 1)

    rec(0)
    loops = list(itertools.product(simple, repeat=spine.free_loops))
    cols = [Coloring(c, l) for c in found for l in loops]
    return SkeinBasis(spine, n, fixed, cols)


def brute_force_dimension(spine: Spine, n: int, boundary_labels=None) -> int:
    """Count colorings by testing every labelling; independent of the pruned search."""
    fixed = _resolve_boundary(spine, n, boundary_labels)
    free = [e for e in range(len(spine.edges)) if e not in fixed]
    triples = [spine.vertex_edges(vi) for vi, v in enumerate(spine.vertices) if v.kind == "internal"]
    count = 0
    for combo in itertools.product(range(n - 1), repeat=len(free)):
        lab = dict(fixed)
        lab.update(zip(free, combo))
        if all(q_admissible(lab[a], lab[b], lab[c], n) for a, b, c in triples):
            count += 1
    return count * (n - 1) ** spine.free_loops


# ---------------------------------------------------------------------------
# HI moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HIMove:
    """Contract ``edge`` and re-expand it the other way.

    With ``v1 = (e, x1, x2)`` and ``v2 = (e, y1, y2)`` counterclockwise, the
    new vertices carry ``(x2, y1)`` and ``(y2, x1)``; ``orientation`` picks
    which of the two old vertices keeps which pair.  ``(e, o)`` is undone by
    ``(e, 1 - o)``.
    """

    edge: int
    orientation: int = 0

    def inverse(self) -> "HIMove":
        return HIMove(self.edge, 1 - self.orientation)


def _hi_local(spine: Spine, edge: int):
    if not 0 <= edge < len(spine.edges):
        raise InvalidEdge(f"no edge {edge}")
    h1, h2 = spine.edges[edge]
    v1, v2 = spine.vertex_of(h1), spine.vertex_of(h2)
    if v1 == v2:
        raise InvalidEdge(f"edge {edge} is a loop at vertex {v1}")
    if spine.vertices[v1].kind != "internal" or spine.vertices[v2].kind != "internal":
        raise InvalidEdge(f"edge {edge} touches the boundary")

    def legs(vi, h):
        hs = spine.vertices[vi].half_edges
        k = hs.index(h)
        return hs[(k + 1) % 3], hs[(k + 2) % 3]

    x1, x2 = legs(v1, h1)
    y1, y2 = legs(v2, h2)
    return h1, h2, v1, v2, x1, x2, y1, y2


def apply_hi(spine: Spine, move: HIMove) -> Spine:
    h1, h2, v1, v2, x1, x2, y1, y2 = _hi_local(spine, move.edge)
    if move.orientation not in (0, 1):
        raise InvalidEdge("orientation must be 0 or 1")
    if move.orientation == 0:
        new1, new2 = (h1, x2, y1), (h2, y2, x1)
    else:
        new1, new2 = (h1, y2, x1), (h2, x2, y1)
    verts = list(spine.vertices)
    verts[v1] = NetVertex("internal", new1)
    verts[v2] = NetVertex("internal", new2)
    return Spine(verts, spine.edges, spine.free_loops, spine.holes, spine.boundary_labels)


@dataclass
class HIMatrix:
    source: SkeinBasis
    target: SkeinBasis
    entries: list  # entries[t][s]

    def rows(self) -> list:
        return self.entries


def hi_matrix(spine: Spine, move: HIMove, n: int, boundary_labels=None) -> HIMatrix:
    """Change of basis ``C(s) -> C(s')`` for one HI move.

    A source coloring with label ``j`` on the moved edge goes to
    ``sum_i sixj(a, b, i, c, d, j)`` times the target coloring with ``i``
    there, where ``a, b, c, d`` are the labels on ``x2, x1, y2, y1``.
    """
    h1, h2, v1, v2, x1, x2, y1, y2 = _hi_local(spine, move.edge)
    new = apply_hi(spine, move)
    src = enumerate_colorings(spine, n, boundary_labels)
    tgt = enumerate_colorings(new, n, src.boundary_labels)
    ring = cyclo_ring(n)
    e = move.edge
    ea, eb, ec, ed = (spine.edge_of(h) for h in (x2, x1, y2, y1))
    by_rest: dict = {}
    for ti, col in enumerate(tgt.colorings):
        rest = col.edge_labels[:e] + col.edge_labels[e + 1 :], col.loop_labels
        by_rest.setdefault(rest, []).append(ti)
    entries = [[ring.zero] * src.dimension for _ in range(tgt.dimension)]
    for si, col in enumerate(src.colorings):
        lab = col.edge_labels
        rest = lab[:e] + lab[e + 1 :], col.loop_labels
        a, b, c, d, j = lab[ea], lab[eb], lab[ec], lab[ed], lab[e]
        for ti in by_rest.get(rest, ()):
            i = tgt.colorings[ti].edge_labels[e]
            entries[ti][si] = sixj(a, b, i, c, d, j, n)
    return HIMatrix(src, tgt, entries)


def _sparse_matmul(A, B, zero):
    # HI matrices are block diagonal in the untouched labels; skip the zeros
    width = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [zero] * width
        for t, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(B[t]):
                if y:
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def transport(spine: Spine, moves, n: int, boundary_labels=None):
    """Apply moves in order; return the final spine and the composite matrix."""
    basis = enumerate_colorings(spine, n, boundary_labels)
    ring = cyclo_ring(n)
    mat = identity_matrix(basis.dimension, ring.zero, ring.one)
    current = spine
    labels = basis.boundary_labels
    for mv in moves:
        if not isinstance(mv, HIMove):
            mv = HIMove(int(mv["edge"]), int(mv.get("orient", mv.get("orientation", 0))))
        step = hi_matrix(current, mv, n, labels)
        mat = _sparse_matmul(step.entries, mat, ring.zero)
        current = step.target.spine
    return current, mat


# ---------------------------------------------------------------------------
# Isomorphism of spines
# ---------------------------------------------------------------------------


def spine_isomorphism(s1: Spine, s2: Spine):
    """An orientation-preserving ribbon isomorphism fixing boundary points.

    Returns a list mapping edge indices of ``s1`` to those of ``s2`` together
    with a flag telling whether each edge keeps its half-edge order, or
    ``None`` when the spines differ.
    """
    if (len(s1.vertices), len(s1.edges), s1.free_loops) != (
        len(s2.vertices),
        len(s2.edges),
        s2.free_loops,
    ):
        return None
    if not s1.edges:
        return [] if s1.free_loops == s2.free_loops else None

    def nxt(s, h):
        hs = s.vertices[s.vertex_of(h)].half_edges
        return hs[(hs.index(h) + 1) % len(hs)]

    def mate(s, h):
        a, b = s.edges[s.edge_of(h)]
        return b if h == a else a

    def bkey(s, h):
        v = s.vertices[s.vertex_of(h)]
        return (v.side, v.position) if v.kind == "boundary" else None

    darts1 = [h for e in s1.edges for h in e]
    start = min(darts1, key=lambda h: (bkey(s1, h) is None, bkey(s1, h) or (), _hkey(h)))
    for cand in (h for e in s2.edges for h in e):
        if bkey(s1, start) != bkey(s2, cand):
            continue
        m = {start: cand}
        stack = [start]
        ok = True
        while stack and ok:
            h = stack.pop()
            for f1, f2 in ((nxt(s1, h), nxt(s2, m[h])), (mate(s1, h), mate(s2, m[h]))):
                if f1 in m:
                    if m[f1] != f2:
                        ok = False
                        break
                else:
                    if bkey(s1, f1) != bkey(s2, f2):
                        ok = False
                        break
                    m[f1] = f2
                    stack.append(f1)
        if ok and len(m) == len(darts1) and len(set(m.values())) == len(m):
            return [s2.edge_of(m[a]) for a, _ in s1.edges]
    return None


def _align(matrix_basis: SkeinBasis, other: SkeinBasis, edge_map: list):
    """Permutation taking ``other``'s coloring order to ``matrix_basis``'s."""
    idx = other.index()
    perm = []
    for col in matrix_basis.colorings:
        lab = [0] * len(edge_map)
        for e1, e2 in enumerate(edge_map):
            lab[e2] = col.edge_labels[e1]
        perm.append(idx[Coloring(tuple(lab), col.loop_labels)])
    return perm


# ---------------------------------------------------------------------------
# Named spines
# ---------------------------------------------------------------------------


def necklace_spine(beads: int) -> Spine:
    """A cycle of ``beads`` vertices, each carrying a stem to a lollipop loop.

    It is a spine of the ``(beads + 1)``-holed disk; zero beads gives the
    annulus circle.
    """
    if beads == 0:
        return Spine([], [], free_loops=1, holes=1)
    verts, edges = [], []
    h = itertools.count()
    cyc = [(next(h), next(h)) for _ in range(beads)]  # edge t joins bead t -> t+1
    stems = [(next(h), next(h)) for _ in range(beads)]
    loops = [(next(h), next(h)) for _ in range(beads)]
    for t in range(beads):
        incoming = cyc[t - 1][1]
        outgoing = cyc[t][0]
        verts.append(NetVertex("internal", (outgoing, stems[t][0], incoming)))
    for t in range(beads):
        verts.append(NetVertex("internal", (stems[t][1], loops[t][0], loops[t][1])))
    edges = cyc + stems + loops
    return Spine(verts, edges, holes=beads + 1)


def comb_spine(labels=None) -> Spine:
    """Left comb tree: bottom points 0..3 merge left to right into one top point."""
    # internal vertices u=(e1, B0, B1), w=(e2, e1, B2), z=(T, e2, B3)
    verts = [
        NetVertex("boundary", (0,), "bottom", 0),
        NetVertex("boundary", (1,), "bottom", 1),
        NetVertex("boundary", (2,), "bottom", 2),
        NetVertex("boundary", (3,), "bottom", 3),
        NetVertex("boundary", (4,), "top", 0),
        NetVertex("internal", (10, 5, 6)),
        NetVertex("internal", (12, 11, 7)),
        NetVertex("internal", (9, 13, 8)),
    ]
    edges = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (10, 11), (12, 13)]
    bl = None
    if labels is not None:
        bl = dict(zip(range(5), labels))
    return Spine(verts, edges, holes=0, boundary_labels=bl)


COMB_E1, COMB_E2 = 5, 6


def verlinde_dimension(holes: int, n: int) -> int:
    """``tr(T^(holes-1))`` with ``T[c][c'] = sum_s N(c,c',s) w(s)``.

    ``N`` counts q-admissible triples and ``w(s)`` the labels ``m`` with
    ``(m, m, s)`` q-admissible; this is the count of colorings of
    :func:`necklace_spine` computed by transfer matrix.
    """
    if holes < 1:
        raise ValueError("need at least one hole")
    S = range(n - 1)
    w = {s: sum(1 for m in S if q_admissible(m, m, s, n)) for s in S}
    T = [[sum(w[s] for s in S if q_admissible(c, d, s, n)) for d in S] for c in S]
    P = [[int(i == j) for j in S] for i in S]
    for _ in range(holes - 1):
        P = [[sum(P[i][k] * T[k][j] for k in S) for j in S] for i in S]
    return sum(P[i][i] for i in S)


def pentagon_paths_agree(labels: tuple, n: int) -> bool:
    """Compare the two HI paths around the pentagon of five-leaf trees.

    Short path: moves on ``e2`` then ``e1``.  Long path: ``e1, e2, e1``.
    Both end at the right comb; the final bases are matched through a ribbon
    isomorphism before the matrices are compared.
    """
    spine = comb_spine(labels)
    try:
        base = enumerate_colorings(spine, n)
    except LabelOutOfRange:
        raise NotAdmissible(f"labels {labels} are not simple at root {n}")
    short_end, short = transport(spine, [HIMove(COMB_E2), HIMove(COMB_E1)], n)
    long_end, long_ = transport(spine, [HIMove(COMB_E1), HIMove(COMB_E2), HIMove(COMB_E1)], n)
    edge_map = spine_isomorphism(long_end, short_end)
    if edge_map is None:
        return False
    b_short = enumerate_colorings(short_end, n, base.boundary_labels)
    b_long = enumerate_colorings(long_end, n, base.boundary_labels)
    if b_short.dimension != b_long.dimension:
        return False
    perm = _align(b_long, b_short, edge_map)
    for r_long, r_short in enumerate(perm):
        if long_[r_long] != short[r_short]:
            return False
    return True
