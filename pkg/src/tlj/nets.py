"""Trivalent nets: JW-decorated planar graphs and their evaluation.

An edge labelled ``l`` stands for ``l`` parallel strands through ``p_l``.
At an internal vertex with legs ``e0, e1, e2`` in counterclockwise order,
``(l0 + l1 - l2) / 2`` arcs join ``e0`` to ``e1`` and so on cyclically.

Strands of a half-edge are numbered ``0..l-1`` counterclockwise around its
vertex.  Along an edge strand ``t`` at one end meets strand ``l-1-t`` at the
other.  A boundary vertex on the top edge exposes its strands left to right,
one on the bottom edge right to left.

:func:`compile_net` contracts such a net directly from this description; it
does not go through :func:`vertex_morphism`, so the two give independent
routes to the same morphisms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .diagram import (
    Morphism,
    _is_noncrossing,
    bar,
    compose,
    identity,
    scalar_of,
    tensor,
    trace,
)
from .errors import (
    InvalidDegree,
    NonPlanarEmbedding,
    NotAdmissible,
    ParseError,
    ShapeMismatch,
)
from .jones_wenzl import jw
from .scalar import qfact, qint, ring_for

__all__ = [
    "admissible",
    "vertex_params",
    "vertex_morphism",
    "split_morphism",
    "NetVertex",
    "TrivalentNet",
    "load_net",
    "compile_net",
    "evaluate_net",
    "net_merge",
    "net_split",
    "net_strand",
    "net_compose",
    "net_tensor",
    "net_bar",
    "net_trace",
    "theta_formula",
    "net_value_mnl",
    "theta_net",
    "theta_by_trace",
    "fusion_coefficients",
    "tree",
    "cotree",
    "tensor_identity_check",
    "phi_psi",
    "phi_psi_products",
    "net_identity",
    "bubble",
    "triangle_net",
    "triangle_checks",
    "TriangleReport",
    "hom_dimension",
    "ribbon_counts",
]


def admissible(a: int, b: int, c: int) -> bool:
    """Even sum and all three triangle inequalities."""
    if min(a, b, c) < 0:
        return False
    return (a + b + c) % 2 == 0 and a + b >= c and b + c >= a and a + c >= b


def _require(a, b, c):
    if not admissible(a, b, c):
        raise NotAdmissible(f"({a},{b},{c}) is not admissible")


def vertex_params(a: int, b: int, c: int) -> tuple[int, int, int]:
    """``(i, j, k)``: strands a->c, b->c and a<->b at the vertex."""
    _require(a, b, c)
    return (a + c - b) // 2, (b + c - a) // 2, (a + b - c) // 2


def _vertex_skeleton(a: int, b: int, c: int, ring) -> Morphism:
    i, j, k = vertex_params(a, b, c)
    N = a + b + c
    p = [0] * N
    for t in range(i):
        p[t], p[a + b + t] = a + b + t, t
    for t in range(k):
        x, y = a - 1 - t, a + t
        p[x], p[y] = y, x
    for t in range(j):
        x, y = a + k + t, a + b + i + t
        p[x], p[y] = y, x
    return Morphism._make(a + b, c, {tuple(p): ring.one}, ring)


@lru_cache(maxsize=None)
def vertex_morphism(a: int, b: int, c: int, root: int | None = None) -> Morphism:
    """``g = p_c f (p_a x p_b)``: the trivalent vertex ``a + b -> c``.

    ``f`` sends the first ``i`` strands of ``a`` up, caps the last ``k`` of
    ``a`` onto the first ``k`` of ``b`` and sends the other ``j`` strands of
    ``b`` up.  The coefficient of ``f`` in ``g`` is 1.
    """
    ring = ring_for(root)
    f = _vertex_skeleton(a, b, c, ring)
    return compose(jw(c, root), compose(f, tensor(jw(a, root), jw(b, root))))


def split_morphism(c: int, a: int, b: int, root: int | None = None) -> Morphism:
    """``c -> a + b``, the mirror image of :func:`vertex_morphism`."""
    return bar(vertex_morphism(a, b, c, root))


# ---------------------------------------------------------------------------
# Net data model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NetVertex:
    kind: str  # "internal" or "boundary"
    half_edges: tuple  # counterclockwise
    side: str | None = None  # "top" / "bottom" for boundary vertices
    position: int | None = None


class TrivalentNet:
    """A planar uni-trivalent graph with labelled edges.

    ``edges[e] = (h, h')`` joins two half-edges; ``labels[e]`` is its label.
    ``loops`` holds the labels of vertex-free circles.
    """

    def __init__(self, vertices, edges, labels, loops=()):
        self.vertices = [v if isinstance(v, NetVertex) else NetVertex(**v) for v in vertices]
        self.edges = [tuple(e) for e in edges]
        self.labels = [int(x) for x in labels]
        self.loops = [int(x) for x in loops]
        self._validate()

    def _validate(self):
        if len(self.edges) != len(self.labels):
            raise ParseError("every edge needs exactly one label")
        if any(x < 0 for x in self.labels + self.loops):
            raise ParseError("labels must be non-negative")
        seen = {}
        for vi, v in enumerate(self.vertices):
            if v.kind == "internal":
                if len(v.half_edges) != 3:
                    raise InvalidDegree(f"internal vertex {vi} has degree {len(v.half_edges)}")
            elif v.kind == "boundary":
                if len(v.half_edges) != 1:
                    raise InvalidDegree(f"boundary vertex {vi} has degree {len(v.half_edges)}")
                if v.side not in ("top", "bottom"):
                    raise ParseError(f"boundary vertex {vi} needs side 'top' or 'bottom'")
                if v.position is None:
                    raise ParseError(f"boundary vertex {vi} needs a position")
            else:
                raise ParseError(f"unknown vertex kind {v.kind!r}")
            for h in v.half_edges:
                if h in seen:
                    raise ParseError(f"half-edge {h} used twice")
                seen[h] = vi
        used = set()
        for e in self.edges:
            if len(e) != 2:
                raise ParseError(f"edge {e} must join two half-edges")
            for h in e:
                if h not in seen:
                    raise ParseError(f"edge uses unknown half-edge {h}")
                if h in used:
                    raise ParseError(f"half-edge {h} in two edges")
                used.add(h)
        if used != set(seen):
            raise ParseError("some half-edge is not on any edge")
        for side in ("top", "bottom"):
            pos = [v.position for v in self.vertices if v.kind == "boundary" and v.side == side]
            if len(set(pos)) != len(pos):
                raise ParseError(f"repeated position on the {side} edge")
        self._vertex_of = seen
        self._edge_of = {}
        for ei, (h1, h2) in enumerate(self.edges):
            self._edge_of[h1] = ei
            self._edge_of[h2] = ei

    # -- helpers ------------------------------------------------------------

    def label_of(self, h) -> int:
        return self.labels[self._edge_of[h]]

    def other(self, h):
        h1, h2 = self.edges[self._edge_of[h]]
        return h2 if h == h1 else h1

    def boundary(self, side: str) -> list[int]:
        """Vertex indices on one side, left to right."""
        vs = [i for i, v in enumerate(self.vertices) if v.kind == "boundary" and v.side == side]
        return sorted(vs, key=lambda i: self.vertices[i].position)

    def source(self) -> int:
        return sum(self.label_of(self.vertices[i].half_edges[0]) for i in self.boundary("bottom"))

    def target(self) -> int:
        return sum(self.label_of(self.vertices[i].half_edges[0]) for i in self.boundary("top"))

    def vertex_labels(self, vi: int) -> tuple:
        return tuple(self.label_of(h) for h in self.vertices[vi].half_edges)

    def check_admissible(self):
        for vi, v in enumerate(self.vertices):
            if v.kind == "internal":
                a, b, c = self.vertex_labels(vi)
                if not admissible(a, b, c):
                    raise NotAdmissible(f"vertex {vi} carries ({a},{b},{c})")

    def check_planar(self):
        """Euler's formula on the sphere, with the boundary rim as one extra vertex."""
        V, E, F, comps = ribbon_counts(self.vertices, self.edges)
        if V - E + F != 2 * comps:
            raise NonPlanarEmbedding(
                f"V - E + F = {V - E + F} but {comps} planar component(s) need {2 * comps}"
            )

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        verts = []
        for v in self.vertices:
            d = {"kind": v.kind, "edge_cyclic_order": list(v.half_edges)}
            if v.kind == "boundary":
                d["side"], d["position"] = v.side, v.position
            verts.append(d)
        out = {"vertices": verts, "edges": [list(e) for e in self.edges], "labels": self.labels}
        if self.loops:
            out["loop_labels"] = self.loops
        return out

    def __repr__(self):
        return (
            f"TrivalentNet({len(self.vertices)} vertices, {len(self.edges)} edges, "
            f"{len(self.loops)} loops)"
        )


def ribbon_counts(vertices, edges) -> tuple[int, int, int, int]:
    """``(V, E, F, components)`` of a ribbon graph.

    Boundary vertices are tied to one extra rim vertex whose rotation runs
    along the rectangle, so a correctly drawn graph lands on the sphere.
    """
    nxt = {}
    alpha = {}
    for h1, h2 in edges:
        alpha[h1], alpha[h2] = h2, h1
    for v in vertices:
        hs = list(v.half_edges)
        if v.kind == "boundary":
            r = ("rim", v.side, v.position)
            rim_end = ("at", v.side, v.position)
            alpha[r], alpha[rim_end] = rim_end, r
            hs.append(rim_end)
        for x, y in zip(hs, hs[1:] + hs[:1]):
            nxt[x] = y
    bottoms = sorted(
        (v for v in vertices if v.kind == "boundary" and v.side == "bottom"),
        key=lambda v: v.position,
    )
    tops = sorted(
        (v for v in vertices if v.kind == "boundary" and v.side == "top"),
        key=lambda v: v.position,
    )
    # counterclockwise around the outside point = clockwise along the rectangle
    ring = [("rim", v.side, v.position) for v in reversed(bottoms)]
    ring += [("rim", v.side, v.position) for v in tops]
    for x, y in zip(ring, ring[1:] + ring[:1]):
        nxt[x] = y
    V = len(vertices) + (1 if ring else 0)
    E = len(alpha) // 2
    faces = 0
    done = set()
    for h in alpha:
        if h in done:
            continue
        faces += 1
        x = h
        while x not in done:
            done.add(x)
            x = nxt[alpha[x]]

    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner = {}
    for vi, v in enumerate(vertices):
        for h in v.half_edges:
            owner[h] = vi
        find(vi)
        if v.kind == "boundary":
            parent[find(vi)] = find("rim")
    for h1, h2 in edges:
        parent[find(owner[h1])] = find(owner[h2])
    comps = len({find(x) for x in list(parent)})
    return V, E, faces, comps


def load_net(text_or_obj) -> TrivalentNet:
    """Read a net from JSON text or an already-parsed dict."""
    if isinstance(text_or_obj, str):
        try:
            obj = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
    else:
        obj = text_or_obj
    try:
        verts = [
            NetVertex(
                kind=v["kind"],
                half_edges=tuple(v["edge_cyclic_order"]),
                side=v.get("side"),
                position=v.get("position"),
            )
            for v in obj["vertices"]
        ]
        edges = obj["edges"]
        labels = obj.get("labels", [] if not edges else None)
        if labels is None:
            raise ParseError("a net needs 'labels', one per edge")
        if isinstance(labels, dict):
            labels = [labels[str(i)] for i in range(len(edges))]
        loops = obj.get("loop_labels", [])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed net document: {exc}") from exc
    return TrivalentNet(verts, edges, labels, loops)


# ---------------------------------------------------------------------------
# Direct contraction
# ---------------------------------------------------------------------------


def _glue_box(M: tuple, term: tuple, T: list, pos: dict):
    """Glue one JW term onto the current matching.

    ``T[x]`` is the global end attached to box point ``x``; ``term`` is the
    box diagram's partner tuple.  Returns (new matching, closed loops).
    """
    out = list(M)
    visited = set()
    for g in T:
        y = M[g]
        if y in pos or y in visited:
            continue
        # y lies outside the box and hangs on g; follow until we leave again
        x = g
        while True:
            visited.add(x)
            x2 = T[term[pos[x]]]
            visited.add(x2)
            z = M[x2]
            if z not in pos:
                break
            x = z
        out[y], out[z] = z, y
        visited.add(y)
        visited.add(z)
    loops = 0
    for g in T:
        if g in visited:
            continue
        loops += 1
        x = g
        while x not in visited:
            visited.add(x)
            x2 = T[term[pos[x]]]
            visited.add(x2)
            x = M[x2]
    for g in T:
        out[g] = -1
    return tuple(out), loops


def compile_net(net: TrivalentNet, root: int | None = None) -> Morphism:
    """Contract a net into a Temperley-Lieb morphism ``source -> target``.

    Closed nets give a ``0 -> 0`` morphism; see :func:`evaluate_net`.
    """
    net.check_admissible()
    net.check_planar()
    ring = ring_for(root)

    # global numbering: boundary points first, in output order
    ends = {}
    m = net.source()
    bpoints = {}
    idx = 0
    for vi in net.boundary("bottom"):
        h = net.vertices[vi].half_edges[0]
        lab = net.label_of(h)
        for t in range(lab):
            bpoints[(h, t)] = idx + (lab - 1 - t)
        idx += lab
    idx = m
    for vi in net.boundary("top"):
        h = net.vertices[vi].half_edges[0]
        lab = net.label_of(h)
        for t in range(lab):
            bpoints[(h, t)] = idx + t
        idx += lab
    nid = idx
    P = idx
    for e, (h1, h2) in enumerate(net.edges):
        for h in (h1, h2):
            for t in range(net.labels[e]):
                ends[(h, t)] = nid
                nid += 1

    M = [-1] * nid
    for key, pt in bpoints.items():
        g = ends[key]
        M[pt], M[g] = g, pt
    for v in net.vertices:
        if v.kind != "internal":
            continue
        hs = v.half_edges
        labs = [net.label_of(h) for h in hs]
        for r in range(3):
            h, h_next = hs[r], hs[(r + 1) % 3]
            l0, l1, l2 = labs[r], labs[(r + 1) % 3], labs[(r + 2) % 3]
            arcs = (l0 + l1 - l2) // 2
            for s in range(arcs):
                x = ends[(h, l0 - 1 - s)]
                y = ends[(h_next, s)]
                M[x], M[y] = y, x

    # states carry lifted polynomials sharing one shift/denominator context
    one_w, ctx = ring.lift([ring.one])
    state = {tuple(M): one_w[0]}
    for e, (hu, hv) in enumerate(net.edges):
        lab = net.labels[e]
        if lab == 0:
            continue
        T = [ends[(hu, i)] for i in range(lab)] + [ends[(hv, lab - 1 - i)] for i in range(lab)]
        pos = {g: x for x, g in enumerate(T)}
        box_keys, box_coeffs = zip(*jw(lab, root)._terms.items())
        box_w, box_ctx = ring.lift(box_coeffs)
        box = list(zip(box_keys, box_w))
        weights = ring.loop_weights(lab)
        new_state: dict = {}
        for Mk, c in state.items():
            for term, bw in box:
                M2, ell = _glue_box(Mk, term, T, pos)
                v = c * bw * weights[ell]
                if M2 in new_state:
                    new_state[M2] += v
                else:
                    new_state[M2] = v
        ctx = ring.ctx_mul(ctx, box_ctx, lab)
        state = {}
        for k, v in new_state.items():
            v = ring.trim(v)
            if not v.is_zero():
                state[k] = v

    n_top = net.target()
    merged: dict = {}
    for Mk, w in state.items():
        key = Mk[:P]
        if not _is_noncrossing(key, m, n_top):
            raise NonPlanarEmbedding("contraction produced crossing strands")
        merged[key] = merged[key] + w if key in merged else w
    out = {}
    for key, w in merged.items():
        c = ring.finish(w, 0, ctx, ring.ctx_one)
        if c:
            out[key] = c
    result = Morphism._make(m, n_top, out, ring)
    for lab in net.loops:
        result = result.scale(trace(jw(lab, root)))
    return result


def evaluate_net(net: TrivalentNet, root: int | None = None):
    """Scalar value of a closed net."""
    mor = compile_net(net, root)
    if mor.source or mor.target:
        raise ShapeMismatch("net has boundary points; use compile_net")
    return scalar_of(mor)


# ---------------------------------------------------------------------------
# Building nets by planar composition
# ---------------------------------------------------------------------------


def _fresh(net: TrivalentNet, shift: int):
    def rn(h):
        return h + shift

    verts = [
        NetVertex(v.kind, tuple(rn(h) for h in v.half_edges), v.side, v.position)
        for v in net.vertices
    ]
    edges = [(rn(a), rn(b)) for a, b in net.edges]
    return verts, edges


def _max_half(net: TrivalentNet) -> int:
    hs = [h for e in net.edges for h in e]
    return max(hs) + 1 if hs else 0


def net_strand(a: int) -> TrivalentNet:
    """A single edge labelled ``a`` from bottom to top."""
    return TrivalentNet(
        [NetVertex("boundary", (0,), "bottom", 0), NetVertex("boundary", (1,), "top", 0)],
        [(0, 1)],
        [a],
    )


def net_merge(a: int, b: int, c: int) -> TrivalentNet:
    """Bottom ``a``, ``b`` (left to right) meet at a vertex; ``c`` leaves at the top."""
    _require(a, b, c)
    return TrivalentNet(
        [
            NetVertex("boundary", (0,), "bottom", 0),
            NetVertex("boundary", (1,), "bottom", 1),
            NetVertex("boundary", (2,), "top", 0),
            NetVertex("internal", (5, 3, 4)),
        ],
        [(0, 3), (1, 4), (2, 5)],
        [a, b, c],
    )


def net_split(c: int, a: int, b: int) -> TrivalentNet:
    """Mirror image of :func:`net_merge`."""
    return net_bar(net_merge(a, b, c))


def net_bar(net: TrivalentNet) -> TrivalentNet:
    """Reflect top to bottom: sides swap and every rotation reverses."""
    flip = {"top": "bottom", "bottom": "top"}
    verts = []
    for v in net.vertices:
        if v.kind == "boundary":
            verts.append(NetVertex("boundary", v.half_edges, flip[v.side], v.position))
        else:
            verts.append(NetVertex("internal", tuple(reversed(v.half_edges))))
    return TrivalentNet(verts, net.edges, net.labels, net.loops)


def _boundary_labels(net: TrivalentNet, side: str) -> list[int]:
    return [net.label_of(net.vertices[i].half_edges[0]) for i in net.boundary(side)]


def _splice(verts, edges, labels, loops, pairs):
    """Remove glued pairs of boundary vertices, joining their edges."""
    alpha = {}
    lab = {}
    for (h1, h2), x in zip(edges, labels):
        alpha[h1], alpha[h2] = h2, h1
        lab[h1] = lab[h2] = x
    dead = set()
    loops = list(loops)
    for vx, vy in pairs:
        hx = verts[vx].half_edges[0]
        hy = verts[vy].half_edges[0]
        dead.update((vx, vy))
        ux, uy = alpha.pop(hx), alpha.pop(hy)
        if ux == hy:
            loops.append(lab[hx])
            continue
        alpha[ux], alpha[uy] = uy, ux
    new_edges, new_labels, done = [], [], set()
    for h, g in alpha.items():
        if h in done:
            continue
        done.update((h, g))
        new_edges.append((h, g))
        new_labels.append(lab[h])
    new_verts = [v for i, v in enumerate(verts) if i not in dead]
    return TrivalentNet(new_verts, new_edges, new_labels, loops)


def net_compose(g: TrivalentNet, f: TrivalentNet) -> TrivalentNet:
    """Stack ``g`` on top of ``f``, joining ``f``'s top to ``g``'s bottom."""
    if _boundary_labels(f, "top") != _boundary_labels(g, "bottom"):
        raise ShapeMismatch(
            f"top labels {_boundary_labels(f, 'top')} do not meet "
            f"bottom labels {_boundary_labels(g, 'bottom')}"
        )
    fv, fe = _fresh(f, 0)
    gv, ge = _fresh(g, _max_half(f))
    off = len(fv)
    pairs = list(zip(f.boundary("top"), [off + i for i in g.boundary("bottom")]))
    return _splice(fv + gv, fe + ge, f.labels + g.labels, f.loops + g.loops, pairs)


def net_tensor(f: TrivalentNet, g: TrivalentNet) -> TrivalentNet:
    """Place ``f`` to the left of ``g``."""
    fv, fe = _fresh(f, 0)
    gv, ge = _fresh(g, _max_half(f))
    width = {
        s: max([v.position for v in f.vertices if v.kind == "boundary" and v.side == s], default=-1)
        + 1
        for s in ("top", "bottom")
    }
    gv = [
        NetVertex(v.kind, v.half_edges, v.side, v.position + width[v.side])
        if v.kind == "boundary"
        else v
        for v in gv
    ]
    return TrivalentNet(fv + gv, fe + ge, f.labels + g.labels, f.loops + g.loops)


def net_trace(f: TrivalentNet) -> TrivalentNet:
    """Close every top point to the matching bottom point around the right."""
    if _boundary_labels(f, "top") != _boundary_labels(f, "bottom"):
        raise ShapeMismatch("trace needs matching top and bottom labels")
    pairs = list(zip(f.boundary("top"), f.boundary("bottom")))
    return _splice(list(f.vertices), list(f.edges), f.labels, f.loops, pairs)


def net_identity(labels) -> TrivalentNet:
    out = None
    for a in labels:
        s = net_strand(a)
        out = s if out is None else net_tensor(out, s)
    if out is None:
        return TrivalentNet([], [], [])
    return out


# ---------------------------------------------------------------------------
# Theta nets
# ---------------------------------------------------------------------------


def net_value_mnl(m: int, n: int, l: int):
    """``[m]![n]![l]![m+n+l+1]! / ([m+n]![n+l]![m+l]!)``."""
    if min(m, n, l) < 0:
        raise NotAdmissible("theta parameters must be non-negative")
    return (
        qfact(m) * qfact(n) * qfact(l) * qfact(m + n + l + 1)
        / (qfact(m + n) * qfact(n + l) * qfact(m + l))
    )


@lru_cache(maxsize=None)
def theta_formula(a: int, b: int, c: int):
    """Value of the theta net with edges ``a, b, c``."""
    _require(a, b, c)
    m, n, l = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
    return net_value_mnl(m, n, l)


def theta_net(a: int, b: int, c: int) -> TrivalentNet:
    """Closed theta graph: the trace of a merge stacked on a split."""
    return net_trace(net_compose(net_merge(a, b, c), net_split(c, a, b)))


def theta_by_trace(a: int, b: int, c: int, root: int | None = None):
    """``tr(g_{a,b,c} o bar(g_{a,b,c}))`` computed with the diagram engine."""
    return trace(compose(vertex_morphism(a, b, c, root), split_morphism(c, a, b, root)))


# ---------------------------------------------------------------------------
# Tensor product identity
# ---------------------------------------------------------------------------


def fusion_coefficients(a: int, b: int) -> list:
    """``(k, [k+1]/theta(a,b,k))`` for ``k = |a-b|, |a-b|+2, ..., a+b``."""
    if a < 0 or b < 0:
        raise NotAdmissible("labels must be non-negative")
    return [(k, qint(k + 1) / theta_formula(a, b, k)) for k in range(abs(a - b), a + b + 1, 2)]


def tree(a: int, b: int, k: int, root: int | None = None) -> Morphism:
    """``k -> a + b``."""
    return split_morphism(k, a, b, root)


def cotree(a: int, b: int, k: int, root: int | None = None) -> Morphism:
    """``a + b -> k``."""
    return vertex_morphism(a, b, k, root)


def tensor_identity_check(a: int, b: int) -> bool:
    """``sum_k lambda_k tree_k cotree_k == p_a x p_b`` in the Catalan basis."""
    lhs = Morphism.zero(a + b, a + b)
    for k, lam in fusion_coefficients(a, b):
        lhs = lhs + compose(tree(a, b, k), cotree(a, b, k)).scale(lam)
    return lhs == tensor(jw(a), jw(b))


def phi_psi(a: int, b: int, root: int | None = None):
    """Column ``phi`` of vertices and row ``psi`` of weighted splits.

    Returns ``(ks, phi, psi)`` with ``phi[r]: a+b -> ks[r]`` and
    ``psi[r]: ks[r] -> a+b``.
    """
    ks, phi, psi = [], [], []
    for k, lam in fusion_coefficients(a, b):
        if root is not None:
            from .fusion import q_admissible

            if not q_admissible(a, b, k, root):
                continue
            lam = ring_for(root).coerce(lam)
        ks.append(k)
        phi.append(cotree(a, b, k, root))
        psi.append(tree(a, b, k, root).scale(lam))
    return ks, phi, psi


def phi_psi_products(a: int, b: int, root: int | None = None):
    """``(phi psi, psi phi)`` as a matrix of morphisms and a single morphism."""
    ks, phi, psi = phi_psi(a, b, root)
    ring = ring_for(root)
    square = [[compose(phi[r], psi[s]) for s in range(len(ks))] for r in range(len(ks))]
    total = Morphism.zero(a + b, a + b, ring)
    for r in range(len(ks)):
        total = total + compose(psi[r], phi[r])
    return ks, square, total


# ---------------------------------------------------------------------------
# Bubbles and triangles
# ---------------------------------------------------------------------------


def bubble(a: int, b: int, c: int, d: int, root: int | None = None):
    """Merge ``c, d`` into ``b`` after splitting ``a`` into ``c, d``.

    Returns ``(scalar, survives)``: the composite equals ``scalar * p_a``
    when ``a == b`` and vanishes otherwise.  If only one of the triples is
    admissible the hom space is zero and so is the bubble.
    """
    ok_a, ok_b = admissible(a, c, d), admissible(b, c, d)
    ring = ring_for(root)
    if not ok_a and not ok_b:
        raise NotAdmissible(f"neither ({a},{c},{d}) nor ({b},{c},{d}) is admissible")
    if not (ok_a and ok_b):
        return ring.zero, False
    comp = compose(vertex_morphism(c, d, b, root), split_morphism(a, c, d, root))
    if a != b:
        if not comp.is_zero():
            raise ArithmeticError(f"bubble({a},{b},{c},{d}) is not zero")
        return ring.zero, False
    pa = jw(a, root)
    (id_key,) = identity(a, ring)._terms
    s = comp._terms.get(id_key, ring.zero)
    if comp != pa.scale(s):
        raise ArithmeticError(f"bubble({a},{a},{c},{d}) is not a multiple of p_{a}")
    return s, True


def triangle_net(a: int, b: int, k: int, bottom: int) -> TrivalentNet:
    """The triangle with bottom leg ``bottom``, sides ``k`` and ``1``, top edge ``b-1``.

    ``bottom`` splits into ``k`` (left) and ``1`` (right); the left corner
    sends ``a`` up and ``b-1`` across; the right corner merges ``b-1`` with
    ``1`` into ``b``.
    """
    lower = net_split(bottom, k, 1)
    middle = net_tensor(net_split(k, a, b - 1), net_strand(1))
    upper = net_tensor(net_strand(a), net_merge(b - 1, 1, b))
    return net_compose(upper, net_compose(middle, lower))


@dataclass
class TriangleReport:
    a: int
    b: int
    k: int
    plus_applicable: bool
    plus_ok: bool | None
    minus_applicable: bool
    minus_ok: bool | None
    minus_coefficient: object = None

    @property
    def ok(self) -> bool:
        return self.plus_ok is not False and self.minus_ok is not False


def triangle_checks(a: int, b: int, k: int, root: int | None = None) -> TriangleReport:
    """Check both triangle-shrinking identities for ``(a, b, k)`` via :func:`compile_net`.

    The ``k+1`` triangle equals the plain split ``k+1 -> a, b``.  The ``k-1``
    triangle equals ``(-1)^n [k-n]/[k]`` times the split ``k-1 -> a, b``
    with ``n = (k + b - 1 - a) / 2``, provided ``a + k > b - 1``.
    """
    if b < 1 or not admissible(a, b - 1, k) or not admissible(b - 1, 1, b):
        raise NotAdmissible(f"({a},{b - 1},{k}) and ({b - 1},1,{b}) must be admissible")
    ring = ring_for(root)
    plus_app = admissible(k, 1, k + 1)
    plus_ok = None
    if plus_app:
        lhs = compile_net(triangle_net(a, b, k, k + 1), root)
        rhs = compile_net(net_split(k + 1, a, b), root)
        plus_ok = lhs == rhs
    minus_app = k >= 1 and admissible(k, 1, k - 1) and a + k > b - 1
    minus_ok = None
    coeff = None
    if minus_app:
        n = (k + b - 1 - a) // 2
        coeff = ring.coerce(qint(k - n) / qint(k) * (-1) ** n)
        lhs = compile_net(triangle_net(a, b, k, k - 1), root)
        rhs = compile_net(net_split(k - 1, a, b), root).scale(coeff)
        minus_ok = lhs == rhs
    return TriangleReport(a, b, k, plus_app, plus_ok, minus_app, minus_ok, coeff)


# ---------------------------------------------------------------------------
# Hom-space dimension
# ---------------------------------------------------------------------------


def hom_dimension(a: int, b: int, c: int) -> int:
    """Rank of ``Hom(p_a x p_b, p_c)`` computed from the pairing matrix.

    The space is spanned by ``p_c h (p_a x p_b)`` over simple ``h``; its rank
    is read off the Gram matrix under ``(x, y) -> tr(bar(y) x)``.
    """
    from .diagram import basis
    from .linalg import rank

    if (a + b + c) % 2:
        return 0
    pc, pab = jw(c), tensor(jw(a), jw(b))
    span = []
    seen = set()
    for h in basis(a + b, c):
        v = compose(pc, compose(Morphism.from_pairing(h), pab))
        if v.is_zero() or v in seen:
            continue
        seen.add(v)
        span.append(v)
    if not span:
        return 0
    gram = [[trace(compose(bar(y), x)) for y in span] for x in span]
    return rank(gram)
