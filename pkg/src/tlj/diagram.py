"""The Temperley-Lieb category over Q(q) or Q(zeta_2n).

Boundary points of an ``m -> n`` diagram are numbered ``0..m-1`` along the
bottom edge and ``m..m+n-1`` along the top edge, both left to right.
Internally a simple diagram is a *partner tuple* ``p`` with ``p[i]`` the
point matched to ``i``; :class:`Pairing` is the public wrapper around it.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import IndexOutOfRange, ParseError, ShapeMismatch
from .scalar import GENERIC, CycloRing, CycloScalar, RatScalar, parse_cyclo, parse_rat

__all__ = [
    "Pairing",
    "Morphism",
    "basis",
    "catalan",
    "compose",
    "tensor",
    "identity",
    "generator_u",
    "cup",
    "cap",
    "unit_eta",
    "counit_eps",
    "dual",
    "bar",
    "lateral_reflect",
    "trace",
    "left_trace",
    "partial_trace",
    "through_strands",
    "parse_morphism",
]


def _circ_pos(i: int, m: int, n: int) -> int:
    # bottom left->right, then top right->left
    return i if i < m else m + n - 1 - (i - m)


def _is_noncrossing(p: tuple, m: int, n: int) -> bool:
    N = m + n
    order = [0] * N
    for i in range(N):
        order[_circ_pos(i, m, n)] = i
    stack = []
    for i in order:
        j = p[i]
        if _circ_pos(j, m, n) > _circ_pos(i, m, n):
            stack.append(i)
        elif not stack or stack.pop() != j:
            return False
    return not stack


def _pairs_of(p: tuple) -> tuple:
    return tuple((i, j) for i, j in enumerate(p) if i < j)


class Pairing:
    """A loop-free noncrossing perfect matching from ``bottom`` to ``top`` points."""

    __slots__ = ("bottom", "top", "_p")

    def __init__(self, bottom: int, top: int, pairs):
        m, n = int(bottom), int(top)
        if m < 0 or n < 0:
            raise ShapeMismatch("negative number of boundary points")
        N = m + n
        p = [-1] * N
        for a, b in pairs:
            a, b = int(a), int(b)
            if not (0 <= a < N and 0 <= b < N) or a == b:
                raise IndexOutOfRange(f"bad pair ({a},{b}) for {m}->{n} diagram")
            if p[a] != -1 or p[b] != -1:
                raise ShapeMismatch(f"point reused in pair ({a},{b})")
            p[a], p[b] = b, a
        if -1 in p:
            raise ShapeMismatch("matching is not perfect")
        p = tuple(p)
        if not _is_noncrossing(p, m, n):
            raise ShapeMismatch("pairs cross")
        self.bottom, self.top, self._p = m, n, p

    @classmethod
    def _wrap(cls, m: int, n: int, p: tuple) -> "Pairing":
        obj = object.__new__(cls)
        obj.bottom, obj.top, obj._p = m, n, p
        return obj

    @property
    def pairs(self) -> tuple:
        return _pairs_of(self._p)

    match = pairs

    @property
    def partner(self) -> tuple:
        return self._p

    def through_strands(self) -> int:
        m = self.bottom
        return sum(1 for i in range(m) if self._p[i] >= m)

    def __eq__(self, other):
        if not isinstance(other, Pairing):
            return NotImplemented
        return self.bottom == other.bottom and self.top == other.top and self._p == other._p

    def __hash__(self):
        return hash((self.bottom, self.top, self._p))

    def __lt__(self, other):
        return (self.bottom, self.top, self.pairs) < (other.bottom, other.top, other.pairs)

    def __str__(self):
        return "[" + ",".join(f"({a},{b})" for a, b in self.pairs) + "]"

    def __repr__(self):
        return f"Pairing({self.bottom}, {self.top}, {list(self.pairs)})"


def through_strands(p: Pairing) -> int:
    return p.through_strands()


def catalan(k: int) -> int:
    from math import comb

    return comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _circle_matchings(N: int) -> tuple:
    """Noncrossing perfect matchings of 0..N-1 on a circle, as partner tuples."""
    if N % 2:
        return ()

    @lru_cache(maxsize=None)
    def rec(lo: int, hi: int) -> tuple:
        if lo >= hi:
            return ((),)
        out = []
        for j in range(lo + 1, hi, 2):
            for inner in rec(lo + 1, j):
                for outer in rec(j + 1, hi):
                    out.append(((lo, j),) + inner + outer)
        return tuple(out)

    return rec(0, N)


@lru_cache(maxsize=None)
def _basis_partners(m: int, n: int) -> tuple:
    N = m + n
    if N % 2:
        return ()
    order = [0] * N
    for i in range(N):
        order[_circ_pos(i, m, n)] = i
    out = []
    for arcs in _circle_matchings(N):
        p = [0] * N
        for a, b in arcs:
            x, y = order[a], order[b]
            p[x], p[y] = y, x
        out.append(tuple(p))
    out.sort(key=_pairs_of)
    return tuple(out)


def basis(m: int, n: int) -> list[Pairing]:
    """All simple diagrams ``m -> n`` ordered lexicographically by pair list."""
    if m < 0 or n < 0:
        raise ShapeMismatch("negative number of boundary points")
    return [Pairing._wrap(m, n, p) for p in _basis_partners(m, n)]


@lru_cache(maxsize=None)
def _basis_index(m: int, n: int) -> dict:
    return {p: i for i, p in enumerate(_basis_partners(m, n))}


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------


class Morphism:
    """Formal linear combination of simple diagrams ``source -> target``.

    ``ring`` is the coefficient field (``GENERIC`` or a :class:`CycloRing`).
    """

    __slots__ = ("source", "target", "ring", "_terms")

    def __init__(self, source: int, target: int, terms=None, ring=GENERIC):
        self.source, self.target, self.ring = int(source), int(target), ring
        clean = {}
        for key, c in (terms or {}).items():
            if isinstance(key, Pairing):
                if key.bottom != self.source or key.top != self.target:
                    raise ShapeMismatch(f"pairing {key!r} does not fit {source}->{target}")
                key = key._p
            c = ring.coerce(c)
            if c:
                clean[key] = clean[key] + c if key in clean else c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _make(cls, m, n, terms, ring) -> "Morphism":
        obj = object.__new__(cls)
        obj.source, obj.target, obj.ring, obj._terms = m, n, ring, terms
        return obj

    @classmethod
    def from_pairing(cls, p: Pairing, coeff=1, ring=GENERIC) -> "Morphism":
        return cls(p.bottom, p.top, {p: coeff}, ring)

    @classmethod
    def zero(cls, m: int, n: int, ring=GENERIC) -> "Morphism":
        return cls._make(m, n, {}, ring)

    # -- views ------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return {Pairing._wrap(self.source, self.target, p): c for p, c in self._sorted()}

    def _sorted(self):
        return sorted(self._terms.items(), key=lambda kv: _pairs_of(kv[0]))

    def coefficient(self, p: Pairing):
        return self._terms.get(p._p, self.ring.zero)

    def support(self) -> list[Pairing]:
        return [Pairing._wrap(self.source, self.target, p) for p, _ in self._sorted()]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def to_vector(self) -> list:
        """Coordinates in the ordered basis ``basis(source, target)``."""
        z = self.ring.zero
        return [self._terms.get(p, z) for p in _basis_partners(self.source, self.target)]

    @classmethod
    def from_vector(cls, m: int, n: int, vec, ring=GENERIC) -> "Morphism":
        parts = _basis_partners(m, n)
        if len(vec) != len(parts):
            raise ShapeMismatch("vector length differs from basis size")
        return cls._make(m, n, {p: ring.coerce(c) for p, c in zip(parts, vec) if c}, ring)

    def map_coeffs(self, fn, ring=None) -> "Morphism":
        ring = ring or self.ring
        out = {}
        for p, c in self._terms.items():
            v = fn(c)
            if v:
                out[p] = v
        return Morphism._make(self.source, self.target, out, ring)

    def specialize(self, n: int) -> "Morphism":
        """Evaluate every coefficient at ``q = exp(pi i / n)``."""
        from .scalar import cyclo_ring

        ring = cyclo_ring(n)
        if self.ring == ring:
            return self
        return self.map_coeffs(ring.coerce, ring)

    # -- linear structure ---------------------------------------------------

    def _check(self, other: "Morphism"):
        if not isinstance(other, Morphism):
            raise TypeError("expected a Morphism")
        if (self.source, self.target) != (other.source, other.target):
            raise ShapeMismatch(
                f"shapes {self.source}->{self.target} and {other.source}->{other.target} differ"
            )
        if self.ring != other.ring:
            raise ShapeMismatch("morphisms over different coefficient fields")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self._terms)
        for p, c in other._terms.items():
            if p in out:
                v = out[p] + c
                if v:
                    out[p] = v
                else:
                    del out[p]
            else:
                out[p] = c
        return Morphism._make(self.source, self.target, out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Morphism._make(
            self.source, self.target, {p: -c for p, c in self._terms.items()}, self.ring
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Morphism":
        c = self.ring.coerce(c)
        if not c:
            return Morphism.zero(self.source, self.target, self.ring)
        return Morphism._make(
            self.source, self.target, {p: c * v for p, v in self._terms.items()}, self.ring
        )

    def __mul__(self, c):
        if isinstance(c, Morphism):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        """``g @ f`` is ``compose(g, f)``."""
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self._terms.items())))

    # -- text ---------------------------------------------------------------

    def render(self, names: bool = False) -> str:
        """``"coeff * pairing + ..."`` in basis order.

        With ``names`` the identity prints as ``id`` and a lone cup-cap
        generator as ``U_i``.
        """
        if not self._terms:
            return "0"
        pieces = []
        for p, c in self._sorted():
            label = _diagram_name(self.source, self.target, p) if names else None
            if label is None:
                label = str(Pairing._wrap(self.source, self.target, p))
            neg, text = _coeff_text(c)
            body = label if text == "1" else f"{text} * {label}"
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Morphism({self.source}->{self.target}: {self.render()})"


def _coeff_text(c) -> tuple[bool, str]:
    neg = False
    if isinstance(c, RatScalar):
        lead = c._num[0]
        neg = lead < 0
    elif isinstance(c, CycloScalar):
        cs = [x for x in c.coeffs if x]
        neg = bool(cs) and cs[0] < 0
    if neg:
        c = -c
    s = str(c)
    if not s.startswith("(") and (" + " in s or " - " in s):
        s = f"({s})"
    return neg, s


def _diagram_name(m: int, n: int, p: tuple) -> str | None:
    if m != n:
        return None
    if all(p[i] == m + i for i in range(m)):
        return "id"
    for i in range(1, n):
        if p == _u_partner(i, n):
            return f"U_{i}"
    return None


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"^(id|U_(\d+)|\[[^\]]*\])$")


def _split_top(text: str) -> list[tuple[bool, str]]:
    """Split on ``+``/``-`` separators that sit outside brackets."""
    out = []
    depth = 0
    start = 0
    neg = False
    s = text.strip()
    i = 0
    if s.startswith("-"):
        neg = True
        i = start = 1
    while i < len(s):
        ch = s[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0 and s[i - 1] == " " and s[i + 1 : i + 2] == " ":
            out.append((neg, s[start:i].strip()))
            neg = ch == "-"
            start = i + 1
        i += 1
    out.append((neg, s[start:].strip()))
    return out


def parse_morphism(text: str, source: int, target: int, ring=GENERIC) -> Morphism:
    """Inverse of :meth:`Morphism.render` (with or without ``names``)."""
    s = text.strip()
    if s == "0":
        return Morphism.zero(source, target, ring)
    acc = Morphism.zero(source, target, ring)
    for neg, piece in _split_top(s):
        if not piece:
            raise ParseError(f"empty term in {text!r}")
        if " * " in piece:
            ctext, _, dtext = piece.rpartition(" * ")
        else:
            ctext, dtext = "1", piece
        dtext = dtext.strip()
        if not _NAME_RE.match(dtext):
            raise ParseError(f"cannot read diagram {dtext!r}")
        if dtext == "id":
            if source != target:
                raise ParseError("'id' needs equal source and target")
            d = identity(source, ring)
        elif dtext.startswith("U_"):
            if source != target:
                raise ParseError("'U_i' needs equal source and target")
            d = generator_u(int(dtext[2:]), source, ring)
        else:
            pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", dtext)
            try:
                pr = Pairing(source, target, [(int(a), int(b)) for a, b in pairs])
            except (ShapeMismatch, IndexOutOfRange) as exc:
                raise ParseError(str(exc)) from exc
            d = Morphism.from_pairing(pr, 1, ring)
        ctext = ctext.strip()
        if ctext.startswith("(") and ctext.endswith(")") and "/" not in ctext:
            ctext = ctext[1:-1]
        if isinstance(ring, CycloRing):
            c = parse_cyclo(ctext, ring.root)
        else:
            c = parse_rat(ctext)
        if neg:
            c = -c
        acc = acc + d.scale(c)
    return acc


# ---------------------------------------------------------------------------
# Composition
# ---------------------------------------------------------------------------


def _stack(pf: tuple, pg: tuple, m: int, n: int, k: int):
    """Put ``g`` (n -> k) on top of ``f`` (m -> n); return (partner, loops)."""
    N = m + k
    res = [-1] * N
    seen = [False] * n
    for start in range(N):
        if res[start] >= 0:
            continue
        if start < m:
            x = pf[start]
            on_f = True
        else:
            x = pg[n + start - m]
            on_f = False
        while True:
            if on_f:
                if x < m:
                    end = x
                    break
                mid = x - m
                seen[mid] = True
                x = pg[mid]
                on_f = False
            else:
                if x >= n:
                    end = m + x - n
                    break
                seen[x] = True
                x = pf[m + x]
                on_f = True
        res[start] = end
        res[end] = start
    loops = 0
    for s in range(n):
        if seen[s]:
            continue
        loops += 1
        mid = s
        while True:
            seen[mid] = True
            mid = pg[mid]  # g's bottom partner, also in the middle row
            seen[mid] = True
            mid = pf[m + mid] - m
            if mid == s:
                break
    return tuple(res), loops


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g o f``: stack ``g`` on top of ``f``; each closed loop becomes a factor ``d``."""
    if not isinstance(g, Morphism) or not isinstance(f, Morphism):
        raise TypeError("compose expects Morphisms")
    if g.source != f.target:
        raise ShapeMismatch(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
    if g.ring != f.ring:
        raise ShapeMismatch("morphisms over different coefficient fields")
    ring = f.ring
    m, n, k = f.source, f.target, g.target
    if not f._terms or not g._terms:
        return Morphism.zero(m, k, ring)
    one = ring.one
    # cheap path: one side is a bare diagram
    if len(g._terms) == 1 or len(f._terms) == 1:
        single_g = len(g._terms) == 1
        (ps, cs), = (g if single_g else f)._terms.items()
        if cs == one:
            loop_pow = _loop_powers(ring)
            out: dict = {}
            for p, c in (f if single_g else g)._terms.items():
                res, ell = _stack(p, ps, m, n, k) if single_g else _stack(ps, p, m, n, k)
                if ell:
                    c = c * loop_pow(ell)
                if res in out:
                    v = out[res] + c
                    if v:
                        out[res] = v
                    else:
                        del out[res]
                else:
                    out[res] = c
            return Morphism._make(m, k, out, ring)

    return _compose_cellular(g, f)


# The general kernel splits every diagram into a bottom half and a top half.
# Through strands are "ports", numbered left to right; in a planar diagram
# the k-th bottom port is joined to the k-th top port.  Stacking only couples
# f's top half with g's bottom half, so that contraction is computed once per
# pair of halves and the coefficients are summed through an intermediate table.


@lru_cache(maxsize=1 << 18)
def _halves(p: tuple, m: int, n: int) -> tuple:
    bottom = []
    k = 0
    for i in range(m):
        j = p[i]
        if j < m:
            bottom.append(j)
        else:
            bottom.append(-1 - k)
            k += 1
    top = []
    k = 0
    for x in range(n):
        j = p[m + x]
        if j >= m:
            top.append(j - m)
        else:
            top.append(-1 - k)
            k += 1
    return tuple(bottom), tuple(top)


@lru_cache(maxsize=1 << 18)
def _middle(top_f: tuple, bot_g: tuple) -> tuple:
    """Contract f's top half against g's bottom half.

    Returns (port matching, loops).  f-ports are numbered first, then g-ports.
    """
    n = len(top_f)
    fpos = [x for x in range(n) if top_f[x] < 0]
    gpos = [x for x in range(n) if bot_g[x] < 0]
    t1 = len(fpos)
    mp = [-1] * (t1 + len(gpos))
    seen = [False] * n

    def walk(pos, look_g):
        while True:
            seen[pos] = True
            v = bot_g[pos] if look_g else top_f[pos]
            if v < 0:
                return (t1 - 1 - v) if look_g else (-1 - v)
            pos = v
            seen[pos] = True
            look_g = not look_g

    for k, x in enumerate(fpos):
        if mp[k] < 0:
            e = walk(x, True)
            mp[k], mp[e] = e, k
    for k, x in enumerate(gpos):
        if mp[t1 + k] < 0:
            e = walk(x, False)
            mp[t1 + k], mp[e] = e, t1 + k
    loops = 0
    for s in range(n):
        if seen[s]:
            continue
        loops += 1
        pos = s
        while True:
            seen[pos] = True
            pos = bot_g[pos]
            seen[pos] = True
            pos = top_f[pos]
            if pos == s:
                break
    return tuple(mp), loops


@lru_cache(maxsize=1 << 18)
def _assemble(bot_f: tuple, mp: tuple, top_g: tuple) -> tuple:
    m = len(bot_f)
    fpos = [i for i, v in enumerate(bot_f) if v < 0]
    gpos = [x for x, v in enumerate(top_g) if v < 0]
    t1 = len(fpos)
    res = [0] * (m + len(top_g))
    for i, v in enumerate(bot_f):
        if v >= 0:
            res[i] = v
    for x, v in enumerate(top_g):
        if v >= 0:
            res[m + x] = m + v
    ends = fpos + [m + x for x in gpos]
    for k, e in enumerate(mp):
        res[ends[k]] = ends[e]
    return tuple(res)


def _compose_cellular(g: Morphism, f: Morphism) -> Morphism:
    ring = f.ring
    m, n, k = f.source, f.target, g.target
    fk, fc = zip(*f._terms.items())
    gk, gc = zip(*g._terms.items())
    wf, ctx_f = ring.lift(fc)
    wg, ctx_g = ring.lift(gc)

    rows: dict = {}
    for p, w in zip(fk, wf):
        b, t = _halves(p, m, n)
        rows.setdefault(b, []).append((t, w))
    cols: dict = {}
    for p, w in zip(gk, wg):
        b, t = _halves(p, n, k)
        cols.setdefault(b, []).append((t, w))
    col_keys = list(cols)

    top = n // 2
    weights = ring.loop_weights(top)
    acc: dict = {}
    for bot_f, entries in rows.items():
        mid: dict = {}
        for top_f, w in entries:
            for bot_g in col_keys:
                mp, ell = _middle(top_f, bot_g)
                v = w * weights[ell]
                key = (bot_g, mp)
                if key in mid:
                    mid[key] += v
                else:
                    mid[key] = v
        for (bot_g, mp), h in mid.items():
            if h.is_zero():
                continue
            for top_g, w in cols[bot_g]:
                res = _assemble(bot_f, mp, top_g)
                if res in acc:
                    acc[res] += h * w
                else:
                    acc[res] = h * w
    out = {}
    for res, w in acc.items():
        c = ring.finish(w, top, ctx_f, ctx_g)
        if c:
            out[res] = c
    return Morphism._make(m, k, out, ring)


def _compose_naive(g: Morphism, f: Morphism) -> Morphism:
    """Reference kernel: walk every pair of diagrams.  Used in tests."""
    ring = f.ring
    m, n, k = f.source, f.target, g.target
    power = _loop_powers(ring)
    out = Morphism.zero(m, k, ring)
    for pf, a in f._terms.items():
        for pg, b in g._terms.items():
            res, ell = _stack(pf, pg, m, n, k)
            c = a * b
            if ell:
                c = c * power(ell)
            out = out + Morphism._make(m, k, {res: c}, ring)
    return out


@lru_cache(maxsize=None)
def _loop_powers(ring):
    @lru_cache(maxsize=None)
    def power(ell: int):
        return ring.loop ** ell

    return power


# ---------------------------------------------------------------------------
# Tensor product and named diagrams
# ---------------------------------------------------------------------------


def _tensor_partner(pf, pg, m, n, m2, n2) -> tuple:
    M, N = m + m2, n + n2

    def where_f(i):
        return i if i < m else M + (i - m)

    def where_g(i):
        return m + i if i < m2 else M + n + (i - m2)

    out = [0] * (M + N)
    for i, j in enumerate(pf):
        out[where_f(i)] = where_f(j)
    for i, j in enumerate(pg):
        out[where_g(i)] = where_g(j)
    return tuple(out)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """Horizontal juxtaposition, ``f`` on the left."""
    if f.ring != g.ring:
        raise ShapeMismatch("morphisms over different coefficient fields")
    m, n, m2, n2 = f.source, f.target, g.source, g.target
    out = {}
    for pf, a in f._terms.items():
        for pg, b in g._terms.items():
            out[_tensor_partner(pf, pg, m, n, m2, n2)] = a * b
    return Morphism._make(m + m2, n + n2, out, f.ring)


def tensor_all(*ms: Morphism) -> Morphism:
    out = ms[0]
    for x in ms[1:]:
        out = tensor(out, x)
    return out


def identity(n: int, ring=GENERIC) -> Morphism:
    if n < 0:
        raise IndexOutOfRange("negative strand count")
    p = tuple(list(range(n, 2 * n)) + list(range(n)))
    return Morphism._make(n, n, {p: ring.one}, ring)


@lru_cache(maxsize=None)
def _u_partner(i: int, n: int) -> tuple:
    p = list(range(n, 2 * n)) + list(range(n))
    p[i - 1], p[i] = i, i - 1
    p[n + i - 1], p[n + i] = n + i, n + i - 1
    return tuple(p)


def generator_u(i: int, n: int, ring=GENERIC) -> Morphism:
    """``U_i`` in TL_n: a cap over points ``i-1, i`` and a cup under them."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"U_{i} needs 1 <= i <= {n - 1}")
    return Morphism._make(n, n, {_u_partner(i, n): ring.one}, ring)


def cup(i: int, n: int, ring=GENERIC) -> Morphism:
    """``n-2 -> n``: a cup joining top points ``i-1`` and ``i``, other strands straight."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"cup {i} needs 1 <= i <= {n - 1}")
    m = n - 2
    p = [0] * (m + n)
    for j in range(m):
        t = m + (j if j < i - 1 else j + 2)
        p[j], p[t] = t, j
    p[m + i - 1], p[m + i] = m + i, m + i - 1
    return Morphism._make(m, n, {tuple(p): ring.one}, ring)


def cap(i: int, n: int, ring=GENERIC) -> Morphism:
    """``n -> n-2``: the reflection of :func:`cup`."""
    return bar(cup(i, n, ring))


def unit_eta(a: int, ring=GENERIC) -> Morphism:
    """``0 -> 2a``: ``a`` nested cups."""
    if a < 0:
        raise IndexOutOfRange("negative nesting depth")
    p = tuple(2 * a - 1 - i for i in range(2 * a))
    return Morphism._make(0, 2 * a, {p: ring.one}, ring)


def counit_eps(a: int, ring=GENERIC) -> Morphism:
    """``2a -> 0``: ``a`` nested caps."""
    return bar(unit_eta(a, ring))


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------


def _remap(f: Morphism, m2: int, n2: int, where, coeff) -> Morphism:
    out = {}
    for p, c in f._terms.items():
        q = [0] * (m2 + n2)
        for i, j in enumerate(p):
            q[where(i)] = where(j)
        out[tuple(q)] = coeff(c)
    return Morphism._make(m2, n2, out, f.ring)


def dual(f: Morphism) -> Morphism:
    """Rotate by a half turn; coefficients go through ``q -> 1/q``."""
    m, n = f.source, f.target

    def where(i):
        return n + (m - 1 - i) if i < m else n - 1 - (i - m)

    return _remap(f, n, m, where, f.ring.bar)


def bar(f: Morphism) -> Morphism:
    """Reflect top to bottom; coefficients go through ``q -> 1/q``."""
    m, n = f.source, f.target

    def where(i):
        return n + i if i < m else i - m

    return _remap(f, n, m, where, f.ring.bar)


def lateral_reflect(f: Morphism) -> Morphism:
    """Mirror left to right; coefficients untouched."""
    m, n = f.source, f.target

    def where(i):
        return m - 1 - i if i < m else m + (n - 1 - (i - m))

    return _remap(f, m, n, where, lambda c: c)


# ---------------------------------------------------------------------------
# Traces
# ---------------------------------------------------------------------------


def _close_right(p: tuple, n: int, r: int):
    """Join the rightmost ``r`` strands of an ``n -> n`` diagram around the right.

    Returns the partner tuple of the ``n-r -> n-r`` result and the loop count.
    """
    keep = n - r
    closed_b = set(range(keep, n))

    def other(x):
        # bottom j <-> top j for the closed strands
        return n + x if x < n else x - n

    def is_closed(x):
        return x in closed_b or (x >= n and x - n in closed_b)

    def new_index(x):
        return x if x < n else keep + (x - n)

    res = [-1] * (2 * keep)
    seen = set()
    for start in list(range(keep)) + list(range(n, n + keep)):
        s = new_index(start)
        if res[s] >= 0:
            continue
        x = p[start]
        while is_closed(x):
            seen.add(x)
            y = other(x)
            seen.add(y)
            x = p[y]
        e = new_index(x)
        res[s], res[e] = e, s
    loops = 0
    for b in range(keep, n):
        if b in seen:
            continue
        loops += 1
        x = b
        while True:
            seen.add(x)
            y = p[x]
            seen.add(y)
            x = other(y)
            if x == b:
                break
    return tuple(res), loops


def _require_endo(f: Morphism):
    if f.source != f.target:
        raise ShapeMismatch(f"trace needs an endomorphism, got {f.source}->{f.target}")


def trace(f: Morphism):
    """Close every strand around the right and read off the scalar."""
    _require_endo(f)
    n = f.source
    power = _loop_powers(f.ring)
    total = f.ring.zero
    for p, c in f._terms.items():
        _, ell = _close_right(p, n, n)
        total = total + (c * power(ell) if ell else c)
    return total


def partial_trace(f: Morphism, strands: int = 1) -> Morphism:
    """Close only the rightmost ``strands`` strands."""
    _require_endo(f)
    n = f.source
    if not 0 <= strands <= n:
        raise ShapeMismatch(f"cannot close {strands} of {n} strands")
    power = _loop_powers(f.ring)
    out: dict = {}
    for p, c in f._terms.items():
        res, ell = _close_right(p, n, strands)
        if ell:
            c = c * power(ell)
        if res in out:
            v = out[res] + c
            if v:
                out[res] = v
            else:
                del out[res]
        else:
            out[res] = c
    return Morphism._make(n - strands, n - strands, out, f.ring)


def left_trace(f: Morphism):
    """Close every strand around the left, built from cups and caps."""
    _require_endo(f)
    n = f.source
    eta = unit_eta(n, f.ring)
    closed = compose(counit_eps(n, f.ring), compose(tensor(identity(n, f.ring), f), eta))
    return scalar_of(closed)


def right_trace_by_composition(f: Morphism):
    _require_endo(f)
    n = f.source
    eta = unit_eta(n, f.ring)
    closed = compose(counit_eps(n, f.ring), compose(tensor(f, identity(n, f.ring)), eta))
    return scalar_of(closed)


def scalar_of(f: Morphism):
    """Read a ``0 -> 0`` morphism as a scalar."""
    if f.source or f.target:
        raise ShapeMismatch(f"expected a 0->0 morphism, got {f.source}->{f.target}")
    return f._terms.get((), f.ring.zero)
