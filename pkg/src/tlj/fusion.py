"""TLJ at ``q = exp(pi i / n)``: q-admissibility, negligibility, truncated
fusion and recoupling (6j) coefficients.

Corners of the recoupling square are ``a`` bottom-left, ``b`` top-left,
``c`` top-right and ``d`` bottom-right; both trees are read as morphisms
``a x d -> b x c``::

    H_j : a splits into b and j, then j and d merge into c
    I_i : a and d merge into i, then i splits into b and c

and ``H_j = sum_i sixj(a, b, i, c, d, j) I_i``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .diagram import Morphism, basis, compose, identity, tensor, trace
from .errors import DegenerateGram, DenominatorVanishes, LabelOutOfRange, NotAdmissible
from .jones_wenzl import jw
from .linalg import solve_combination
from .nets import (
    admissible,
    evaluate_net,
    fusion_coefficients,
    net_bar,
    net_compose,
    net_merge,
    net_split,
    net_strand,
    net_tensor,
    net_trace,
    split_morphism,
    theta_formula,
    vertex_morphism,
)
from .scalar import GENERIC, cyclo_ring, qint, specialize

__all__ = [
    "RootContext",
    "q_admissible",
    "negligible_vertex",
    "truncated_sum",
    "truncated_fusion",
    "is_negligible",
    "truncated_identity_check",
    "h_net",
    "i_net",
    "net_pairing",
    "sixj",
    "sixj_gram",
    "sixj_dense",
    "sixj_range",
    "orthogonality_check",
    "pentagon_check",
]


@dataclass(frozen=True)
class RootContext:
    """``q`` a primitive ``2n``-th root of unity; simple labels ``0..n-2``."""

    n: int

    def __post_init__(self):
        if int(self.n) < 2:
            raise ValueError("root parameter must be at least 2")

    @property
    def simple_labels(self) -> range:
        return range(self.n - 1)

    @property
    def ring(self):
        return cyclo_ring(self.n)


def _n(ctx) -> int:
    return ctx.n if isinstance(ctx, RootContext) else int(ctx)


def q_admissible(a: int, b: int, c: int, ctx) -> bool:
    n = _n(ctx)
    return admissible(a, b, c) and max(a, b, c) <= n - 2 and a + b + c < 2 * n - 2


def negligible_vertex(a: int, b: int, c: int, ctx) -> bool:
    """Whether ``g_{a,b,c}`` is negligible at the root: ``a + b + c >= 2n - 2``."""
    if not admissible(a, b, c):
        raise NotAdmissible(f"({a},{b},{c}) is not admissible")
    return a + b + c >= 2 * _n(ctx) - 2


def truncated_sum(a: int, b: int, ctx) -> int:
    """Largest ``k`` in the truncated fusion of ``a`` and ``b``."""
    n = _n(ctx)
    return a + b if a + b < n - 1 else 2 * n - (a + b) - 4


def _check_simple(n: int, *labels):
    for x in labels:
        if not 0 <= x <= n - 2:
            raise LabelOutOfRange(f"label {x} is not simple at root {n} (need 0..{n - 2})")


def truncated_fusion(a: int, b: int, ctx) -> list:
    """``(k, lambda(a,b,k))`` for ``k = |a-b| .. a (+)_n b``, specialized."""
    n = _n(ctx)
    _check_simple(n, a, b)
    top = truncated_sum(a, b, n)
    return [
        (k, specialize(lam, n)) for k, lam in fusion_coefficients(a, b) if k <= top
    ]


def is_negligible(f: Morphism) -> bool:
    """``tr(x f) = 0`` for every simple ``x`` of the opposite shape."""
    ring = f.ring
    for p in basis(f.target, f.source):
        x = Morphism.from_pairing(p, 1, ring)
        if trace(compose(x, f)):
            return False
    return True


def truncated_identity_check(a: int, b: int, ctx) -> bool:
    """The truncated tensor identity at the root, modulo negligible morphisms.

    ``p_a x p_b - sum_k lambda_k tree_k cotree_k`` must be negligible; it is
    generally not zero (already ``p_1 x p_1 - U_1/[2] = p_2`` at ``n = 3``).
    """
    n = _n(ctx)
    ring = cyclo_ring(n)
    diff = tensor(jw(a, n), jw(b, n))
    for k, lam in truncated_fusion(a, b, n):
        diff = diff - compose(split_morphism(k, a, b, n), vertex_morphism(a, b, k, n)).scale(lam)
    assert diff.ring == ring
    return is_negligible(diff)


# ---------------------------------------------------------------------------
# Recoupling
# ---------------------------------------------------------------------------


def h_net(a, b, c, d, j):
    left = net_tensor(net_split(a, b, j), net_strand(d))
    right = net_tensor(net_strand(b), net_merge(j, d, c))
    return net_compose(right, left)


def i_net(a, b, c, d, i):
    return net_compose(net_split(i, b, c), net_merge(a, d, i))


def net_pairing(x, y, root=None):
    """``tr(bar(y) x)`` for nets ``x, y`` with the same boundary."""
    return evaluate_net(net_trace(net_compose(net_bar(y), x)), root)


def _h_morphism(a, b, c, d, j, root=None):
    ring = GENERIC if root is None else cyclo_ring(root)
    left = tensor(split_morphism(a, b, j, root), identity(d, ring))
    right = tensor(identity(b, ring), vertex_morphism(j, d, c, root))
    return compose(right, left)


def _i_morphism(a, b, c, d, i, root=None):
    return compose(split_morphism(i, b, c, root), vertex_morphism(a, d, i, root))


def sixj_range(a, b, c, d, root=None) -> list[int]:
    """Labels ``i`` for which ``I_i`` exists (q-admissible at a root)."""
    top = max(a + d, b + c)
    ok = admissible if root is None else (lambda x, y, z: q_admissible(x, y, z, root))
    return [i for i in range(top + 1) if ok(a, d, i) and ok(b, c, i)]


def _check_sixj(a, b, i, c, d, j, root):
    ok = admissible if root is None else (lambda x, y, z: q_admissible(x, y, z, root))
    for t in ((a, b, j), (c, d, j), (a, d, i), (b, c, i)):
        if not ok(*t):
            kind = "admissible" if root is None else f"q-admissible at root {root}"
            raise NotAdmissible(f"{t} is not {kind}")


def sixj_gram(a, b, i, c, d, j, root=None):
    """6j coefficient by pairing ``H_j`` against ``I_i`` with closed-net evaluation."""
    _check_sixj(a, b, i, c, d, j, root)
    ii = i_net(a, b, c, d, i)
    norm = net_pairing(ii, ii, root)
    if not norm:
        raise DegenerateGram(f"I-tree self-pairing vanishes for i={i}")
    return net_pairing(h_net(a, b, c, d, j), ii, root) / norm


def sixj_dense(a, b, c, d, j) -> dict:
    """All generic 6j coefficients ``{i: value}`` for fixed ``j``.

    Expands ``H_j`` and every ``I_i`` in the Catalan basis and solves the
    linear system exactly.
    """
    for t in ((a, b, j), (c, d, j)):
        if not admissible(*t):
            raise NotAdmissible(f"{t} is not admissible")
    idx = sixj_range(a, b, c, d)
    cols = [_i_morphism(a, b, c, d, i).to_vector() for i in idx]
    target = _h_morphism(a, b, c, d, j).to_vector()
    sol = solve_combination(cols, target)
    if sol is None:
        raise ArithmeticError("H-tree is not in the span of the I-trees")
    return dict(zip(idx, sol))


_MEMO: dict = {}
_MEMO_LOCK = threading.Lock()


def _memo(key, fn):
    hit = _MEMO.get(key)
    if hit is None:
        hit = fn()
        with _MEMO_LOCK:
            _MEMO.setdefault(key, hit)
    return hit


def sixj(a, b, i, c, d, j, root=None):
    """Recoupling coefficient ``{a b i ; c d j}``.

    Generic values are computed once and specialized for roots of unity; if a
    denominator vanishes at the root the Gram pairing is redone there.
    """
    _check_sixj(a, b, i, c, d, j, root)
    key = (a, b, i, c, d, j)
    if root is None:
        return _memo((key, None), lambda: sixj_gram(*key))

    def at_root():
        generic = _memo((key, None), lambda: sixj_gram(*key))
        try:
            return specialize(generic, root)
        except DenominatorVanishes:
            return sixj_gram(*key, root=root)

    return _memo((key, root), at_root)


def orthogonality_check(a, b, c, d, j, k, root=None) -> bool:
    """``sum_i sixj(a,b,i,c,d,j) sixj(d,a,k,b,c,i) == delta_jk``."""
    for t in ((a, b, j), (c, d, j), (a, b, k), (c, d, k)):
        ok = admissible(*t) if root is None else q_admissible(*t, root)
        if not ok:
            raise NotAdmissible(f"{t} is not admissible")
    ring = GENERIC if root is None else cyclo_ring(root)
    total = ring.zero
    for i in sixj_range(a, b, c, d, root):
        total = total + sixj(a, b, i, c, d, j, root) * sixj(d, a, k, b, c, i, root)
    return total == (ring.one if j == k else ring.zero)


def pentagon_check(labels, ctx) -> bool:
    """Two HI-move paths between the same five-leaf trees give equal matrices.

    ``labels`` are the five boundary labels, read left to right along the
    bottom (four) and then the top (one).
    """
    from .skein import pentagon_paths_agree

    return pentagon_paths_agree(tuple(labels), _n(ctx))


def fusion_qint_zero(n: int) -> bool:
    return not specialize(qint(n), n)


def theta_at_root(a, b, c, n):
    return specialize(theta_formula(a, b, c), n)
