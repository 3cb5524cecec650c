"""Executable identity checks, grouped into named suites.

Every check is exact: a case fails on any nonzero discrepancy.  A suite
returns a list of :class:`CheckResult`; :func:`verify` runs one suite or all
of them and sorts the results by check name.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field

from .diagram import (
    Morphism,
    basis,
    catalan,
    compose,
    generator_u,
    partial_trace,
    tensor,
    trace,
)
from .errors import DenominatorVanishes, LabelOutOfRange, NotAdmissible
from .fusion import (
    negligible_vertex,
    orthogonality_check,
    q_admissible,
    sixj,
    sixj_dense,
    sixj_gram,
    sixj_range,
    truncated_identity_check,
)
from .jones_wenzl import check_jw, jw
from .linalg import identity_matrix
from .nets import (
    admissible,
    bubble,
    evaluate_net,
    phi_psi_products,
    tensor_identity_check,
    theta_formula,
    theta_net,
    triangle_checks,
)
from .scalar import cyclo_ring, qint, specialize
from .skein import (
    HIMove,
    brute_force_dimension,
    enumerate_colorings,
    library,
    necklace_spine,
    pentagon_paths_agree,
    read_spine,
    transport,
    verlinde_dimension,
)

__all__ = ["CheckResult", "VerifyOptions", "SUITES", "verify"]


@dataclass
class CheckResult:
    name: str
    grid: str
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        d["failures"] = [str(f) for f in self.failures]
        d["elapsed"] = round(self.elapsed, 3)
        return d


@dataclass
class VerifyOptions:
    max_n: int | None = None
    max_label: int | None = None
    root: int | None = None

    def bound(self, attr: str, default: int) -> int:
        v = getattr(self, attr)
        return default if v is None else v

    def roots(self, lo: int, hi: int) -> list[int]:
        if self.root is not None:
            return [self.root]
        return list(range(lo, hi + 1))


class _Check:
    """Context manager that times a check and counts cases."""

    def __init__(self, out: list, name: str, grid: str):
        self.result = CheckResult(name, grid)
        out.append(self.result)

    def __enter__(self):
        self._t = time.perf_counter()
        return self

    def case(self, ok: bool, label):
        self.result.cases += 1
        if not ok:
            self.result.failures.append(label)

    def __exit__(self, *exc):
        self.result.elapsed = time.perf_counter() - self._t
        return False


# ---------------------------------------------------------------------------


def suite_qint(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_n", 20)
    with _Check(out, "qint.recursion", f"1 <= n <= {top}") as c:
        for n in range(1, top + 1):
            c.case(qint(n + 1) == qint(2) * qint(n) - qint(n - 1), n)
    return out


def _brute_basis_count(m: int, n: int) -> int:
    # every perfect matching of m+n points, filtered for crossings
    pts = list(range(m + n))
    circ = {p: (p if p < m else m + (m + n - 1 - p)) for p in pts}

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for k in range(1, len(rest)):
            for tail in matchings(rest[1:k] + rest[k + 1 :]):
                yield [(a, rest[k])] + tail

    count = 0
    for mt in matchings(pts):
        arcs = [tuple(sorted((circ[x], circ[y]))) for x, y in mt]
        if all(
            not (a < c < b < d or c < a < d < b) for (a, b), (c, d) in itertools.combinations(arcs, 2)
        ):
            count += 1
    return count


def suite_basis(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_n", 16)
    with _Check(out, "basis.catalan", f"even m+n <= {top}") as c:
        for total in range(0, top + 1, 2):
            for m in range(total + 1):
                c.case(len(basis(m, total - m)) == catalan(total // 2), (m, total - m))
    small = min(top, 10)
    with _Check(out, "basis.brute_force", f"even m+n <= {small}") as c:
        for total in range(0, small + 1, 2):
            for m in range(total + 1):
                c.case(len(basis(m, total - m)) == _brute_basis_count(m, total - m), (m, total - m))
    return out


def suite_tl(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_n", 6)
    d = qint(2)
    with _Check(out, "tl.relations", f"2 <= n <= {top}") as c:
        for n in range(2, top + 1):
            us = {i: generator_u(i, n) for i in range(1, n)}
            for i, u in us.items():
                c.case(compose(u, u) == u.scale(d), (n, "square", i))
                for j, v in us.items():
                    if abs(i - j) > 1:
                        c.case(compose(u, v) == compose(v, u), (n, "commute", i, j))
                    if abs(i - j) == 1:
                        c.case(compose(u, compose(v, u)) == u, (n, "braid", i, j))
    return out


def suite_jw(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_n", 8)
    with _Check(out, "jw.defining_properties", f"0 <= n <= {top}") as c:
        for n in range(top + 1):
            c.case(check_jw(jw(n)).ok, n)
    with _Check(out, "jw.trace", f"0 <= n <= {top}") as c:
        for n in range(top + 1):
            c.case(trace(jw(n)) == qint(n + 1), n)
    with _Check(out, "jw.partial_trace", f"1 <= n <= {top}") as c:
        for n in range(1, top + 1):
            c.case(partial_trace(jw(n)) == jw(n - 1).scale(qint(n + 1) / qint(n)), n)
    if opts.root is not None:
        r = opts.root
        with _Check(out, "jw.at_root", f"n <= {r - 1}, root {r}") as c:
            for n in range(min(top, r - 1) + 1):
                c.case(check_jw(jw(n, r)).ok, (n, r))
    return out


def _triples(top: int):
    for a, b, cc in itertools.product(range(top + 1), repeat=3):
        if admissible(a, b, cc):
            yield a, b, cc


def suite_theta(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_label", 6)
    with _Check(out, "theta.formula_vs_net", f"admissible labels <= {top}") as c:
        for t in _triples(top):
            c.case(theta_formula(*t) == evaluate_net(theta_net(*t)), t)
    with _Check(out, "theta.special_values", f"1 <= a <= {top}") as c:
        for a in range(1, top + 1):
            c.case(theta_formula(a, 1, a - 1) == qint(a + 1), (a, 1, a - 1))
            c.case(theta_formula(a, 1, a + 1) == qint(a + 2), (a, 1, a + 1))
    return out


def suite_fusion(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_label", 4)
    with _Check(out, "fusion.tensor_identity", f"a, b <= {top}") as c:
        for a, b in itertools.product(range(top + 1), repeat=2):
            c.case(tensor_identity_check(a, b), (a, b))
    with _Check(out, "fusion.phi_psi", f"a, b <= {top}") as c:
        for a, b in itertools.product(range(top + 1), repeat=2):
            ks, square, total = phi_psi_products(a, b)
            ok = total == tensor(jw(a), jw(b))
            for r, k in enumerate(ks):
                for s in range(len(ks)):
                    want = jw(k) if r == s else Morphism.zero(ks[s], k)
                    ok = ok and square[r][s] == want
            c.case(ok, (a, b))
    with _Check(out, "fusion.bubble", f"labels <= {top}") as c:
        for a, b, cc, d in itertools.product(range(top + 1), repeat=4):
            try:
                s, survives = bubble(a, b, cc, d)
            except NotAdmissible:
                continue
            except ArithmeticError as exc:
                c.case(False, (a, b, cc, d, str(exc)))
                continue
            if a == b:
                want = theta_formula(a, cc, d) / qint(a + 1)
                c.case(survives and s == want, (a, b, cc, d))
            else:
                c.case(not survives and not s, (a, b, cc, d))
    with _Check(out, "fusion.triangles", f"labels <= {top}") as c:
        for a, b, k in itertools.product(range(top + 1), range(1, top + 1), range(top + 1)):
            if not admissible(a, b - 1, k):
                continue
            c.case(triangle_checks(a, b, k).ok, (a, b, k))
    return out


def suite_root(opts: VerifyOptions) -> list:
    out = []
    roots = opts.roots(3, 7)
    with _Check(out, "root.qint_vanishes", f"n in {roots}") as c:
        for n in roots:
            c.case(not specialize(qint(n), n), n)
    with _Check(out, "root.negligible_vs_theta", f"labels <= n-2, n in {roots}") as c:
        for n in roots:
            for t in _triples(n - 2):
                c.case(negligible_vertex(*t, n) == (not specialize(theta_formula(*t), n)), (n, t))
    small = [n for n in roots if n <= 5]
    with _Check(out, "root.truncated_identity", f"a, b <= n-2, n in {small}") as c:
        for n in small:
            for a, b in itertools.product(range(n - 1), repeat=2):
                c.case(truncated_identity_check(a, b, n), (n, a, b))
    return out


def _sixj_grid(top: int, n: int | None):
    ok = admissible if n is None else (lambda *t: q_admissible(*t, n))
    for a, b, cc, d in itertools.product(range(top + 1), repeat=4):
        for j in range(top + 1):
            if ok(a, b, j) and ok(cc, d, j):
                yield a, b, cc, d, j


def suite_sixj(opts: VerifyOptions) -> list:
    out = []
    top = opts.bound("max_label", 3)
    roots = opts.roots(4, 5)
    with _Check(out, "sixj.two_oracles", f"labels <= {top}, n in {roots}") as c:
        for n in roots:
            for a, b, cc, d, j in _sixj_grid(top, n):
                try:
                    dense = sixj_dense(a, b, cc, d, j)
                except ArithmeticError as exc:
                    c.case(False, (n, a, b, cc, d, j, str(exc)))
                    continue
                for i in sixj_range(a, b, cc, d, n):
                    try:
                        via_dense = specialize(dense[i], n)
                    except DenominatorVanishes:
                        via_dense = None
                    gram = sixj_gram(a, b, i, cc, d, j, n)
                    c.case(via_dense is None or gram == via_dense, (n, a, b, i, cc, d, j))
    with _Check(out, "sixj.j0_anchor", f"labels <= {top}, generic and n in {roots}") as c:
        for a, cc in itertools.product(range(top + 1), repeat=2):
            for i in sixj_range(a, a, cc, cc):
                want = qint(i + 1) / theta_formula(a, cc, i)
                c.case(sixj(a, a, i, cc, cc, 0) == want, (a, i, cc))
            for n in roots:
                if max(a, cc) > n - 2:
                    continue
                for i in sixj_range(a, a, cc, cc, n):
                    want = specialize(qint(i + 1), n) / specialize(theta_formula(a, cc, i), n)
                    c.case(sixj(a, a, i, cc, cc, 0, n) == want, (n, a, i, cc))
    return out


def suite_orthogonality(opts: VerifyOptions) -> list:
    out = []
    roots = opts.roots(2, opts.bound("max_n", 6))
    with _Check(out, "orthogonality.root", f"q-admissible grid, n in {roots}") as c:
        for n in roots:
            for a, b, cc, d, j in _sixj_grid(n - 2, n):
                for k in range(n - 1):
                    if q_admissible(a, b, k, n) and q_admissible(cc, d, k, n):
                        c.case(orthogonality_check(a, b, cc, d, j, k, n), (n, a, b, cc, d, j, k))
    top = opts.bound("max_label", 2)
    with _Check(out, "orthogonality.generic", f"labels <= {top}") as c:
        for a, b, cc, d, j in _sixj_grid(top, None):
            for k in range(top + 1):
                if admissible(a, b, k) and admissible(cc, d, k):
                    c.case(orthogonality_check(a, b, cc, d, j, k), (a, b, cc, d, j, k))
    return out


def suite_skein(opts: VerifyOptions) -> list:
    out = []
    roots = opts.roots(3, opts.bound("max_n", 6))
    with _Check(out, "skein.doubly_holed_dim4", "dumbbell and theta spines, n = 3") as c:
        for name in ("two_holed_dumbbell", "two_holed_theta"):
            c.case(enumerate_colorings(read_spine(name), 3).dimension == 4, name)
    with _Check(out, "skein.annulus", f"n in {roots}") as c:
        for n in roots:
            c.case(enumerate_colorings(read_spine("annulus"), n).dimension == n - 1, n)
    with _Check(out, "skein.hi_inverse", f"library spines, internal edges, n in {roots}") as c:
        for name in library():
            sp = read_spine(name)
            for n in roots:
                try:
                    base = enumerate_colorings(sp, n)
                except LabelOutOfRange:
                    continue
                ring = cyclo_ring(n)
                want = identity_matrix(base.dimension, ring.zero, ring.one)
                for e in sp.internal_edges():
                    for o in (0, 1):
                        mv = HIMove(e, o)
                        end, mat = transport(sp, [mv, mv.inverse()], n)
                        c.case(end == sp and mat == want, (name, n, e, o))
    with _Check(out, "skein.hi_dimension", f"library spines, n in {roots}") as c:
        for name in library():
            sp = read_spine(name)
            for n in roots:
                try:
                    base = enumerate_colorings(sp, n)
                except LabelOutOfRange:
                    continue
                c.case(brute_force_dimension(sp, n) == base.dimension, (name, n, "brute"))
                for e in sp.internal_edges():
                    end, _ = transport(sp, [HIMove(e)], n)
                    dim = enumerate_colorings(end, n, base.boundary_labels).dimension
                    c.case(dim == base.dimension, (name, n, e))
    pent_roots = [n for n in roots if n in (4, 5)] or roots[:1]
    with _Check(out, "skein.pentagon", f"all boundary labels, n in {pent_roots}") as c:
        for n in pent_roots:
            for labels in itertools.product(range(n - 1), repeat=5):
                c.case(pentagon_paths_agree(labels, n), (n, labels))
    v_roots = [n for n in roots if n <= 5] or roots[:1]
    with _Check(out, "skein.verlinde", f"holes 1..3, n in {v_roots}") as c:
        for n in v_roots:
            for k in range(1, 4):
                c.case(
                    verlinde_dimension(k, n) == brute_force_dimension(necklace_spine(k - 1), n),
                    (n, k),
                )
    return out


SUITES = {
    "basis": suite_basis,
    "fusion": suite_fusion,
    "jw": suite_jw,
    "orthogonality": suite_orthogonality,
    "qint": suite_qint,
    "root": suite_root,
    "sixj": suite_sixj,
    "skein": suite_skein,
    "theta": suite_theta,
    "tl": suite_tl,
}


def verify(suite: str = "all", opts: VerifyOptions | None = None) -> list[CheckResult]:
    opts = opts or VerifyOptions()
    if suite == "all":
        names = sorted(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise KeyError(suite)
    results = []
    for name in names:
        results.extend(SUITES[name](opts))
    return sorted(results, key=lambda r: r.name)
