"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
Every check is exact.
"""

import itertools
import time

import pytest

from tlj.diagram import Morphism, basis, catalan, compose, generator_u, identity, partial_trace, tensor, trace
from tlj.fusion import (
    negligible_vertex,
    orthogonality_check,
    q_admissible,
    sixj,
    sixj_dense,
    sixj_gram,
    sixj_range,
    truncated_identity_check,
)
from tlj.jones_wenzl import check_jw, jw
from tlj.nets import (
    admissible,
    bubble,
    evaluate_net,
    phi_psi_products,
    tensor_identity_check,
    theta_formula,
    theta_net,
    triangle_checks,
)
from tlj.scalar import cyclo_ring, qint, specialize
from tlj.skein import (
    HIMove,
    enumerate_colorings,
    hi_matrix,
    library,
    pentagon_paths_agree,
    read_spine,
    transport,
)
from tlj.errors import LabelOutOfRange


def triples(top):
    return [t for t in itertools.product(range(top + 1), repeat=3) if admissible(*t)]


def ac1():
    bad = [n for n in range(1, 21) if qint(n + 1) != qint(2) * qint(n) - qint(n - 1)]
    return not bad, f"[n+1] = [2][n] - [n-1], 1 <= n <= 20, failures {bad}"


def ac2():
    cases = 0
    for total in range(0, 17, 2):
        for m in range(total + 1):
            cases += 1
            if len(basis(m, total - m)) != catalan(total // 2):
                return False, f"basis({m},{total - m})"
    return True, f"|basis(m,n)| = Catalan, {cases} shapes with m+n <= 16"


def ac3():
    d = qint(2)
    cases = 0
    for n in range(2, 7):
        U = {i: generator_u(i, n) for i in range(1, n)}
        for i in U:
            cases += 1
            if compose(U[i], U[i]) != U[i].scale(d):
                return False, f"U_{i}^2 in TL_{n}"
            for j in U:
                if abs(i - j) > 1 and compose(U[i], U[j]) != compose(U[j], U[i]):
                    return False, f"U_{i} U_{j} in TL_{n}"
                if abs(i - j) == 1 and compose(U[i], compose(U[j], U[i])) != U[i]:
                    return False, f"U_{i} U_{j} U_{i} in TL_{n}"
    return True, f"TL_n relations for n <= 6 ({cases} generators)"


def ac4():
    for n in range(9):
        p = jw(n)
        if not check_jw(p).ok:
            return False, f"check_jw(jw({n}))"
        if trace(p) != qint(n + 1):
            return False, f"trace(jw({n}))"
        if n and partial_trace(p) != jw(n - 1).scale(qint(n + 1) / qint(n)):
            return False, f"partial_trace(jw({n}))"
    return True, "jw(n) projector checks, trace and partial trace for n <= 8"


def ac5():
    ts = triples(6)
    for t in ts:
        if evaluate_net(theta_net(*t)) != theta_formula(*t):
            return False, f"theta{t}"
    for a in range(1, 7):
        if theta_formula(a, 1, a - 1) != qint(a + 1) or theta_formula(a, 1, a + 1) != qint(a + 2):
            return False, f"theta special values at a={a}"
    return True, f"theta formula = net evaluation on {len(ts)} triples <= 6, special values a <= 6"


def ac6():
    for a, b in itertools.product(range(5), repeat=2):
        if not tensor_identity_check(a, b):
            return False, f"tensor identity ({a},{b})"
        ks, square, total = phi_psi_products(a, b)
        if total != tensor(jw(a), jw(b)):
            return False, f"psi phi ({a},{b})"
        for r, k in enumerate(ks):
            for s, k2 in enumerate(ks):
                want = jw(k) if r == s else Morphism.zero(k2, k)
                if square[r][s] != want:
                    return False, f"phi psi ({a},{b}) entry {r},{s}"
    return True, "tensor product identity and phi/psi inverses for a, b <= 4"


def ac7():
    bubbles = 0
    for a, b, c, d in itertools.product(range(5), repeat=4):
        if not (admissible(a, c, d) and admissible(b, c, d)):
            continue
        bubbles += 1
        s, survives = bubble(a, b, c, d)
        if a == b:
            if not survives or s != theta_formula(a, c, d) / qint(a + 1):
                return False, f"bubble {a, b, c, d}"
        elif survives or s:
            return False, f"bubble {a, b, c, d} should vanish"
    plus = minus = 0
    for a, b, k in itertools.product(range(5), range(1, 5), range(5)):
        if not admissible(a, b - 1, k):
            continue
        rep = triangle_checks(a, b, k)
        if not rep.ok:
            return False, f"triangle {a, b, k}"
        plus += rep.plus_applicable
        minus += rep.minus_applicable
    if not (plus and minus):
        return False, "triangle grid empty"
    return True, f"{bubbles} bubbles, triangles k+1 on {plus} and k-1 on {minus} configurations"


def ac8():
    for n in range(3, 8):
        if specialize(qint(n), n):
            return False, f"[{n}] at root {n}"
        for t in itertools.product(range(n - 1), repeat=3):
            if admissible(*t):
                vanishes = not specialize(theta_formula(*t), n)
                if negligible_vertex(*t, n) != vanishes:
                    return False, f"negligible {t} at root {n}"
    for n in range(3, 6):
        for a, b in itertools.product(range(n - 1), repeat=2):
            if not truncated_identity_check(a, b, n):
                return False, f"truncated identity ({a},{b}) at root {n}"
    return True, "[n] = 0, negligibility vs theta for n = 3..7, truncated identity for n = 3..5"


def ac9():
    cases = 0
    for n in (4, 5):
        for a, b, c, d in itertools.product(range(4), repeat=4):
            for j in range(4):
                if not (q_admissible(a, b, j, n) and q_admissible(c, d, j, n)):
                    continue
                dense = sixj_dense(a, b, c, d, j)
                for i in sixj_range(a, b, c, d, n):
                    cases += 1
                    if specialize(dense[i], n) != sixj_gram(a, b, i, c, d, j, root=n):
                        return False, f"6j {a, b, i, c, d, j} at root {n}"
    anchors = 0
    for a, c in itertools.product(range(4), repeat=2):
        for i in sixj_range(a, a, c, c):
            anchors += 1
            if sixj(a, a, i, c, c, 0) != qint(i + 1) / theta_formula(a, c, i):
                return False, f"anchor {a, c, i}"
    return True, f"Gram vs dense on {cases} q-admissible 6j at n = 4, 5; {anchors} j=0 anchors"


def ac10():
    cases = 0
    for n in range(3, 7):
        top = n - 2
        for a, b, c, d in itertools.product(range(top + 1), repeat=4):
            js = [j for j in range(top + 1) if q_admissible(a, b, j, n) and q_admissible(c, d, j, n)]
            for j, k in itertools.product(js, repeat=2):
                cases += 1
                if not orthogonality_check(a, b, c, d, j, k, n):
                    return False, f"orthogonality {a, b, c, d, j, k} at root {n}"
    return True, f"orthogonality on {cases} q-admissible cases, n = 3..6"


def ac11():
    for name in ("two_holed_dumbbell", "two_holed_theta"):
        if enumerate_colorings(read_spine(name), 3).dimension != 4:
            return False, f"{name} at n = 3"
    for n in range(3, 7):
        if enumerate_colorings(read_spine("annulus"), n).dimension != n - 1:
            return False, f"annulus at n = {n}"
    moves = 0
    for name in library():
        s = read_spine(name)
        for n in range(3, 7):
            try:
                base = enumerate_colorings(s, n)
            except LabelOutOfRange:
                continue
            ring = cyclo_ring(n)
            for e in s.internal_edges():
                for o in (0, 1):
                    moves += 1
                    end, mat = transport(s, [HIMove(e, o), HIMove(e, 1 - o)], n)
                    ident = all(
                        mat[r][c] == (ring.one if r == c else ring.zero)
                        for r in range(base.dimension)
                        for c in range(base.dimension)
                    )
                    if end != s or not ident:
                        return False, f"HI inverse {name} edge {e} at n = {n}"
    pent = 0
    for n in (4, 5):
        for labels in itertools.product(range(n - 1), repeat=5):
            pent += 1
            if not pentagon_paths_agree(labels, n):
                return False, f"pentagon {labels} at n = {n}"
    s1 = read_spine("two_holed_dumbbell")
    if hi_matrix(s1, HIMove(0), 3).target.dimension != 4:
        return False, "dumbbell to theta"
    return True, f"dim 4 spines, annulus n-1, {moves} HI inverse checks, {pent} pentagon configurations"


def ac12():
    rep = check_jw(identity(2))
    if rep.ok or rep.cap_kill:
        return False, "identity(2) passed check_jw"
    bumped = jw(3) + Morphism.from_pairing(basis(3, 3)[0], qint(2))
    if check_jw(bumped).ok:
        return False, "perturbed jw(3) passed check_jw"
    if q_admissible(1, 1, 2, 3):
        return False, "(1,1,2) q-admissible at n = 3"
    return True, "identity(2) and perturbed jw(3) fail check_jw; (1,1,2) rejected at n = 3"


CRITERIA = [ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12]


def run_one(fn):
    start = time.perf_counter()
    ok, detail = fn()
    took = time.perf_counter() - start
    return f"{fn.__name__.upper()} {'PASS' if ok else 'FAIL'}  {detail}  ({took:.1f}s)", ok


@pytest.mark.parametrize("fn", CRITERIA, ids=[f.__name__ for f in CRITERIA])
def test_acceptance(fn, capsys):
    line, ok = run_one(fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    start = time.perf_counter()
    results = [run_one(fn) for fn in CRITERIA]
    for line, _ in results:
        print(line)
    print(f"{sum(ok for _, ok in results)}/{len(results)} passed in {time.perf_counter() - start:.1f}s")
