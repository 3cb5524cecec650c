"""Jones-Wenzl idempotents via the Wenzl recursion, cached."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .diagram import (
    Morphism,
    cap,
    compose,
    cup,
    identity,
    tensor,
    tensor_all,
)
from .errors import DenominatorVanishes, ShapeMismatch
from .scalar import GENERIC, cyclo_ring, qint

__all__ = ["jw", "check_jw", "JWReport", "absorb_check", "JWCache", "DEFAULT_BOUND"]

DEFAULT_BOUND = 10


class JWCache:
    """Memo table for generic ``p_n``; filled under a lock, read freely."""

    def __init__(self, bound: int = DEFAULT_BOUND):
        self.bound = bound
        self.table: dict[int, Morphism] = {0: identity(0), 1: identity(1)}
        self._lock = threading.Lock()
        self._special: dict[tuple[int, int], Morphism] = {}

    def get(self, n: int) -> Morphism:
        hit = self.table.get(n)
        if hit is not None:
            return hit
        with self._lock:
            top = max(self.table)
            while top < n:
                self.table[top + 1] = _wenzl_step(self.table[top], top)
                top += 1
            result = self.table[n]
            if n > self.bound:
                # computed but not retained past the configured bound
                for k in [k for k in self.table if k > self.bound]:
                    del self.table[k]
            return result

    def special(self, n: int, root: int) -> Morphism:
        key = (n, root)
        hit = self._special.get(key)
        if hit is None:
            hit = self.get(n).specialize(root)
            with self._lock:
                self._special[key] = hit
        return hit

    def clear(self):
        with self._lock:
            self.table = {0: identity(0), 1: identity(1)}
            self._special.clear()


def _wenzl_step(p: Morphism, n: int) -> Morphism:
    """``p_{n+1} = (p_n x 1) - [n]/[n+1] (p_n x 1) U_n (p_n x 1)``."""
    x = tensor(p, identity(1))
    lower = compose(cap(n, n + 1), x)
    upper = compose(x, cup(n, n + 1))
    mu = qint(n) / qint(n + 1)
    return x - compose(upper, lower).scale(mu)


_CACHE = JWCache()


def jw(n: int, root: int | None = None) -> Morphism:
    """The Jones-Wenzl idempotent ``p_n``.

    With ``root`` the coefficients are specialized at ``q = exp(pi i/root)``,
    which is only defined for ``n <= root - 1``.
    """
    if n < 0:
        raise ShapeMismatch("negative strand count")
    if root is None:
        return _CACHE.get(n)
    if n > root - 1:
        raise DenominatorVanishes(f"p_{n} is undefined at root {root}; need n <= {root - 1}")
    return _CACHE.special(n, root)


@dataclass
class JWReport:
    n: int
    identity_coefficient: bool
    cap_kill: bool
    cup_kill: bool
    idempotent: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.identity_coefficient and self.cap_kill and self.cup_kill and self.idempotent

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "identity_coefficient": self.identity_coefficient,
            "cap_kill": self.cap_kill,
            "cup_kill": self.cup_kill,
            "idempotent": self.idempotent,
            "ok": self.ok,
        }


def check_jw(p: Morphism) -> JWReport:
    """Check the defining properties of a Jones-Wenzl idempotent, exactly."""
    if p.source != p.target:
        raise ShapeMismatch("check_jw needs an endomorphism")
    n = p.source
    ring = p.ring
    failures = []
    ident = identity(n, ring)
    (id_key,) = ident._terms
    id_ok = p._terms.get(id_key) == ring.one
    if not id_ok:
        failures.append("identity coefficient is not 1")
    cap_ok = cup_ok = True
    for i in range(1, n):
        if not compose(cap(i, n, ring), p).is_zero():
            cap_ok = False
            failures.append(f"cap {i} does not kill")
        if not compose(p, cup(i, n, ring)).is_zero():
            cup_ok = False
            failures.append(f"cup {i} does not kill")
    idem = compose(p, p) == p
    if not idem:
        failures.append("not idempotent")
    return JWReport(n, id_ok, cap_ok, cup_ok, idem, failures)


def absorb_check(n: int, m: int, offset: int, root: int | None = None) -> bool:
    """``(id x p_m x id) p_n = p_n = p_n (id x p_m x id)``."""
    if not (0 <= m <= n) or offset < 0 or offset + m > n:
        raise ShapeMismatch(f"p_{m} at offset {offset} does not fit inside {n} strands")
    ring = GENERIC if root is None else cyclo_ring(root)
    pn = jw(n, root)
    inner = tensor_all(identity(offset, ring), jw(m, root), identity(n - m - offset, ring))
    return compose(inner, pn) == pn and compose(pn, inner) == pn
