"""Arithmetic in the small finite fields used by the code constructions.

Elements are plain integers ``0..q-1``.  For the extension fields GF(4),
GF(9) and GF(25) an element ``v`` is read as the base-``p`` digit vector
``(v // p, v % p)``; addition is digit-wise mod ``p`` and multiplication goes
through power/log tables of a fixed primitive element.  Prime fields use
ordinary modular arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

__all__ = [
    "FieldSpec",
    "FieldError",
    "build_field",
    "ff_add",
    "ff_mul",
    "ff_sub",
    "ff_neg",
    "ff_inv",
    "ff_div",
    "ff_pow",
    "is_prime",
]

# Powers of the primitive element 4 in GF(9); base-3 digit vectors (a, b) -> 3a + b.
GF9_POWERS = (1, 4, 6, 7, 2, 8, 3, 5)
# Powers of alpha = 2 in GF(4), alpha^2 = alpha + 1.
GF4_POWERS = (1, 2, 3)

_EXTENSIONS = {4: (2, 2), 9: (3, 2), 25: (5, 2)}


class FieldError(ValueError):
    """Unsupported field order or an element outside the field."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A finite field of order ``q = p**d`` with elements ``0..q-1``.

    ``pw[i]`` is the ``i``-th power of the fixed primitive element and ``lg``
    is its inverse (``lg[0]`` is ``-1``).  ``add_table`` and ``mul_table`` are
    read-only ``q x q`` arrays used by the vectorised paths.
    """

    q: int
    p: int
    d: int
    pw: tuple[int, ...]
    lg: tuple[int, ...]
    add_table: np.ndarray = field(repr=False, compare=False)
    mul_table: np.ndarray = field(repr=False, compare=False)

    @property
    def is_prime_field(self) -> bool:
        return self.d == 1

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def nonzero(self) -> range:
        return range(1, self.q)

    def check(self, *values: int) -> None:
        for v in values:
            if not isinstance(v, (int, np.integer)) or not 0 <= v < self.q:
                raise FieldError(f"{v!r} is not an element of GF({self.q})")

    def __str__(self) -> str:
        return f"GF({self.q})"


def mul_by_alpha_gf25(x: int) -> int:
    """Multiply ``x`` in GF(25) by alpha, a root of x^2 + 4x + 2.

    With ``x = 5a + b`` read as ``a*alpha + b`` and ``alpha^2 = alpha + 3``,
    ``alpha * x = (a + b)*alpha + 3a``.
    """
    a, b = divmod(x, 5)
    return 5 * ((a + b) % 5) + (3 * a) % 5


def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    order = p - 1
    factors = {f for f in range(2, order + 1) if order % f == 0 and is_prime(f)}
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in factors):
            return g
    raise FieldError(f"no primitive root mod {p}")  # pragma: no cover


def _powers(q: int) -> tuple[int, ...]:
    if q == 4:
        return GF4_POWERS
    if q == 9:
        return GF9_POWERS
    if q == 25:
        out = [1]
        for _ in range(q - 2):
            out.append(mul_by_alpha_gf25(out[-1]))
        return tuple(out)
    g = _primitive_root(q)
    return tuple(pow(g, i, q) for i in range(q - 1))


def _digitwise_add(u: int, v: int, p: int) -> int:
    total, scale = 0, 1
    while u or v:
        total += ((u % p + v % p) % p) * scale
        u //= p
        v //= p
        scale *= p
    return total


@lru_cache(maxsize=None)
def build_field(q: int) -> FieldSpec:
    """Return the field of order ``q``.

    Supported orders are every prime plus 4, 9 and 25.

    >>> build_field(9).pw
    (1, 4, 6, 7, 2, 8, 3, 5)
    """
    if q in _EXTENSIONS:
        p, d = _EXTENSIONS[q]
    elif is_prime(q):
        p, d = q, 1
    else:
        raise FieldError(f"unsupported field order {q}; use a prime, 4, 9 or 25")

    pw = _powers(q)
    if len(pw) != q - 1 or sorted(pw) != list(range(1, q)) or pw[0] != 1:
        raise FieldError(f"power table for GF({q}) is not a permutation of 1..{q - 1}")
    lg = [-1] * q
    for i, x in enumerate(pw):
        lg[x] = i

    idx = np.arange(q)
    if d == 1:
        add = (idx[:, None] + idx[None, :]) % q
        mul = (idx[:, None] * idx[None, :]) % q
    else:
        add = np.array([[_digitwise_add(u, v, p) for v in range(q)] for u in range(q)])
        mul = np.zeros((q, q), dtype=np.int64)
        for u in range(1, q):
            for v in range(1, q):
                mul[u, v] = pw[(lg[u] + lg[v]) % (q - 1)]
    add = add.astype(np.int64)
    mul = mul.astype(np.int64)
    add.setflags(write=False)
    mul.setflags(write=False)
    return FieldSpec(q, p, d, pw, tuple(lg), add, mul)


def ff_add(f: FieldSpec, u: int, v: int) -> int:
    f.check(u, v)
    if f.d == 1:
        return (u + v) % f.q
    return _digitwise_add(u, v, f.p)


def ff_mul(f: FieldSpec, u: int, v: int) -> int:
    f.check(u, v)
    if f.d == 1:
        return (u * v) % f.q
    if u == 0 or v == 0:
        return 0
    return f.pw[(f.lg[u] + f.lg[v]) % (f.q - 1)]


def ff_neg(f: FieldSpec, v: int) -> int:
    # -1 is p - 1 in the prime subfield
    return ff_mul(f, f.p - 1, v)


def ff_sub(f: FieldSpec, u: int, v: int) -> int:
    return ff_add(f, u, ff_neg(f, v))


def ff_inv(f: FieldSpec, v: int) -> int:
    f.check(v)
    if v == 0:
        raise ZeroDivisionError("0 has no inverse")
    return f.pw[(-f.lg[v]) % (f.q - 1)]


def ff_div(f: FieldSpec, u: int, v: int) -> int:
    return ff_mul(f, u, ff_inv(f, v))


def ff_pow(f: FieldSpec, v: int, n: int) -> int:
    f.check(v)
    if v == 0:
        if n < 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 if n == 0 else 0
    return f.pw[(f.lg[v] * n) % (f.q - 1)]
