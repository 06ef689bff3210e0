"""Construction of length-3 check digit codes over finite fields.

A base code over GF(q) has codewords ``b m e`` with

    B*b + m + E*e = K,   i.e.   M(b, e) = K - (B*b + E*e).

Inserting a transversal (cells with ``b - e = P``) adds one new symbol, the
index ``q``, and yields a latin square of order ``q + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .galois import (
    FieldSpec,
    build_field,
    ff_add,
    ff_mul,
    ff_neg,
    ff_sub,
)

__all__ = [
    "CodeParams",
    "CodeTable",
    "WordCode",
    "CodeError",
    "validate_params",
    "enumerate_BE",
    "base_code",
    "alpha_params",
    "insert_extend",
    "cyclic_safe",
    "weight_sequence",
    "solve_missing",
    "reverse_code",
    "relabel_N",
    "linear_code",
    "params_RC",
]


class CodeError(ValueError):
    """Invalid code parameters or a table that breaks a code invariant."""


@dataclass(frozen=True)
class CodeParams:
    field: FieldSpec
    B: int
    E: int
    K: int
    P: int | None = None

    @property
    def R(self) -> int | None:
        if self.P is None:
            return None
        return ff_sub(self.field, self.K, ff_mul(self.field, self.B, self.P))

    @property
    def C(self) -> int | None:
        if self.P is None:
            return None
        return ff_add(self.field, self.K, ff_mul(self.field, self.E, self.P))

    def as_tuple(self) -> tuple:
        return (self.B, self.E, self.K, self.P)

    def __str__(self) -> str:
        s = f"{self.field} B={self.B} E={self.E} K={self.K}"
        if self.P is not None:
            s += f" P={self.P} R={self.R} C={self.C}"
        return s


@dataclass(frozen=True, eq=False)
class CodeTable:
    """Immutable ``Q x Q`` table; entry ``[b, e]`` is the middle symbol.

    The codewords are ``(b, entries[b, e], e)`` for all ``b, e``.
    """

    entries: np.ndarray
    provenance: str = "constructed"
    params: CodeParams | None = None
    name: str = ""
    _members: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise CodeError(f"table must be square, got shape {arr.shape}")
        Q = arr.shape[0]
        if arr.size and (arr.min() < 0 or arr.max() >= Q):
            raise CodeError(f"table entries must lie in 0..{Q - 1}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def Q(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, be: tuple[int, int]) -> int:
        b, e = be
        return int(self.entries[b, e])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CodeTable):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def members(self) -> np.ndarray:
        if self._members is None:
            m = kernels.table_members(self.entries)
            m.setflags(write=False)
            object.__setattr__(self, "_members", m)
        return self._members

    def codewords(self) -> list[tuple[int, int, int]]:
        Q = self.Q
        return [(b, int(self.entries[b, e]), e) for b in range(Q) for e in range(Q)]

    def contains(self, word: Sequence[int]) -> bool:
        b, m, e = word
        Q = self.Q
        if not all(0 <= x < Q for x in (b, m, e)):
            return False
        return int(self.entries[b, e]) == m

    def complete(self, word: Sequence[int | None]) -> int:
        return solve_missing(self, word)

    def end_table(self) -> np.ndarray:
        """``T[b, m] = e`` with ``M(b, e) = m``; ``Q`` marks a missing entry."""
        Q = self.Q
        out = np.full((Q, Q), Q, dtype=np.int64)
        for b in range(Q):
            for e in range(Q):
                m = self.entries[b, e]
                if out[b, m] == Q:
                    out[b, m] = e
        return out

    def with_name(self, name: str) -> "CodeTable":
        return replace(self, name=name, _members=self._members)


class WordCode:
    """A code given as an explicit set of length-3 words over ``0..Q-1``.

    Used where the codeword set is not a full latin table (the mod-37 codes
    with symbol 36 removed, the constant-middle base-2 code).
    """

    provenance = "word-set"
    params = None

    def __init__(self, Q: int, words: Iterable[Sequence[int]], name: str = ""):
        self.Q = Q
        self.name = name
        m = np.zeros((Q, Q, Q), dtype=bool)
        for b, mid, e in words:
            m[b, mid, e] = True
        m.setflags(write=False)
        self._members = m

    def members(self) -> np.ndarray:
        return self._members

    def codewords(self) -> list[tuple[int, int, int]]:
        return [tuple(int(x) for x in w) for w in np.argwhere(self._members)]

    def __len__(self) -> int:
        return int(self._members.sum())

    def contains(self, word: Sequence[int]) -> bool:
        if len(word) != 3 or not all(0 <= x < self.Q for x in word):
            return False
        return bool(self._members[tuple(word)])

    def complete(self, word: Sequence[int | None]) -> int:
        holes = [i for i, x in enumerate(word) if x is None]
        if len(holes) != 1:
            raise CodeError("exactly one position must be unknown")
        hits = []
        for s in range(self.Q):
            w = list(word)
            w[holes[0]] = s
            if self._members[tuple(w)]:
                hits.append(s)
        if len(hits) != 1:
            raise CodeError(f"no unique completion for {word} ({len(hits)} candidates)")
        return hits[0]


def validate_params(f: FieldSpec, B: int, E: int, K: int,
                    require_triple_free: bool = False) -> list[str]:
    """Violated weight conditions; an empty list means the parameters are usable."""
    f.check(B, E, K)
    bad = []
    if B == 0:
        bad.append("B=0")
    if E == 0:
        bad.append("E=0")
    if ff_add(f, B, 1) == 0:
        bad.append("B+1=0")
    if ff_add(f, E, 1) == 0:
        bad.append("E+1=0")
    if ff_add(f, B, E) == 0:
        bad.append("B+E=0")
    if ff_sub(f, B, 1) == 0:
        bad.append("B-1=0")
    if ff_sub(f, E, 1) == 0:
        bad.append("E-1=0")
    if ff_sub(f, B, E) == 0:
        bad.append("B-E=0")
    if require_triple_free:
        if ff_add(f, ff_add(f, B, 1), E) != 0:
            bad.append("B+1+E!=0")
        if K == 0:
            bad.append("K=0")
    return bad


def enumerate_BE(f: FieldSpec) -> list[tuple[int, int]]:
    """All weight pairs passing every condition with ``B + 1 + E = 0``."""
    return [(B, E) for B in f.nonzero for E in f.nonzero
            if not validate_params(f, B, E, 1, require_triple_free=True)]


def base_code(f: FieldSpec, B: int, E: int, K: int) -> CodeTable:
    bad = validate_params(f, B, E, K)
    if bad:
        raise CodeError(f"invalid parameters for {f}: {', '.join(bad)}")
    q = f.q
    add, mul = f.add_table, f.mul_table
    neg = np.array([ff_neg(f, x) for x in range(q)])
    lin = add[mul[B][:, None], mul[E][None, :]]
    entries = add[K, neg[lin]]
    return CodeTable(entries, params=CodeParams(f, B, E, K),
                     name=f"GF{q}-B{B}E{E}K{K}")


def alpha_params(f: FieldSpec) -> tuple[int, int]:
    """``(alpha, alpha^2)`` for a primitive cube root of unity ``alpha``.

    Of the two primitive cube roots the smaller index is taken; the other
    one gives the reversed code.
    """
    if (f.q - 1) % 3:
        raise CodeError(f"3 does not divide q-1 for {f}")
    third = (f.q - 1) // 3
    roots = sorted((f.pw[third], f.pw[2 * third]))
    a = roots[0]
    return a, ff_mul(f, a, a)


def params_RC(f: FieldSpec, B: int, E: int, K: int, P: int) -> tuple[int, int]:
    R = ff_sub(f, K, ff_mul(f, B, P))
    C = ff_add(f, K, ff_mul(f, E, P))
    return R, C


def insert_extend(base: CodeTable, P: int) -> CodeTable:
    """Extend a GF(q) base code by the transversal ``b - e = P``.

    The new symbol is ``q``.  Each transversal cell becomes ``q`` and its old
    value moves to the new row (same column) and the new column (same row);
    the corner is ``q``.  When ``B + 1 + E = 0`` the new row reads ``R + e``
    and the new column ``C + b``.
    """
    if base.params is None or base.params.P is not None:
        raise CodeError("insertion needs an unextended base code with parameters")
    pr = base.params
    f = pr.field
    if f.p == 2:
        raise CodeError("insertion is not available in characteristic 2")
    f.check(P)
    if P == 0:
        raise CodeError("P must be nonzero")
    R, C = params_RC(f, pr.B, pr.E, pr.K, P)
    if R == 0:
        raise CodeError("R = K - B*P is zero (twin errors at the word end)")
    if C == 0:
        raise CodeError("C = K + E*P is zero (twin errors at the word start)")
    q = f.q
    out = np.empty((q + 1, q + 1), dtype=np.int64)
    out[:q, :q] = base.entries
    for b in range(q):
        for e in range(q):
            if ff_sub(f, b, e) == P:
                out[b, e] = q
    for e in range(q):
        out[q, e] = base.entries[ff_add(f, e, P), e]
    for b in range(q):
        out[b, q] = base.entries[b, ff_sub(f, b, P)]
    out[q, q] = q
    params = CodeParams(f, pr.B, pr.E, pr.K, P)
    return CodeTable(out, params=params, name=f"{base.name}P{P}")


def cyclic_safe(params: CodeParams, P: int | None = None) -> bool:
    """True when insertion with ``P`` adds no cyclic errors."""
    f = params.field
    P = params.P if P is None else P
    if P is None:
        raise CodeError("cyclic_safe needs P")
    k1 = ff_mul(f, ff_sub(f, params.B, 1), P)
    k2 = ff_mul(f, ff_sub(f, 1, params.E), P)
    return params.K != k1 and params.K != k2


_SEQ_RULES = {
    "GF4": (4, 2, "mul", 3),
    "GF9": (9, 4, "add", 6),
    "GF37": (37, 10, "mul", 26),
}


def weight_sequence(field_tag: str, n: int) -> list[int]:
    """Position weights for longer codewords over GF(4), GF(9) or GF(37)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    try:
        q, first, op, step = _SEQ_RULES[field_tag.upper()]
    except KeyError:
        raise ValueError(f"unknown field tag {field_tag!r}") from None
    f = build_field(q)
    out = [first]
    for _ in range(n - 1):
        out.append(ff_mul(f, out[-1], step) if op == "mul" else ff_add(f, out[-1], step))
    return out


def solve_missing(table: CodeTable, word: Sequence[int | None]) -> int:
    """The symbol completing a word with exactly one unknown (``None``) position."""
    if len(word) != 3:
        raise CodeError("words have length 3")
    holes = [i for i, x in enumerate(word) if x is None]
    if len(holes) != 1:
        raise CodeError("exactly one position must be unknown")
    b, m, e = word
    Q = table.Q
    for x in word:
        if x is not None and not 0 <= x < Q:
            raise CodeError(f"symbol {x} outside 0..{Q - 1}")
    pr = table.params
    hole = holes[0]
    if hole == 1:
        return int(table.entries[b, e])
    if pr is not None and pr.P is None and table.provenance == "constructed":
        f = pr.field
        # B*b + m + E*e = K
        if hole == 0:
            rest = ff_sub(f, ff_sub(f, pr.K, m), ff_mul(f, pr.E, e))
            return ff_mul(f, rest, f.pw[(-f.lg[pr.B]) % (f.q - 1)])
        rest = ff_sub(f, ff_sub(f, pr.K, m), ff_mul(f, pr.B, b))
        return ff_mul(f, rest, f.pw[(-f.lg[pr.E]) % (f.q - 1)])
    if hole == 0:
        hits = np.flatnonzero(table.entries[:, e] == m)
    else:
        hits = np.flatnonzero(table.entries[b, :] == m)
    if len(hits) != 1:
        raise CodeError(f"no unique completion for {tuple(word)}; table is not latin")
    return int(hits[0])


def _rebuild(f: FieldSpec, B: int, E: int, K: int, P: int | None) -> CodeTable:
    base = base_code(f, B, E, K)
    return base if P is None else insert_extend(base, P)


def reverse_code(table: CodeTable) -> CodeTable:
    """The code with every codeword ``b m e`` read as ``e m b``.

    The result carries the parameters ``[E, B, K, -P]``.
    """
    pr = _require_params(table)
    f = pr.field
    P = None if pr.P is None else ff_neg(f, pr.P)
    return CodeTable(table.entries.T.copy(), params=CodeParams(f, pr.E, pr.B, pr.K, P),
                     name=f"reverse({table.name})")


def relabel_N(table: CodeTable) -> CodeTable:
    """Apply ``N(x) = 1 - x`` to all three positions (the added symbol is fixed).

    For ``B + 1 + E = 0`` the result carries the parameters ``[B, E, -K, -P]``.
    """
    pr = _require_params(table)
    f = pr.field
    if ff_add(f, ff_add(f, pr.B, 1), pr.E) != 0:
        raise CodeError("relabeling by N needs B + 1 + E = 0")
    q = f.q
    N = np.array([ff_sub(f, 1, x) for x in range(q)] + [q] * (table.Q - q))
    out = np.empty_like(table.entries)
    out[np.ix_(N, N)] = N[table.entries]
    P = None if pr.P is None else ff_neg(f, pr.P)
    return CodeTable(out, params=CodeParams(f, pr.B, pr.E, ff_neg(f, pr.K), P),
                     name=f"N({table.name})")


def _require_params(table: CodeTable) -> CodeParams:
    if table.params is None:
        raise CodeError("table carries no construction parameters")
    return table.params


def linear_code(Q: int, wb: int, wm: int, we: int, K: int, name: str = "") -> CodeTable:
    """Table of ``wb*b + wm*m + we*e = K (mod Q)`` with ``wm`` a unit mod ``Q``."""
    try:
        inv = pow(wm, -1, Q)
    except ValueError:
        raise CodeError(f"middle weight {wm} is not invertible mod {Q}") from None
    b, e = np.meshgrid(np.arange(Q), np.arange(Q), indexing="ij")
    entries = ((K - wb * b - we * e) * inv) % Q
    return CodeTable(entries, provenance="congruence", name=name)
