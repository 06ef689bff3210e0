"""Exhaustive error-pattern analysis of length-3 codes.

Every count is the number of unordered pairs of distinct codewords that one
error of the given kind turns into each other:

==================  ===================================
single              words differing in one position
transposition       abc <-> acb, abc <-> bac
twin                abb <-> acc, aac <-> bbc
jump_transposition  abc <-> cba
jump_twin           aca <-> bcb
triple              aaa <-> bbb
phonetic_left       1xe <-> x0e, x a digit 2..9
phonetic_right      b1x <-> bx0, x a digit 2..9
cyclic              abc <-> bca with a, b, c distinct
permutation         any two words over the same multiset
==================  ===================================
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, fields
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

from . import kernels
from .codegen import CodeError, CodeTable, WordCode

Code = Union[CodeTable, WordCode]

__all__ = [
    "ErrorReport",
    "is_check_table",
    "count_errors",
    "count_phonetic",
    "find_error_pairs",
    "almost_disjoint",
    "structural_counts",
    "permutation_breakdown",
    "CATEGORIES",
]

CATEGORIES = kernels.CATEGORIES


@dataclass(frozen=True)
class ErrorReport:
    single: int = 0
    transposition: int = 0
    twin: int = 0
    jump_transposition: int = 0
    jump_twin: int = 0
    triple: int = 0
    phonetic_left: int = 0
    phonetic_right: int = 0
    cyclic: int = 0
    permutation: int = 0
    phonetic_applicable: bool = True

    @property
    def phonetic(self) -> int:
        return self.phonetic_left + self.phonetic_right

    def counts(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in CATEGORIES}

    def nonzero(self, include_phonetic: bool = True) -> dict[str, int]:
        skip = () if include_phonetic else ("phonetic_left", "phonetic_right")
        return {k: v for k, v in self.counts().items() if v and k not in skip}

    def same_counts(self, other: "ErrorReport") -> bool:
        return self.counts() == other.counts()

    def as_dict(self) -> dict:
        d = asdict(self)
        d["phonetic"] = self.phonetic
        return d


@dataclass(frozen=True)
class TableCheck:
    ok: bool
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_check_table(table: CodeTable | np.ndarray) -> TableCheck:
    """Whether every row and column is a permutation of the alphabet."""
    entries = table.entries if isinstance(table, CodeTable) else np.asarray(table)
    Q = entries.shape[0]
    if entries.shape != (Q, Q):
        return TableCheck(False, f"table is not square: {entries.shape}")
    for b in range(Q):
        seen = set()
        for e in range(Q):
            x = int(entries[b, e])
            if x in seen:
                return TableCheck(False, f"symbol {x} repeated in row {b}")
            seen.add(x)
    for e in range(Q):
        seen = set()
        for b in range(Q):
            x = int(entries[b, e])
            if x in seen:
                return TableCheck(False, f"symbol {x} repeated in column {e}")
            seen.add(x)
    return TableCheck(True)


def _phonetic_applicable(code: Code) -> bool:
    # alphabets rendered as letters only (GF(25), base 26) have no spoken numerals
    return code.Q not in (25, 26)


def count_errors(code: Code, backend: str | None = None) -> ErrorReport:
    """Undetected pair counts by exhaustive enumeration of the word cube."""
    if isinstance(code, CodeTable):
        check = is_check_table(code)
        if not check:
            raise CodeError(f"not a check table: {check.message}")
    counts = kernels.count_patterns(code.members(), backend=backend)
    return ErrorReport(**{name: int(c) for name, c in zip(CATEGORIES, counts)},
                       phonetic_applicable=_phonetic_applicable(code))


def count_phonetic(table: CodeTable) -> tuple[int, int]:
    """``(P_L, P_R)`` read off the table.

    ``P_L`` counts ends ``e`` with ``M(M(1, e), e) = 0``; ``P_R`` counts
    beginnings ``b`` with ``M(b, M(b, 0)) = 1``.  In both the confused
    symbol ``x`` must be a digit 2..9.
    """
    M = table.entries
    if table.Q < 2:
        raise CodeError("phonetic errors need the symbols 0 and 1")
    digit = range(2, kernels.PHONETIC_LIMIT)
    left = sum(1 for e in range(table.Q) if M[1, e] in digit and M[M[1, e], e] == 0)
    right = sum(1 for b in range(table.Q) if M[b, 0] in digit and M[b, M[b, 0]] == 1)
    return left, right


def _pattern_pairs(category: str, Q: int) -> Iterable[tuple[tuple, tuple]]:
    r = range(Q)
    if category == "single":
        for pos in range(3):
            for w in ((a, b, c) for a in r for b in r for c in r):
                for s in range(w[pos] + 1, Q):
                    v = list(w)
                    v[pos] = s
                    yield w, tuple(v)
    elif category == "transposition":
        for a in r:
            for b in r:
                for c in r:
                    if b < c:
                        yield (a, b, c), (a, c, b)
                    if a < b:
                        yield (a, b, c), (b, a, c)
    elif category == "twin":
        for a in r:
            for b in r:
                for c in range(b + 1, Q):
                    yield (a, b, b), (a, c, c)
                    yield (b, b, a), (c, c, a)
    elif category == "jump_transposition":
        for a in r:
            for b in r:
                for c in range(a + 1, Q):
                    yield (a, b, c), (c, b, a)
    elif category == "jump_twin":
        for c in r:
            for a in r:
                for b in range(a + 1, Q):
                    yield (a, c, a), (b, c, b)
    elif category == "triple":
        for a in r:
            for b in range(a + 1, Q):
                yield (a, a, a), (b, b, b)
    elif category == "phonetic_left":
        for x in range(2, min(Q, kernels.PHONETIC_LIMIT)):
            for e in r:
                yield (1, x, e), (x, 0, e)
    elif category == "phonetic_right":
        for b in r:
            for x in range(2, min(Q, kernels.PHONETIC_LIMIT)):
                yield (b, 1, x), (b, x, 0)
    elif category == "cyclic":
        for a in r:
            for b in r:
                for c in r:
                    if len({a, b, c}) == 3:
                        yield (a, b, c), (b, c, a)
    else:
        raise ValueError(f"unknown category {category!r}")


def find_error_pairs(code: Code, category: str) -> list[tuple[tuple, tuple]]:
    """Explicit undetected pairs, each pair and the list sorted."""
    members = code.members()
    if category == "permutation":
        groups: dict[tuple, list] = {}
        for w in code.codewords():
            groups.setdefault(tuple(sorted(w)), []).append(tuple(w))
        out = [tuple(sorted(p)) for g in groups.values() for p in combinations(sorted(g), 2)]
        return sorted(out)
    out = set()
    for u, v in _pattern_pairs(category, code.Q):
        if u != v and members[u] and members[v]:
            out.add(tuple(sorted((u, v))))
    return sorted(out)


def permutation_breakdown(code: Code) -> dict[str, int]:
    """Permutation pairs split by the rearrangement relating the two words.

    A length-3 rearrangement is an adjacent swap, the outer swap or a
    rotation, so the three parts always add up to the permutation count.
    """
    out = {"transposition": 0, "jump_transposition": 0, "cyclic": 0}
    for u, v in find_error_pairs(code, "permutation"):
        diff = [i for i in range(3) if u[i] != v[i]]
        if diff == [0, 1] or diff == [1, 2]:
            out["transposition"] += 1
        elif diff == [0, 2]:
            out["jump_transposition"] += 1
        else:
            out["cyclic"] += 1
    return out


@dataclass(frozen=True)
class DisjointResult:
    ok: bool
    shared: frozenset
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def almost_disjoint(codes: Sequence[Code], strict: bool = False) -> DisjointResult:
    """Whether all pairwise intersections equal one common word (or are empty)."""
    if not codes:
        return DisjointResult(True, frozenset())
    Q = codes[0].Q
    if any(c.Q != Q for c in codes):
        raise CodeError("codes must share the alphabet size")
    sets = [np.asarray(c.members()) for c in codes]
    common = None
    for i, j in combinations(range(len(sets)), 2):
        inter = frozenset(tuple(int(x) for x in w) for w in np.argwhere(sets[i] & sets[j]))
        if strict and inter:
            return DisjointResult(False, inter, f"codes {i} and {j} share {len(inter)} words")
        if not strict:
            if len(inter) != 1:
                return DisjointResult(False, inter,
                                      f"codes {i} and {j} share {len(inter)} words")
            if common is None:
                common = inter
            elif inter != common:
                return DisjointResult(False, inter, f"codes {i} and {j} share a different word")
    return DisjointResult(True, common or frozenset())


def structural_counts(table: CodeTable) -> dict[str, int]:
    """Counts derived from the row, column and diagonal structure of a latin table.

    Independent of the cube enumeration: transpositions are 2-cycles of the
    row and column permutations, twins are pairs of their fixed points, jump
    transpositions are symmetric off-diagonal pairs, jump twins are repeated
    diagonal values, triples are pairs of diagonal fixed points, and cyclic
    errors are the ``(a, b)`` with ``M(M(a, b), a) = b`` over distinct symbols.
    """
    if not is_check_table(table):
        raise CodeError("structural counts need a latin table")
    M = table.entries
    Q = table.Q
    out = Counter()
    for a in range(Q):
        row = [int(M[a, e]) for e in range(Q)]
        col = [int(M[b, a]) for b in range(Q)]
        for perm in (row, col):
            out["transposition"] += sum(1 for x in range(Q)
                                        if perm[x] != x and perm[perm[x]] == x) // 2
            fixed = sum(1 for x in range(Q) if perm[x] == x)
            out["twin"] += fixed * (fixed - 1) // 2
    for a in range(Q):
        for c in range(a + 1, Q):
            if M[a, c] == M[c, a]:
                out["jump_transposition"] += 1
    diag = Counter(int(M[a, a]) for a in range(Q))
    out["jump_twin"] = sum(n * (n - 1) // 2 for n in diag.values())
    fixed = sum(1 for a in range(Q) if M[a, a] == a)
    out["triple"] = fixed * (fixed - 1) // 2
    left, right = count_phonetic(table)
    out["phonetic_left"] = left
    out["phonetic_right"] = right
    for a in range(Q):
        for b in range(Q):
            x = int(M[a, b])
            if len({a, x, b}) == 3 and M[x, a] == b:
                out["cyclic"] += 1
    out["single"] = 0
    return {k: out[k] for k in CATEGORIES if k != "permutation"}
