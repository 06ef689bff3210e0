"""Code families and compositions.

Covers almost-disjoint decimal families, the 24 base-26 codes, direct
products, the base-36 CRT codes, the mod-37 alphanumeric codes and grouped
("tag") codes built from disjoint component collections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product as iproduct
from math import prod
from typing import Sequence, Union

import numpy as np

from .analysis import ErrorReport, count_errors, count_phonetic
from .catalog import base4_code, encode_word, decode_word
from .codegen import (
    CodeError,
    CodeTable,
    WordCode,
    base_code,
    cyclic_safe,
    insert_extend,
    params_RC,
)
from .galois import build_field

Code = Union[CodeTable, WordCode]

__all__ = [
    "FamilySpec",
    "SEQ38",
    "SEQ47",
    "check_family",
    "family_seq",
    "base26_family",
    "product",
    "crt_index",
    "p7",
    "crt36",
    "mod37_code",
    "without_word",
    "GroupedCodeSpec",
    "GroupedCode",
    "grouped",
    "grouped_preset",
    "GROUPED_PRESETS",
    "cyclic_index_code",
]


@dataclass(frozen=True)
class FamilySpec:
    name: str
    B: int
    E: int
    pairs: tuple[tuple[int, int], ...]          # (K, P) per code
    phonetic: tuple[tuple[int, int], ...] = ()  # printed (P_L, P_R) per code


SEQ38 = FamilySpec(
    "seq38", 3, 8,
    pairs=((5, 5), (1, 1), (2, 2), (7, 7), (3, 3), (4, 4), (6, 6), (8, 8)),
    phonetic=((0, 0), (1, 1), (1, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2)),
)
SEQ47 = FamilySpec(
    "seq47", 4, 7,
    pairs=((3, 7), (1, 3), (5, 2), (6, 1), (4, 4), (2, 5)),
    phonetic=((0, 0), (0, 1), (1, 0), (1, 1), (1, 1), (1, 2)),
)
_FAMILIES = {"seq38": SEQ38, "seq47": SEQ47}


def check_family(spec: FamilySpec) -> list[str]:
    """Violations of the almost-disjoint parameter rules (empty when fine)."""
    f = build_field(9)
    problems = []
    Ks = [k for k, _ in spec.pairs]
    Ps = [p for _, p in spec.pairs]
    RC = [params_RC(f, spec.B, spec.E, k, p) for k, p in spec.pairs]
    Rs = [r for r, _ in RC]
    Cs = [c for _, c in RC]
    for label, vals in (("K", Ks), ("P", Ps), ("R", Rs), ("C", Cs)):
        if len(set(vals)) != len(vals):
            problems.append(f"repeated {label} values {vals}")
    if 0 in Rs:
        problems.append("some R = 0")
    if 0 in Cs:
        problems.append("some C = 0")
    return problems


def family_seq(name: str) -> list[CodeTable]:
    try:
        spec = _FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown family {name!r}; choose from {sorted(_FAMILIES)}") from None
    bad = check_family(spec)
    if bad:
        raise CodeError(f"{name}: {'; '.join(bad)}")
    f = build_field(9)
    return [insert_extend(base_code(f, spec.B, spec.E, K), P) for K, P in spec.pairs]


def family_phonetics(name: str) -> list[tuple[int, int]]:
    return [count_phonetic(t) for t in family_seq(name)]


@lru_cache(maxsize=None)
def base26_family() -> tuple[CodeTable, ...]:
    """The 24 codes ``K = P`` over GF(25) extended by ``z``, ordered by ``K``."""
    f = build_field(25)
    out = []
    for K in f.nonzero:
        t = insert_extend(base_code(f, 11, 18, K), K)
        if not cyclic_safe(t.params):
            raise CodeError(f"K=P={K} does not meet the cyclic condition")
        out.append(t)
    return tuple(out)


def _undetected_all(report: ErrorReport, allow=()) -> dict[str, int]:
    skip = set(allow) | {"phonetic_left", "phonetic_right", "permutation"}
    return {k: v for k, v in report.counts().items() if v and k not in skip}


def _has_triple_words(code: Code) -> bool:
    m = code.members()
    return any(m[a, a, a] for a in range(code.Q))


def product(c1: CodeTable, c2: CodeTable, check: bool = True) -> CodeTable:
    """Direct product; the pair ``(x1, x2)`` is the symbol ``x1 * Q2 + x2``."""
    if check:
        bad1 = _undetected_all(count_errors(c1))
        if bad1 or _has_triple_words(c1):
            raise CodeError(f"first factor must detect all errors with no triple words: {bad1}")
        bad2 = _undetected_all(count_errors(c2), allow=("triple", "cyclic"))
        if bad2:
            raise CodeError(f"second factor may only miss triple and cyclic errors: {bad2}")
    Q1, Q2 = c1.Q, c2.Q
    entries = (c1.entries[:, None, :, None] * Q2 + c2.entries[None, :, None, :])
    return CodeTable(entries.reshape(Q1 * Q2, Q1 * Q2), provenance="composed",
                     name=f"({c1.name})x({c2.name})")


def crt_index(x4: int, x9: int) -> int:
    """The base-36 symbol congruent to ``x4`` mod 4 and ``x9`` mod 9."""
    return (9 * (x4 % 4) + 64 * (x9 % 9)) % 36


def p7(x: int) -> int:
    """Involution exchanging the characters ``7`` and ``p`` (25)."""
    return {7: 25, 25: 7}.get(x, x)


_P7 = np.array([p7(x) for x in range(36)])


def crt36(i: int, j: int, relabel: bool = True) -> CodeTable:
    """``C4^i x C9^j`` on the base-36 alphabet through the CRT map."""
    if i not in (1, 2, 3):
        raise CodeError("i (K4) must be a nonzero element of GF(4)")
    if j not in range(9):
        raise CodeError("j (K9) must be an element of GF(9)")
    prod_code = product(base4_code(i), base_code(build_field(9), 4, 7, j))
    # product symbol x4 * 9 + x9 -> base-36 symbol congruent to x4 mod 4, x9 mod 9
    to36 = crt_index_array(np.arange(36) // 9, np.arange(36) % 9)
    from36 = np.argsort(to36)
    raw = to36[prod_code.entries[np.ix_(from36, from36)]]
    if relabel:
        raw = _P7[raw[np.ix_(_P7, _P7)]]
    return CodeTable(raw, provenance="composed", name=f"crt36-i{i}j{j}")


def crt_index_array(x4: np.ndarray, x9: np.ndarray) -> np.ndarray:
    return (9 * (x4 % 4) + 64 * (x9 % 9)) % 36


def mod37_code(K: int) -> WordCode:
    """Words ``10b + m + 26e = K (mod 37)`` with every symbol at most 35."""
    if not 1 <= K <= 36:
        raise CodeError("K must lie in 1..36")
    words = []
    for b in range(36):
        for e in range(36):
            m = (K - 10 * b - 26 * e) % 37
            if m != 36:
                words.append((b, m, e))
    return WordCode(36, words, name=f"mod37-K{K}")


def without_word(code: Code, word: Sequence[int]) -> WordCode:
    words = [w for w in code.codewords() if tuple(w) != tuple(word)]
    return WordCode(code.Q, words, name=f"{code.name}-{''.join(map(str, word))}")


def cyclic_index_code(k: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, (i + 1) % k) for i in range(k))


def _min_distance(S) -> int:
    best = None
    for s, t in combinations(S, 2):
        d = sum(a != b for a, b in zip(s, t))
        best = d if best is None else min(best, d)
    return best if best is not None else len(next(iter(S), ()))


@dataclass(frozen=True)
class GroupedCodeSpec:
    """Component collections ``groups[i][j]`` and the index code ``S``."""

    groups: tuple[tuple[Code, ...], ...]
    S: tuple[tuple[int, ...], ...]
    name: str = ""
    alphabet: int | None = None

    @property
    def ell(self) -> int:
        return len(self.groups)

    @property
    def k(self) -> int:
        return len(self.groups[0])


@dataclass
class GroupDetection:
    per_group: list[dict[str, int]]
    undetected_single_group: dict[str, int]
    s_min_distance: int
    s_detects_transposition: bool
    group_reversal_detecting: bool


@dataclass
class GroupedCode:
    spec: GroupedCodeSpec
    _sizes: list[list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        spec = self.spec
        if spec.ell < 1 or any(len(g) != spec.k for g in spec.groups):
            raise CodeError("every group needs the same number k of component codes")
        for s in spec.S:
            if len(s) != spec.ell or not all(0 <= x < spec.k for x in s):
                raise CodeError(f"index word {s} is not in Z_{spec.k}^{spec.ell}")
        if len(spec.S) > 1 and _min_distance(spec.S) < 2:
            raise CodeError("index code S must detect single errors (distance >= 2)")
        for i, group in enumerate(spec.groups):
            cubes = [np.asarray(c.members()) for c in group]
            for a, b in combinations(range(len(cubes)), 2):
                if (cubes[a] & cubes[b]).any():
                    raise CodeError(f"codes {a} and {b} of group {i} are not disjoint")
        self._sizes = [[int(np.asarray(c.members()).sum()) for c in g] for g in spec.groups]

    def count(self) -> int:
        return sum(prod(self._sizes[i][s[i]] for i in range(self.spec.ell)) for s in self.spec.S)

    def locate(self, word: Sequence[int]) -> list[int | None]:
        """Index of the component code holding each group, ``None`` if none does."""
        spec = self.spec
        if len(word) != 3 * spec.ell:
            raise CodeError(f"grouped words have length {3 * spec.ell}")
        out = []
        for i, group in enumerate(spec.groups):
            w = tuple(word[3 * i:3 * i + 3])
            hit = next((j for j, c in enumerate(group) if c.contains(w)), None)
            out.append(hit)
        return out

    def contains(self, word: Sequence[int]) -> bool:
        idx = self.locate(word)
        return None not in idx and tuple(idx) in set(self.spec.S)

    def diagnose(self, word: Sequence[int]) -> str:
        idx = self.locate(word)
        bad = [i for i, x in enumerate(idx) if x is None]
        if bad:
            return "group " + ", ".join(str(i + 1) for i in bad) + " not a codeword"
        if tuple(idx) not in set(self.spec.S):
            return f"component codes {tuple(idx)} do not form an index word"
        return "valid"

    def codewords(self):
        """Iterate over all codewords (only sensible for small specs)."""
        spec = self.spec
        for s in spec.S:
            parts = [spec.groups[i][s[i]].codewords() for i in range(spec.ell)]
            for combo in iproduct(*parts):
                yield tuple(x for w in combo for x in w)

    def detect_report(self) -> GroupDetection:
        """Undetected errors confined to one group, plus index-code properties.

        With ``S`` at distance 2 a change in one group keeps the index word, so
        such an error is undetected exactly when the component code misses it.
        """
        spec = self.spec
        reports = [[count_errors(c) for c in g] for g in spec.groups]
        per_group = []
        total = {k: 0 for k in ErrorReport().counts()}
        for i in range(spec.ell):
            worst = {k: max(r.counts()[k] for r in reports[i]) for k in total}
            per_group.append(worst)
        for s in spec.S:
            for i in range(spec.ell):
                others = prod(self._sizes[j][s[j]] for j in range(spec.ell) if j != i)
                for k, v in reports[i][s[i]].counts().items():
                    total[k] += v * others
        Sset = set(spec.S)
        transp = all(
            tuple(s[:a] + (s[a + 1], s[a]) + s[a + 2:]) not in Sset or s[a] == s[a + 1]
            for s in spec.S for a in range(spec.ell - 1)
        )
        same_collections = all(
            all(c1 is c2 or np.array_equal(np.asarray(c1.members()), np.asarray(c2.members()))
                for c1, c2 in zip(spec.groups[0], g))
            for g in spec.groups[1:]
        )
        return GroupDetection(per_group, total, _min_distance(spec.S), transp,
                              transp and same_collections)


def grouped(spec: GroupedCodeSpec) -> GroupedCode:
    return GroupedCode(spec)


@dataclass(frozen=True)
class GroupedPreset:
    name: str
    alphabet: int
    printed_count: int | None
    printed_percent: str | None
    note: str = ""


GROUPED_PRESETS = {
    "base10": GroupedPreset("base10", 10, 78_408, "78%"),
    "base26": GroupedPreset("base26", 26, None, "92%"),
    "base26+zzz": GroupedPreset(
        "base26+zzz", 26, 10_936_351, "92%",
        "zzz kept in the two component codes of the index word (0, 1); keeping it in "
        "component 0 of both groups instead gives 10,936,350"),
    "base36crt": GroupedPreset(
        "base36crt", 36, 40_310_784, "75%",
        "printed figure equals 1296^2 x 24, not the k = 27 count"),
    "base37": GroupedPreset(
        "base37", 36, 58_786_560, "94.6%",
        "printed figure equals 36^4 x 35, i.e. unfiltered codes; 94.6% is 97.3% squared"),
}


def _base26_components(keep: set[int]) -> tuple[Code, ...]:
    zzz = (25, 25, 25)
    return tuple(t if i in keep else without_word(t, zzz)
                 for i, t in enumerate(base26_family()))


@lru_cache(maxsize=None)
def grouped_preset(name: str) -> GroupedCode:
    if name == "base10":
        comps = tuple(without_word(t, (9, 9, 9)) for t in family_seq("seq38"))
        spec = GroupedCodeSpec((comps, comps), cyclic_index_code(8), name, 10)
    elif name == "base26":
        comps = _base26_components(set())
        spec = GroupedCodeSpec((comps, comps), cyclic_index_code(24), name, 26)
    elif name == "base26+zzz":
        g0 = _base26_components({0})
        g1 = _base26_components({1})
        spec = GroupedCodeSpec((g0, g1), cyclic_index_code(24), name, 26)
    elif name == "base26+zzz-literal":
        g = _base26_components({0})
        spec = GroupedCodeSpec((g, g), cyclic_index_code(24), name, 26)
    elif name == "base36crt":
        comps = tuple(crt36(i, j) for i in (1, 2, 3) for j in range(9))
        spec = GroupedCodeSpec((comps, comps), cyclic_index_code(27), name, 36)
    elif name == "base37":
        comps = tuple(mod37_code(K) for K in range(1, 36))
        spec = GroupedCodeSpec((comps, comps), cyclic_index_code(35), name, 36)
    else:
        raise KeyError(f"unknown grouped preset {name!r}; choose from "
                       f"{', '.join(GROUPED_PRESETS)}")
    return GroupedCode(spec)


def parse_grouped_word(text: str, code: GroupedCode) -> list[int]:
    Q = code.spec.alphabet
    return [x for x in decode_word(text.replace(" ", ""), Q)]


def format_grouped_word(word: Sequence[int], Q: int) -> str:
    return " ".join(encode_word(word[i:i + 3], Q) for i in range(0, len(word), 3))
