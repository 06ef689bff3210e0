"""Hot enumeration kernels over a codeword membership cube.

A code over ``Q`` symbols is handed in as a boolean ``(Q, Q, Q)`` array whose
``[b, m, e]`` entry says whether ``b m e`` is a codeword.  Each kernel exists
twice: a numba ``@njit`` loop and a pure-numpy fallback.  The numpy path is
used when numba is missing or when ``CHECKDIGIT3_DISABLE_NUMBA`` is set to a
non-empty value other than ``0``; both must return identical counts.
"""

from __future__ import annotations

import os

import numpy as np

# Order of the counts returned by ``count_patterns``.
CATEGORIES = (
    "single",
    "transposition",
    "twin",
    "jump_transposition",
    "jump_twin",
    "triple",
    "phonetic_left",
    "phonetic_right",
    "cyclic",
    "permutation",
)

# Phonetic confusions (thirteen / thirty) only exist for spoken digits 2..9,
# so symbols from 10 upwards never play the role of X.
PHONETIC_LIMIT = 10

_flag = os.environ.get("CHECKDIGIT3_DISABLE_NUMBA", "")
_DISABLED = _flag not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _count_patterns_loops(m):
    Q = m.shape[0]
    out = np.zeros(10, dtype=np.int64)

    # single: codewords on a common line of the cube
    for i in range(Q):
        for j in range(Q):
            c0 = 0
            c1 = 0
            c2 = 0
            for k in range(Q):
                if m[k, i, j]:
                    c0 += 1
                if m[i, k, j]:
                    c1 += 1
                if m[i, j, k]:
                    c2 += 1
            out[0] += c0 * (c0 - 1) // 2 + c1 * (c1 - 1) // 2 + c2 * (c2 - 1) // 2

    for a in range(Q):
        for b in range(Q):
            for c in range(Q):
                if b < c and m[a, b, c] and m[a, c, b]:
                    out[1] += 1
                if a < b and m[a, b, c] and m[b, a, c]:
                    out[1] += 1
                if a < c and m[a, b, c] and m[c, b, a]:
                    out[3] += 1
                if a != b and b != c and a != c and m[a, b, c] and m[b, c, a]:
                    out[8] += 1
            for c in range(b + 1, Q):
                if m[a, b, b] and m[a, c, c]:
                    out[2] += 1
        for b in range(a + 1, Q):
            if m[a, a, a] and m[b, b, b]:
                out[5] += 1
            for c in range(Q):
                if m[a, a, c] and m[b, b, c]:
                    out[2] += 1
                if m[a, c, a] and m[b, c, b]:
                    out[4] += 1

    if Q >= 2:
        for x in range(2, min(Q, PHONETIC_LIMIT)):
            for y in range(Q):
                if m[1, x, y] and m[x, 0, y]:
                    out[6] += 1
                if m[y, 1, x] and m[y, x, 0]:
                    out[7] += 1

    # permutation: pairs of distinct codewords over the same multiset
    for a in range(Q):
        for b in range(a, Q):
            for c in range(b, Q):
                if a == b and b == c:
                    continue
                if a == b or b == c:
                    # two distinct arrangements collapse: x x y has 3 orderings
                    if a == b:
                        x, y = a, c
                    else:
                        x, y = b, a
                    n = int(m[x, x, y]) + int(m[x, y, x]) + int(m[y, x, x])
                else:
                    n = (int(m[a, b, c]) + int(m[a, c, b]) + int(m[b, a, c])
                         + int(m[b, c, a]) + int(m[c, a, b]) + int(m[c, b, a]))
                out[9] += n * (n - 1) // 2
    return out


def _phonetic_loops(m):
    Q = m.shape[0]
    left = 0
    right = 0
    for x in range(2, min(Q, PHONETIC_LIMIT)):
        for y in range(Q):
            if m[1, x, y] and m[x, 0, y]:
                left += 1
            if m[y, 1, x] and m[y, x, 0]:
                right += 1
    return left, right


def _count_patterns_numpy(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=bool)
    Q = m.shape[0]
    out = np.zeros(10, dtype=np.int64)
    mi = m.astype(np.int64)

    for axis in range(3):
        c = mi.sum(axis=axis)
        out[0] += int((c * (c - 1) // 2).sum())

    upper = np.triu(np.ones((Q, Q), dtype=bool), k=1)
    # abc <-> acb, b < c
    out[1] += int((m & m.transpose(0, 2, 1) & upper[None, :, :]).sum())
    # abc <-> bac, a < b
    out[1] += int((m & m.transpose(1, 0, 2) & upper[:, :, None]).sum())

    idx = np.arange(Q)
    abb = m[:, idx, idx]            # [a, b] -> m[a, b, b]
    out[2] += int(((abb[:, :, None] & abb[:, None, :]) & upper[None, :, :]).sum())
    aac = m[idx, idx, :]            # [a, c] -> m[a, a, c]
    out[2] += int(((aac[:, None, :] & aac[None, :, :]) & upper[:, :, None]).sum())

    # abc <-> cba, a < c
    out[3] = int((m & m.transpose(2, 1, 0) & upper[:, None, :]).sum())

    aca = m[idx, :, idx]            # [a, c] -> m[a, c, a]
    out[4] = int(((aca[:, None, :] & aca[None, :, :]) & upper[:, :, None]).sum())

    diag = m[idx, idx, idx]
    k = int(diag.sum())
    out[5] = k * (k - 1) // 2

    if Q > 2:
        hi = min(Q, PHONETIC_LIMIT)
        out[6] = int((m[1, 2:hi, :] & m[2:hi, 0, :]).sum())
        out[7] = int((m[:, 1, 2:hi] & m[:, 2:hi, 0]).sum())

    a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    distinct = (a != b) & (b != c) & (a != c)
    out[8] = int((m & m.transpose(1, 2, 0) & distinct).sum())

    words = np.argwhere(m)
    if len(words):
        keys = np.sort(words, axis=1)
        keys = (keys[:, 0] * Q + keys[:, 1]) * Q + keys[:, 2]
        _, counts = np.unique(keys, return_counts=True)
        out[9] = int((counts * (counts - 1) // 2).sum())
    return out


def _phonetic_numpy(m: np.ndarray) -> tuple[int, int]:
    m = np.asarray(m, dtype=bool)
    if m.shape[0] <= 2:
        return 0, 0
    hi = min(m.shape[0], PHONETIC_LIMIT)
    return int((m[1, 2:hi, :] & m[2:hi, 0, :]).sum()), int((m[:, 1, 2:hi] & m[:, 2:hi, 0]).sum())


def _table_members_loops(entries):
    Q = entries.shape[0]
    m = np.zeros((Q, Q, Q), dtype=np.bool_)
    for b in range(Q):
        for e in range(Q):
            m[b, entries[b, e], e] = True
    return m


def _table_members_numpy(entries: np.ndarray) -> np.ndarray:
    Q = entries.shape[0]
    m = np.zeros((Q, Q, Q), dtype=bool)
    b, e = np.meshgrid(np.arange(Q), np.arange(Q), indexing="ij")
    m[b, entries, e] = True
    return m


if HAVE_NUMBA:
    _count_patterns_jit = njit(cache=True)(_count_patterns_loops)
    _phonetic_jit = njit(cache=True)(_phonetic_loops)
    _table_members_jit = njit(cache=True)(_table_members_loops)


def count_patterns(members: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Undetected pair counts for every category in ``CATEGORIES``."""
    backend = backend or BACKEND
    members = np.ascontiguousarray(members, dtype=np.bool_)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but unavailable")
        return _count_patterns_jit(members)
    return _count_patterns_numpy(members)


def phonetic_counts(members: np.ndarray, backend: str | None = None) -> tuple[int, int]:
    backend = backend or BACKEND
    members = np.ascontiguousarray(members, dtype=np.bool_)
    if backend == "numba":
        left, right = _phonetic_jit(members)
        return int(left), int(right)
    return _phonetic_numpy(members)


def table_members(entries: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Membership cube of the codewords ``b entries[b, e] e``."""
    backend = backend or BACKEND
    entries = np.ascontiguousarray(entries, dtype=np.int64)
    if backend == "numba":
        return _table_members_jit(entries)
    return _table_members_numpy(entries)
