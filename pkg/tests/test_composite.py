from itertools import product as iproduct

import numpy as np
import pytest

from checkdigit3.analysis import almost_disjoint, count_errors
from checkdigit3.catalog import base4_code, base26_code
from checkdigit3.codegen import CodeError, WordCode, base_code, linear_code
from checkdigit3.composite import (
    SEQ38,
    SEQ47,
    FamilySpec,
    GroupedCodeSpec,
    base26_family,
    check_family,
    crt36,
    crt_index,
    cyclic_index_code,
    family_seq,
    grouped,
    grouped_preset,
    mod37_code,
    p7,
    product,
    without_word,
)
from checkdigit3.galois import build_field


def test_family_specs_valid():
    assert check_family(SEQ38) == [] and check_family(SEQ47) == []
    bad = FamilySpec("bad", 4, 7, ((3, 7), (3, 3)))
    assert any("K" in p for p in check_family(bad))


def test_unknown_family():
    with pytest.raises(KeyError):
        family_seq("seq99")


def test_family_sizes():
    assert len(family_seq("seq38")) == 8 and len(family_seq("seq47")) == 6


def test_base26_family_first_is_catalog_code():
    fam = base26_family()
    assert len(fam) == 24
    assert fam[0] == base26_code()


def test_product_shape_and_inheritance():
    c1, c2 = base4_code(1), base_code(build_field(9), 4, 7, 0)
    p = product(c1, c2)
    assert p.Q == 36
    r = count_errors(p)
    assert r.permutation == 0 and r.triple == 0
    # each product codeword projects onto codewords of both factors
    for b, m, e in p.codewords()[::37]:
        assert c1.contains((b // 9, m // 9, e // 9))
        assert c2.contains((b % 9, m % 9, e % 9))


def test_product_preconditions():
    dec = linear_code(10, 1, 3, 1, 0)
    with pytest.raises(CodeError):
        product(dec, base4_code(1))
    with pytest.raises(CodeError):
        product(base4_code(1), dec)


def test_crt_map():
    assert crt_index(3, 7) == 7
    seen = {crt_index(a, b) for a in range(4) for b in range(9)}
    assert seen == set(range(36))
    for v in range(36):
        assert crt_index(v % 4, v % 9) == v


def test_p7_is_involution():
    assert p7(7) == 25 and p7(25) == 7 and p7(16) == 16
    assert all(p7(p7(x)) == x for x in range(36))


def test_relabeling_only_moves_phonetic_counts():
    for i, j in [(1, 0), (2, 5), (3, 8)]:
        a = count_errors(crt36(i, j)).counts()
        b = count_errors(crt36(i, j, relabel=False)).counts()
        for k in a:
            if not k.startswith("phonetic"):
                assert a[k] == b[k]


def test_crt36_codes():
    codes = [crt36(i, j) for i in (1, 2, 3) for j in range(9)]
    assert all(len(c.codewords()) == 1296 for c in codes)
    union = set()
    for c in codes:
        union.update(c.codewords())
    assert len(union) == 27 * 1296
    with pytest.raises(CodeError):
        crt36(0, 1)


def test_mod37():
    c = mod37_code(1)
    assert c.contains((0, 1, 0))
    assert isinstance(c, WordCode)
    with pytest.raises(CodeError):
        mod37_code(0)
    # completion fails when the unique solution is the deleted symbol
    b, e = next((b, e) for b in range(36) for e in range(36)
                if (1 - 10 * b - 26 * e) % 37 == 36)
    with pytest.raises(CodeError):
        c.complete((b, None, e))


def _small_spec(S=None):
    codes = [linear_code(5, 1, 1, 1, k) for k in range(4)]
    codes = tuple(without_word(c, (0, 0, 0)) if k == 0 else c for k, c in enumerate(codes))
    return GroupedCodeSpec((codes, codes), S or cyclic_index_code(4), "small", 5)


def test_grouped_count_matches_enumeration():
    g = grouped(_small_spec())
    words = list(g.codewords())
    assert len(words) == len(set(words)) == g.count()
    for w in words[::11]:
        assert g.contains(w)
    members = set(words)
    for w in iproduct(range(5), repeat=6):
        if w in members:
            continue
        assert not g.contains(w)
        break


def test_grouped_single_group_errors_detected():
    g = grouped(_small_spec())
    members = set(g.codewords())
    undetected = 0
    for w in list(members)[::7]:
        for pos in range(6):
            for s in range(5):
                if s != w[pos]:
                    v = w[:pos] + (s,) + w[pos + 1:]
                    undetected += v in members
    assert undetected == 0
    report = g.detect_report()
    assert report.undetected_single_group["single"] == 0
    assert report.s_min_distance == 2


def test_grouped_rejects_bad_index_code():
    with pytest.raises(CodeError):
        grouped(_small_spec(S=((0, 1), (0, 2))))


def test_grouped_rejects_overlapping_components():
    c = linear_code(5, 1, 1, 1, 0)
    with pytest.raises(CodeError):
        grouped(GroupedCodeSpec(((c, c), (c, c)), ((0, 1), (1, 0))))


def test_group_reversal_flag():
    g = grouped(_small_spec())
    assert g.detect_report().group_reversal_detecting
    sym = grouped(_small_spec(S=((0, 1), (1, 0), (2, 3), (3, 2))))
    assert not sym.detect_report().s_detects_transposition


def test_preset_diagnose():
    g = grouped_preset("base10")
    w = next(g.codewords())
    assert g.diagnose(w) == "valid"
    assert "not a codeword" in g.diagnose((0, 0, 0) + w[3:])
