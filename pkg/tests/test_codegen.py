import numpy as np
import pytest

from checkdigit3.analysis import count_errors, count_phonetic, is_check_table
from checkdigit3.codegen import (
    CodeError,
    CodeParams,
    CodeTable,
    WordCode,
    _rebuild,
    alpha_params,
    base_code,
    cyclic_safe,
    enumerate_BE,
    insert_extend,
    linear_code,
    params_RC,
    relabel_N,
    reverse_code,
    solve_missing,
    validate_params,
    weight_sequence,
)
from checkdigit3.galois import build_field, ff_add, ff_mul, ff_neg, ff_sub

GF9 = build_field(9)
DECIMAL_ROW0 = [3, 8, 1, 2, 4, 9, 7, 0, 5, 6]


@pytest.fixture(scope="module")
def decimal():
    return insert_extend(base_code(GF9, 4, 7, 3), 7)


def test_validate_params_examples():
    assert validate_params(GF9, 4, 7, 3) == []
    assert validate_params(GF9, 3, 8, 5) == []
    assert "B-E=0" in validate_params(GF9, 4, 4, 3)
    assert validate_params(GF9, 4, 7, 0) == []
    assert "K=0" in validate_params(GF9, 4, 7, 0, require_triple_free=True)
    assert "B+1+E!=0" in validate_params(GF9, 4, 8, 1, require_triple_free=True)


def test_enumerate_BE():
    assert enumerate_BE(GF9) == [(3, 8), (4, 7), (5, 6), (6, 5), (7, 4), (8, 3)]
    assert (2, 3) in enumerate_BE(build_field(4))
    assert enumerate_BE(build_field(3)) == []


def test_base_code_cells():
    t = base_code(GF9, 4, 7, 3)
    assert t[0, 0] == 3 and t[8, 1] == 5
    assert base_code(GF9, 4, 7, 0)[0, 0] == 0


@pytest.mark.parametrize("BE", enumerate_BE(GF9))
def test_base_codes_are_latin_and_linear(BE):
    B, E = BE
    for K in range(9):
        t = base_code(GF9, B, E, K)
        assert is_check_table(t)
        for b, m, e in t.codewords():
            assert ff_add(GF9, ff_add(GF9, ff_mul(GF9, B, b), m), ff_mul(GF9, E, e)) == K


def test_base_code_rejects_bad_params():
    with pytest.raises(CodeError):
        base_code(GF9, 4, 4, 3)


def test_alpha_params():
    assert alpha_params(build_field(4)) == (2, 3)
    assert alpha_params(build_field(7)) == (2, 4)
    assert alpha_params(build_field(25)) == (11, 18)
    assert alpha_params(build_field(37)) == (10, 26)
    for q in (4, 7, 13, 25, 37):
        f = build_field(q)
        B, E = alpha_params(f)
        assert ff_mul(f, B, E) == 1 and ff_mul(f, B, B) == E
        assert ff_add(f, ff_add(f, B, 1), E) == 0
    for q in (2, 3, 9):
        with pytest.raises(CodeError):
            alpha_params(build_field(q))


def test_insert_extend_decimal(decimal):
    assert decimal.entries[0].tolist() == DECIMAL_ROW0
    assert decimal[0, 5] == 9
    assert decimal.entries[9, :9].tolist() == [4, 5, 3, 7, 8, 6, 1, 2, 0]
    assert decimal.entries[:9, 9].tolist() == [6, 7, 8, 0, 1, 2, 3, 4, 5]
    assert decimal[9, 9] == 9
    assert is_check_table(decimal)
    assert decimal.params.R == 4 and decimal.params.C == 6


def test_insert_extend_errors():
    with pytest.raises(CodeError):
        insert_extend(base_code(GF9, 4, 7, 3), 0)
    with pytest.raises(CodeError):
        insert_extend(base_code(build_field(4), 2, 3, 1), 1)
    # R = K - B*P = 0
    P = 1
    K = ff_mul(GF9, 4, P)
    with pytest.raises(CodeError):
        insert_extend(base_code(GF9, 4, 7, K), P)


def test_added_row_has_no_two_cycles(decimal):
    q = 9
    for e in range(10):
        m = decimal[q, e]
        assert decimal[q, m] != e or m == e == q


def test_single_triple_word():
    for K in range(1, 9):
        for P in range(1, 9):
            R, C = params_RC(GF9, 4, 7, K, P)
            if R == 0 or C == 0:
                continue
            t = insert_extend(base_code(GF9, 4, 7, K), P)
            triples = [a for a in range(10) if t[a, a] == a]
            assert triples == [9]


def test_insertion_inherits_detection():
    for B, E in enumerate_BE(GF9):
        for K in range(1, 9):
            for P in range(1, 9):
                R, C = params_RC(GF9, B, E, K, P)
                if R == 0 or C == 0:
                    continue
                r = count_errors(insert_extend(base_code(GF9, B, E, K), P))
                assert (r.single, r.transposition, r.twin, r.jump_transposition,
                        r.jump_twin) == (0, 0, 0, 0, 0)
                assert r.triple == 0


def test_cyclic_safe():
    assert cyclic_safe(CodeParams(GF9, 4, 7, 3, 7))
    K = ff_mul(GF9, ff_sub(GF9, 4, 1), 1)
    assert not cyclic_safe(CodeParams(GF9, 4, 7, K, 1))
    assert cyclic_safe(CodeParams(build_field(25), 11, 18, 1, 1))


def test_weight_sequence():
    assert weight_sequence("GF9", 3) == [4, 1, 7]
    assert weight_sequence("GF4", 4) == [2, 1, 3, 2]
    assert weight_sequence("GF37", 3) == [10, 1, 26]


def test_solve_missing(decimal):
    assert solve_missing(decimal, [0, None, 0]) == 3
    assert solve_missing(decimal, [0, 3, None]) == 0
    assert solve_missing(decimal, [None, 9, 9]) == 9
    base = base_code(GF9, 4, 7, 3)
    rng = np.random.default_rng(7)
    for _ in range(50):
        b, e = (int(x) for x in rng.integers(0, 9, 2))
        m = base[b, e]
        assert solve_missing(base, [None, m, e]) == b
        assert solve_missing(base, [b, m, None]) == e
    with pytest.raises(CodeError):
        solve_missing(decimal, [None, None, 1])


def _valid_extensions(B, E):
    for K in range(1, 9):
        for P in range(1, 9):
            if 0 not in params_RC(GF9, B, E, K, P):
                yield K, P


def test_reverse_and_N_identities(decimal):
    assert reverse_code(decimal) == _rebuild(GF9, 7, 4, 3, ff_neg(GF9, 7))
    N = relabel_N(decimal)
    assert N == _rebuild(GF9, 4, 7, ff_neg(GF9, 3), ff_neg(GF9, 7))
    assert relabel_N(N) == decimal
    n = [ff_sub(GF9, 1, x) for x in range(9)] + [9]
    assert n[0] == 1 and n[1] == 0
    for b, m, e in decimal.codewords():
        assert N.contains((n[b], n[m], n[e]))


@pytest.mark.parametrize("BE", enumerate_BE(GF9))
def test_reversed_N_code_swaps_phonetic_sides(BE):
    B, E = BE
    for K, P in _valid_extensions(B, E):
        t = insert_extend(base_code(GF9, B, E, K), P)
        v = reverse_code(relabel_N(t))
        assert v == _rebuild(GF9, E, B, ff_neg(GF9, K), P)
        left, right = count_phonetic(t)
        assert count_phonetic(v) == (right, left)


def _frob(x):
    return ff_mul(GF9, ff_mul(GF9, x, x), x)


@pytest.mark.parametrize("BE", [(3, 8), (4, 7), (5, 6)])
def test_frobenius_pairing(BE):
    # x -> x^3 carries (3,8), (4,7), (5,6) onto (6,5), (7,4), (8,3)
    B, E = BE
    FB, FE = _frob(B), _frob(E)
    assert (FB, FE) in enumerate_BE(GF9)
    Fmap = np.array([_frob(x) for x in range(9)] + [9])
    for K, P in _valid_extensions(B, E):
        t = insert_extend(base_code(GF9, B, E, K), P)
        u = insert_extend(base_code(GF9, FB, FE, _frob(K)), _frob(P))
        assert np.array_equal(u.entries[np.ix_(Fmap, Fmap)], Fmap[t.entries])
        assert count_errors(t).same_counts(count_errors(u))


def test_codetable_is_immutable(decimal):
    with pytest.raises(ValueError):
        decimal.entries[0, 0] = 1


def test_end_table(decimal):
    Te = decimal.end_table()
    for b in range(10):
        for e in range(10):
            assert Te[b, decimal[b, e]] == e


def test_word_code_completion():
    w = WordCode(3, [(0, 1, 2), (1, 1, 1)], "tiny")
    assert w.contains((1, 1, 1)) and not w.contains((2, 2, 2))
    assert w.complete((0, 1, None)) == 2
    with pytest.raises(CodeError):
        w.complete((2, None, 2))


def test_linear_code():
    t = linear_code(10, 1, 3, 1, 0)
    for b, m, e in t.codewords():
        assert (b + 3 * m + e) % 10 == 0
    with pytest.raises(CodeError):
        linear_code(10, 1, 2, 1, 0)


def test_codetable_rejects_bad_shape():
    with pytest.raises((CodeError, ValueError)):
        CodeTable(np.zeros((2, 3), dtype=int))


def test_insertion_row_formula_when_triple_free():
    for B, E in enumerate_BE(GF9):
        for K in range(1, 9):
            for P in range(1, 9):
                R, C = params_RC(GF9, B, E, K, P)
                if R == 0 or C == 0:
                    continue
                t = insert_extend(base_code(GF9, B, E, K), P)
                assert [t[9, e] for e in range(9)] == [ff_add(GF9, R, e) for e in range(9)]
                assert [t[b, 9] for b in range(9)] == [ff_add(GF9, C, b) for b in range(9)]


def test_insertion_is_latin_for_general_weights():
    f = build_field(7)
    t = insert_extend(base_code(f, 2, 3, 0), 1)
    assert is_check_table(t)
