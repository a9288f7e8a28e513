import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidpoly.activity import ActivityWord
from braidpoly.braid import parse_braid
from braidpoly.diagram import build_diagram
from braidpoly.dimer import (
    ModifiedAdjacencyMatrix,
    OpCounter,
    adjacency_matrix,
    bareiss_determinant,
    bracket_via_det,
    determinant,
    embedding_faces,
    fix_sign,
    jones_via_det,
    kasteleyn_sign,
    prepare_overlay,
    symbolic_determinant,
)
from braidpoly.errors import UnsupportedWord
from braidpoly.laurent import LaurentPoly1
from braidpoly.oracle import bracket_state_sum, cofactor_det, jones_state_sum
from braidpoly.overlay import components, partition_function

from words import family_words


def overlay_of(text: str):
    return prepare_overlay(parse_braid(text))


def negative_count(g, walk) -> int:
    return sum(1 for idx in walk if g.edges[idx].kasteleyn_sign < 0)


def test_embedding_faces_cover_each_edge_twice():
    g = overlay_of("s1^3")
    walks = embedding_faces(g)
    assert all(len(w) % 2 == 0 for w in walks)
    total = sum(len(w) for w in walks)
    assert total == 2 * len(g.edges)


def test_single_crossing_overlay_is_trivially_signed():
    g = overlay_of("s1")
    assert [e.kasteleyn_sign for e in g.edges] == [1]
    walks = embedding_faces(g)
    assert [len(w) for w in walks] == [2]
    m = adjacency_matrix(g)
    assert fix_sign(m, g) == 1
    assert determinant(m).terms == {3: -1}


def test_two_crossing_overlay_signing_and_text():
    g = overlay_of("s1^2")
    walks = embedding_faces(g)
    assert sorted(len(w) for w in walks) == [4, 4]
    assert sum(1 for e in g.edges if e.kasteleyn_sign < 0) == 1
    m = adjacency_matrix(g, symbolic=True)
    assert m.to_text() == "[ -L  l ]\n[  D  d ]"
    numeric = adjacency_matrix(g)
    s = fix_sign(numeric, g)
    assert (LaurentPoly1.term(s, 0) * determinant(numeric)).terms == {4: -1, -4: -1}


def test_parity_rule_holds_on_family_sample():
    for text in ("s1^3", "s1^-4", "s1^2 s2^3", "s1 s2 s3", "s1^-2 s2^-2 s3^-3"):
        g = overlay_of(text)
        comp_of_edge = {}
        sizes = {}
        for ci, (cids, fids, eids) in enumerate(components(g)):
            sizes[ci] = len(cids) + len(fids)
            for idx in eids:
                comp_of_edge[idx] = ci
        for walk in embedding_faces(g):
            assert sizes[comp_of_edge[walk[0]]] % 2 == 0
            assert negative_count(g, walk) % 2 == (len(walk) // 2 + 1) % 2


@settings(deadline=None, max_examples=60)
@given(family_words())
def test_parity_rule_holds_on_random_family_words(word):
    g = prepare_overlay(word)
    for walk in embedding_faces(g):
        assert negative_count(g, walk) % 2 == (len(walk) // 2 + 1) % 2


def test_trefoil_matrix_shape_and_pattern():
    g = overlay_of("s1^3")
    m = adjacency_matrix(g, symbolic=True)
    assert m.rows == g.crossings
    assert m.cols == g.faces
    incidence = {(e.crossing_id, e.face_id) for e in g.edges}
    for i, cid in enumerate(m.rows):
        for j, fid in enumerate(m.cols):
            assert (m.entries[i][j] is not None) == ((cid, fid) in incidence)
    letters = {
        (i, j): m.entries[i][j][1]
        for i in range(3)
        for j in range(3)
        if m.entries[i][j] is not None
    }
    assert letters == {
        (0, 0): "L",
        (1, 0): "D",
        (1, 1): "L",
        (2, 1): "D",
        (0, 2): "l",
        (1, 2): "d",
        (2, 2): "d",
    }


def test_trefoil_sign_fixed_symbolic_determinant():
    g = overlay_of("s1^3")
    m = adjacency_matrix(g, symbolic=True)
    s = fix_sign(m, g)
    det = {key: s * coeff for key, coeff in symbolic_determinant(m).items()}
    assert det == {
        ActivityWord("LLd").key(): 1,
        ActivityWord("LDd").key(): 1,
        ActivityWord(["l", "D", "D"]).key(): 1,
    }


def test_numeric_entries_match_symbolic_entries():
    g = overlay_of("s1^2 s2^2")
    sym = adjacency_matrix(g, symbolic=True)
    num = adjacency_matrix(g)
    from braidpoly.kauffman import BRACKET_IMAGE

    for i in range(len(sym.rows)):
        for j in range(len(sym.cols)):
            cell = sym.entries[i][j]
            if cell is None:
                assert num.entries[i][j].is_zero
            else:
                sign, letter = cell
                image = BRACKET_IMAGE[letter]
                assert num.entries[i][j] == (image if sign > 0 else -image)


def test_matrix_json_round_structure():
    m = adjacency_matrix(overlay_of("s1^2"), symbolic=True)
    payload = m.to_json()
    assert payload["symbolic"] is True
    assert payload["entries"] == [["-L", "l"], ["D", "d"]]
    numeric = adjacency_matrix(overlay_of("s1^2")).to_json()
    assert numeric["symbolic"] is False
    assert numeric["rows"] == [1, 2]


def test_determinant_mode_guards():
    g = overlay_of("s1^2")
    with pytest.raises(ValueError):
        determinant(adjacency_matrix(g, symbolic=True))
    with pytest.raises(ValueError):
        symbolic_determinant(adjacency_matrix(g))


def test_bareiss_upper_triangular_is_diagonal_product():
    a = LaurentPoly1.term(1, 2)
    b = LaurentPoly1.term(-1, 0)
    c = LaurentPoly1({1: 1, -1: 1})
    z = LaurentPoly1.zero()
    rows = [[a, b, c], [z, b, a], [z, z, c]]
    assert bareiss_determinant(rows) == a * b * c


def test_bareiss_row_swap_sign():
    z = LaurentPoly1.zero()
    one = LaurentPoly1.one()
    assert bareiss_determinant([[z, one], [one, z]]).terms == {0: -1}
    assert bareiss_determinant([[z, one], [z, one]]).is_zero
    assert bareiss_determinant([]).terms == {0: 1}


def sparse_poly(rng: random.Random) -> LaurentPoly1:
    if rng.random() < 0.45:
        return LaurentPoly1.zero()
    terms = {}
    for _ in range(rng.randint(1, 2)):
        terms[rng.randint(-3, 3)] = rng.choice([-2, -1, 1, 2])
    return LaurentPoly1(terms)


def test_bareiss_matches_cofactor_on_sparse_8x8():
    rng = random.Random(20260823)
    rows = [[sparse_poly(rng) for _ in range(8)] for _ in range(8)]
    assert bareiss_determinant([list(r) for r in rows]) == cofactor_det(rows)


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 2**31 - 1), st.integers(2, 5))
def test_bareiss_matches_cofactor_on_random_matrices(seed, n):
    rng = random.Random(seed)
    rows = [[sparse_poly(rng) for _ in range(n)] for _ in range(n)]
    assert bareiss_determinant([list(r) for r in rows]) == cofactor_det(rows)


def test_fix_sign_without_matching_is_plus_one():
    g = overlay_of("s1")
    empty = ModifiedAdjacencyMatrix((1,), (0,), ((LaurentPoly1.zero(),),), False)
    assert fix_sign(empty, g) == 1
    assert determinant(empty).is_zero


@settings(deadline=None, max_examples=50)
@given(family_words())
def test_sign_fixed_determinant_equals_partition_function(word):
    g = prepare_overlay(word)
    m = adjacency_matrix(g)
    s = fix_sign(m, g)
    assert LaurentPoly1.term(s, 0) * determinant(m) == partition_function(g)


@settings(deadline=None, max_examples=40)
@given(family_words())
def test_bracket_via_det_matches_state_sum(word):
    assert bracket_via_det(word) == bracket_state_sum(build_diagram(word))


def test_per_component_equals_global_route():
    for text in ("s1^2 s2^3", "s1^-3 s2^-2 s3^-4", "s1 s2 s3"):
        word = parse_braid(text)
        assert bracket_via_det(word, per_component=True) == bracket_via_det(
            word, per_component=False
        )


def test_trefoil_jones_via_det_golden():
    assert jones_via_det(parse_braid("s1^3")).to_text() == "A^-4 + A^-12 - A^-16"


def test_mirror_trefoil_jones_via_det():
    value = jones_via_det(parse_braid("s1^-3"))
    assert value == jones_via_det(parse_braid("s1^3")).mirror()
    assert value.to_text() == "-A^16 + A^12 + A^4"


def test_two_column_word_matches_state_sum_jones():
    word = parse_braid("s1^2 s2^2")
    assert jones_via_det(word) == jones_state_sum(word)


def test_non_family_word_is_refused():
    with pytest.raises(UnsupportedWord):
        jones_via_det(parse_braid("s1 s2 s1", strands=3))


def test_op_counter_growth_is_subquartic():
    counts = {}
    for half in (5, 10, 20):
        ops = OpCounter()
        bracket_via_det(parse_braid(f"s1^{half} s2^{half}"), per_component=False, ops=ops)
        assert ops.total == ops.muls + ops.adds + ops.divs
        counts[2 * half] = ops.total
    import math

    slope = math.log(counts[40] / counts[20]) / math.log(2)
    assert 0 < slope < 4


def test_kasteleyn_is_idempotent_enough():
    g = overlay_of("s1^3")
    before = [e.kasteleyn_sign for e in g.edges]
    kasteleyn_sign(g)
    assert [e.kasteleyn_sign for e in g.edges] == before
