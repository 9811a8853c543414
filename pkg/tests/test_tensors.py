import pytest

import oracle as O
from helpers import rows_pairs

from ncquadric import ContainmentViolated, Field, Subspace
from ncquadric.tensors import (all_words, ideal_component, index_word,
                               koszul_space, koszul_transition, place,
                               subspace_tensor, tensor_coords_right,
                               tensor_with_generators, word_index)
from ncquadric.tensors import tensor_vector_from_coords


def test_word_index_roundtrip():
    for g in (2, 3):
        for n in (0, 1, 2, 3):
            ws = all_words(n, g)
            assert len(ws) == g ** n
            for w in ws:
                assert index_word(word_index(w, g), n, g) == w


def test_word_index_leftmost_significant():
    # word (a, b, c) -> a*g^2 + b*g + c
    assert word_index((1, 0, 2), 3) == 11
    assert word_index((2,), 3) == 2


@pytest.fixture(scope="module")
def golden_rel(golden_ctx_mod):
    return golden_ctx_mod.quotient.relation_space


@pytest.fixture(scope="module")
def golden_ctx_mod():
    import pathlib
    from helpers import load_context
    root = pathlib.Path(__file__).resolve().parent.parent
    return load_context(root / "inputs" / "quadric3.pres", bound=6)


def test_placement_matches_oracle(golden_rel):
    o_rels = rows_pairs(golden_rel.basis)
    for n in (3, 4):
        for i in range(n - 1):
            got = place(golden_rel, i, n, 3)
            want = O.rref(O.placement_vectors(o_rels, i, n, 3))[0]
            assert got.dim == len(want)
            canon, _ = O.rref(rows_pairs(got.basis))
            assert canon == want


def test_placement_is_trusted_canonical(golden_rel):
    # the directly constructed pivots must agree with a re-span
    sub = place(golden_rel, 1, 4, 3)
    re = Subspace.span(sub.field, sub.ambient_dim,
                       [list(b) for b in sub.basis])
    assert re == sub


def test_placement_errors(golden_rel):
    with pytest.raises(ValueError):
        place(golden_rel, 2, 3, 3)
    line = Subspace.span(golden_rel.field, 3,
                         [[golden_rel.field.one] * 3])
    with pytest.raises(ValueError):
        place(line, 0, 3, 3)


def test_ideal_component_dims(golden_rel, golden_ctx_mod):
    # quotient: 4 relations, two overlapping placements in degree 3
    assert ideal_component(golden_rel, 3, 3).dim == 20
    amb = golden_ctx_mod.ambient.relation_space
    assert ideal_component(amb, 3, 3).dim == 17
    o_rels = rows_pairs(golden_rel.basis)
    assert O.ideal_dim(o_rels, 3, 3) == 20
    assert ideal_component(golden_rel, 4, 3).dim == \
        O.ideal_dim(o_rels, 4, 3)


def test_koszul_recursion_equals_literal_intersection(golden_rel):
    o_rels = rows_pairs(golden_rel.basis)
    cache = {}
    for n in (2, 3, 4):
        got = koszul_space(golden_rel, n, 3, cache)
        want = O.koszul_literal(o_rels, n, 3)
        assert got.dim == len(want)
        canon, _ = O.rref(rows_pairs(got.basis))
        assert canon == want


def test_koszul_small_degrees(golden_rel):
    assert koszul_space(golden_rel, 0, 3).dim == 1
    assert koszul_space(golden_rel, 1, 3).dim == 3
    assert koszul_space(golden_rel, 2, 3) == golden_rel


def test_transition_shape_and_consistency(golden_rel):
    cache = {}
    t = koszul_transition(golden_rel, 2, 3, cache)
    lower = koszul_space(golden_rel, 2, 3, cache)
    upper = koszul_space(golden_rel, 3, 3, cache)
    assert (t.nrows, t.ncols) == (4, 12)
    # each row reassembles to the corresponding basis vector of C_3
    for r in range(t.nrows):
        coords = [t.entry(r, c) for c in range(t.ncols)]
        vec = tensor_vector_from_coords(coords, lower, 3)
        assert list(vec) == list(upper.basis[r])


def test_transition_commutative_plane_row():
    # k[x,y] with the node quadric: C_2 has the commutator row (0,1,-1,0)
    Qi = Field.gaussian()
    one, z = Qi.one, Qi.zero
    rel = Subspace.span(Qi, 4, [[z, one, -one, z], [one, z, z, one]])
    t = koszul_transition(rel, 1, 2)
    rows = [tuple(str(t.entry(r, c)) for c in range(4))
            for r in range(t.nrows)]
    assert ("0", "1", "-1", "0") in rows


def test_tensor_with_generators_layout(golden_rel):
    right = tensor_with_generators(golden_rel, 3, "right")
    left = tensor_with_generators(golden_rel, 3, "left")
    assert right.dim == left.dim == golden_rel.dim * 3
    assert right.ambient_dim == left.ambient_dim == 27
    with pytest.raises(ValueError):
        tensor_with_generators(golden_rel, 3, "middle")


def test_subspace_tensor_dim(golden_rel):
    line = Subspace.span(golden_rel.field, 2,
                         [[golden_rel.field.one, golden_rel.field.one]])
    prod = subspace_tensor(line, golden_rel)
    assert prod.dim == golden_rel.dim
    assert prod.ambient_dim == 2 * 9


def test_tensor_coords_roundtrip(golden_rel):
    cache = {}
    upper = koszul_space(golden_rel, 3, 3, cache)
    lower = koszul_space(golden_rel, 2, 3, cache)
    for vec in upper.basis:
        coords = tensor_coords_right(list(vec), lower, 3)
        back = tensor_vector_from_coords(coords, lower, 3)
        assert list(back) == list(vec)


def test_tensor_coords_escape(golden_rel):
    field = golden_rel.field
    bad = [field.zero] * 27
    bad[0] = field.one  # x(x)x(x)x is not in R (x) V
    with pytest.raises(ContainmentViolated):
        tensor_coords_right(bad, golden_rel, 3)
    with pytest.raises(ValueError):
        tensor_coords_right([field.zero] * 10, golden_rel, 3)
