from fractions import Fraction

import pytest

import oracle as O
from helpers import gauss, normalize_line, rows_pairs, vec_pairs

from ncquadric import (GradedModule, ModulePresentation, NotIsolated,
                       Subspace, classify_mcm, end_algebra, free_module,
                       hom_graded, hom_space, identify_cyclic_quotient,
                       idempotent_summand, linear_string, module_graded_dim,
                       preresolution_table, syzygy_presentation,
                       syzygy_shift_evidence)

ANNIHILATORS = {"y+i*z", "y-i*z", "x+z", "x-z"}


@pytest.fixture(scope="module")
def golden_idem_matrices(golden_end):
    idems = golden_end.algebra.primitive_idempotents(seed=0)
    mats = []
    for coords in idems.idempotents:
        mat = None
        for c, bm in zip(coords, golden_end.basis_matrices):
            term = bm.scale(c)
            mat = term if mat is None else mat + term
        mats.append(mat)
    return mats


@pytest.fixture(scope="module")
def golden_classification(golden_module, golden_idem_matrices, golden_ctx):
    return classify_mcm(golden_module, golden_idem_matrices,
                        golden_ctx.quotient, 6)


def oracle_golden_rels(golden_ctx):
    return rows_pairs(golden_ctx.quotient.relation_space.basis)


def test_module_dims_match_cyclic_decomposition(golden_module, golden_ctx):
    dims = [golden_module.graded_dim(n) for n in range(7)]
    assert dims == [4, 8, 12, 16, 20, 24, 28]
    # independent check: the module decomposes into the four cyclic
    # quotients, so its dims are the sum of theirs
    o_rels = oracle_golden_rels(golden_ctx)
    units = [[O.ZERO, O.ONE, O.IMAG],                # y + iz
             [O.ZERO, O.ONE, O.neg(O.IMAG)],         # y - iz
             [O.ONE, O.ZERO, O.ONE],                 # x + z
             [O.ONE, O.ZERO, O.neg(O.ONE)]]          # x - z
    total = [0] * 5
    for u in units:
        qd = O.right_ideal_quotient_dims(o_rels, u, 4, 3)
        assert qd == [1, 2, 3, 4, 5]
        total = [a + b for a, b in zip(total, qd)]
    assert dims[:5] == total


def test_free_module(golden_ctx):
    fm = free_module(golden_ctx.quotient)
    assert [fm.graded_dim(n) for n in range(5)] == \
        golden_ctx.quotient.hilbert(4)
    assert module_graded_dim(fm.presentation, golden_ctx.quotient, 3) == 7


def test_presentation_validation(golden_ctx):
    bad = ModulePresentation((0,), ((1, (golden_ctx.ambient.field.one,)),))
    with pytest.raises(ValueError):
        GradedModule(golden_ctx.quotient, bad)


def test_idempotent_summand(golden_ctx, golden_module,
                            golden_idem_matrices):
    field = golden_ctx.ambient.field
    mat = golden_idem_matrices[0]
    image = [[mat.entry(r, c) for r in range(4)] for c in range(4)]
    img = Subspace.span(field, 4, image)
    assert img.dim == 1
    pres = idempotent_summand(golden_module, img)
    gm = GradedModule(golden_ctx.quotient, pres)
    assert [gm.graded_dim(n) for n in range(5)] == [1, 2, 3, 4, 5]


def test_classification(golden_classification):
    cls = golden_classification
    assert cls.additivity_ok
    assert len(cls.summands) == 4
    for info in cls.summands:
        assert info.hilbert == (1, 2, 3, 4, 5, 6, 7)
        assert info.cyclic.matched
        assert info.cyclic.quotient_dims == info.hilbert


def test_classification_annihilators(golden_classification, golden_ctx):
    names = golden_ctx.ambient.generators
    got = {linear_string(names, normalize_line(info.cyclic.element))
           for info in golden_classification.summands}
    assert got == ANNIHILATORS


def test_identify_cyclic_negative(golden_ctx):
    two_gens = ModulePresentation((0, 0), ())
    match = identify_cyclic_quotient(two_gens, golden_ctx.quotient, 4)
    assert not match.matched
    assert "degree-0" in match.reason


def test_syzygy_shift(golden_module, golden_classification, golden_ctx):
    ev = syzygy_shift_evidence(golden_module, golden_classification,
                               golden_ctx.quotient, 6)
    assert ev.dims_ok
    assert [r[1] for r in ev.rows] == [r[2] for r in ev.rows]
    assert ev.rows[0][1] == 4
    assert ev.permutation == (0, 1, 2, 3)
    assert ev.permutation_ok


def test_syzygy_shift_requires_isolated(golden_module,
                                        golden_classification, golden_ctx):
    with pytest.raises(NotIsolated):
        syzygy_shift_evidence(golden_module, golden_classification,
                              golden_ctx.quotient, 6, isolated=False)


def test_node_classification(node_ctx):
    end = end_algebra(node_ctx)
    idems = end.algebra.primitive_idempotents(seed=0)
    mats = []
    for coords in idems.idempotents:
        mat = None
        for c, bm in zip(coords, end.basis_matrices):
            term = bm.scale(c)
            mat = term if mat is None else mat + term
        mats.append(mat)
    module = GradedModule(node_ctx.quotient, syzygy_presentation(node_ctx))
    cls = classify_mcm(module, mats, node_ctx.quotient, 6)
    assert len(cls.summands) == 2
    names = node_ctx.ambient.generators
    got = {linear_string(names, normalize_line(info.cyclic.element))
           for info in cls.summands}
    assert got == {"x+i*y", "x-i*y"}
    ev = syzygy_shift_evidence(module, cls, node_ctx.quotient, 6)
    assert ev.permutation == (1, 0)
    assert ev.permutation_ok


def test_hom_space_free_target(golden_ctx, golden_module):
    free = free_module(golden_ctx.quotient)
    # maps from the free module are just elements of the target
    for n in range(4):
        assert hom_graded(free, free, n) == \
            golden_ctx.quotient.graded_dim(n)
        assert hom_graded(free, golden_module, n) == \
            golden_module.graded_dim(n)


def test_hom_into_free_matches_annihilator_count(golden_ctx,
                                                 golden_classification):
    # a degree-n map A/uA -> A is an element a of A_n with a*u = 0, so
    # the dimension is dim A_n minus dim (A*u)_{n+1}
    free = free_module(golden_ctx.quotient)
    o_rels = oracle_golden_rels(golden_ctx)
    info = golden_classification.summands[0]
    summand = GradedModule(golden_ctx.quotient, info.presentation)
    u = vec_pairs(info.cyclic.element)
    mult = O.left_multiples_dims(o_rels, u, 4, 3)
    adims = [1, 3, 5, 7]
    want = [adims[n] - mult[n + 1] for n in range(4)]
    got = [hom_graded(summand, free, n) for n in range(4)]
    assert got == want == [0, 1, 2, 3]
    assert got[0] == 0  # strictly triangular corner


def test_hom_negative_degree_vanishes(golden_ctx, golden_module):
    free = free_module(golden_ctx.quotient)
    for n in (-3, -2, -1):
        assert hom_graded(golden_module, free, n) == 0
        assert hom_graded(free, golden_module, n) == 0


def test_hom_rejects_mixed_algebras(golden_ctx, node_ctx):
    a = free_module(golden_ctx.quotient)
    b = free_module(node_ctx.quotient)
    with pytest.raises(ValueError):
        hom_space(a, b, 0)


def test_preresolution(golden_classification, golden_ctx):
    table = preresolution_table(
        [info.presentation for info in golden_classification.summands],
        golden_ctx.quotient, 6)
    assert table.labels == ("M1", "M2", "M3", "M4", "A")
    assert table.negative_ok
    assert table.corner_zero
    assert table.diagonal_dims == (1, 1, 1, 1)
    assert table.diagonal_semisimple
    assert table.gldim_le_1
    assert table.algebra.dim == 9
    # degree-0 algebra: triangular with 4-dim radical
    assert table.algebra.radical().dim == 4
    quo = table.algebra.quotient_by_radical()
    assert quo.dim == 5
    assert quo.is_semisimple()


def test_mult_by_element_degree_zero(golden_ctx, golden_module):
    field = golden_ctx.ambient.field
    coords = [field.one, field.zero, field.zero, field.zero]
    scaled = golden_module.mult_by_element(
        0, coords, 0, [field.from_rational(3)])
    assert tuple(scaled) == (field.from_rational(3), field.zero,
                             field.zero, field.zero)
