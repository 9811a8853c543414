"""Finitely presented graded right modules over a quadratic algebra.

A presentation lists generator degrees and relation vectors; a relation of
degree e is a row over the concatenated blocks A_(e - d_alpha), one block
per generator.  Graded pieces are computed as cokernels of the span of
relation translates, which also yields canonical class coordinates and the
action of the algebra degree by degree.  On top of that sit the operations
the hypersurface pipeline needs: idempotent cuts of a module, recognition
of cyclic quotients A/xA, graded Hom spaces, and the degree-zero
endomorphism algebra of a list of modules.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AdditivityViolated, AlgebraError, NotIsolated
from .findim import FiniteDimAlgebra
from .linalg import Matrix, Subspace


@dataclass(frozen=True)
class ModulePresentation:
    generator_degrees: tuple
    relations: tuple  # pairs (degree, coefficient row)
    # row shapes are validated by GradedModule against a concrete algebra


class _Level:
    __slots__ = ("offsets", "total", "rel_space", "free_cols", "dim")

    def __init__(self, offsets, total, rel_space, free_cols):
        self.offsets = offsets
        self.total = total
        self.rel_space = rel_space
        self.free_cols = free_cols
        self.dim = len(free_cols)


class GradedModule:
    """Degreewise data of a presented module over a quadratic algebra."""

    def __init__(self, algebra, presentation):
        self.algebra = algebra
        self.presentation = presentation
        self.field = algebra.field
        self._levels = {}
        for e, vec in presentation.relations:
            if len(vec) != self._free_total(e):
                raise ValueError(
                    f"relation row of degree {e} has the wrong length")

    def _free_total(self, n):
        total = 0
        for d in self.presentation.generator_degrees:
            total += self.algebra.graded_dim(n - d)
        return total

    def _free_offsets(self, n):
        offsets = []
        pos = 0
        for d in self.presentation.generator_degrees:
            b = self.algebra.graded_dim(n - d)
            offsets.append((pos, b))
            pos += b
        return offsets, pos

    def level(self, n):
        lvl = self._levels.get(n)
        if lvl is not None:
            return lvl
        offsets, total = self._free_offsets(n)
        vectors = []
        alg = self.algebra
        for e, vec in self.presentation.relations:
            if e > n:
                continue
            shift = n - e
            src_offsets, _ = self._free_offsets(e)
            blocks = []
            for alpha, d in enumerate(self.presentation.generator_degrees):
                start, b = src_offsets[alpha]
                blocks.append((alpha, e - d, vec[start:start + b]))
            for j in range(alg.graded_dim(shift)):
                unit = tuple(self.field.one if t == j else self.field.zero
                             for t in range(alg.graded_dim(shift)))
                out = [self.field.zero] * total
                for alpha, deg_a, coeffs in blocks:
                    if not any(coeffs):
                        continue
                    prod = alg.multiply(deg_a, coeffs, shift, unit)
                    start, b = offsets[alpha]
                    for k, c in enumerate(prod):
                        if c:
                            out[start + k] = out[start + k] + c
                vectors.append(out)
        rel_space = Subspace.span(self.field, total, vectors)
        pivot_set = set(rel_space.pivots)
        free_cols = tuple(c for c in range(total) if c not in pivot_set)
        lvl = _Level(offsets, total, rel_space, free_cols)
        self._levels[n] = lvl
        return lvl

    def graded_dim(self, n):
        return self.level(n).dim

    def hilbert(self, bound):
        return [self.graded_dim(n) for n in range(bound + 1)]

    def relation_span_dim(self, n):
        """Dimension of the submodule the relations generate, in degree n."""
        return self.level(n).rel_space.dim

    def class_coords(self, n, free_vec):
        lvl = self.level(n)
        resid = lvl.rel_space.reduce(list(free_vec))
        return tuple(resid[c] for c in lvl.free_cols)

    def representative(self, n, coords):
        lvl = self.level(n)
        out = [self.field.zero] * lvl.total
        for c, pos in zip(coords, lvl.free_cols):
            out[pos] = c
        return out

    def generator_class(self, alpha):
        d = self.presentation.generator_degrees[alpha]
        lvl = self.level(d)
        out = [self.field.zero] * lvl.total
        start, b = lvl.offsets[alpha]
        if b == 0:
            raise AlgebraError("generator block is empty at its own degree")
        # the generator corresponds to the unit of A_0 inside its block
        out[start] = self.field.one
        return self.class_coords(d, out)

    def mult_by_generator(self, n, coords, l):
        rep = self.representative(n, coords)
        lvl = self.level(n)
        nxt = self.level(n + 1)
        out = [self.field.zero] * nxt.total
        alg = self.algebra
        for alpha, d in enumerate(self.presentation.generator_degrees):
            start, b = lvl.offsets[alpha]
            if b == 0:
                continue
            block = rep[start:start + b]
            if not any(block):
                continue
            prod = alg.mult_by_generator(n - d, block, l)
            nstart, nb = nxt.offsets[alpha]
            for k, c in enumerate(prod):
                if c:
                    out[nstart + k] = out[nstart + k] + c
        return self.class_coords(n + 1, out)

    def mult_by_element(self, n, coords, k, a_coords):
        """Class of (element of M_n) * (element of A_k)."""
        if k == 0:
            return tuple(a_coords[0] * c for c in coords)
        words = self.algebra.basis_words(k)
        out = [self.field.zero] * self.graded_dim(n + k)
        for j, aj in enumerate(a_coords):
            if not aj:
                continue
            cur = tuple(coords)
            level = n
            for letter in words[j]:
                cur = self.mult_by_generator(level, cur, letter)
                level += 1
            for t, c in enumerate(cur):
                if c:
                    out[t] = out[t] + aj * c
        return tuple(out)


def free_module(algebra):
    """A itself as a right module over itself."""
    return GradedModule(algebra, ModulePresentation((0,), ()))


def module_graded_dim(presentation, algebra, n):
    return GradedModule(algebra, presentation).graded_dim(n)


# -- idempotent summands -------------------------------------------------------


def idempotent_summand(parent, image, depth=2):
    """Present the submodule of the parent generated by a degree-0 subspace.

    The parent must be generated in degree 0.  Relations are collected up to
    the given depth; depth 2 suffices for the Koszul summands we meet, and
    the classification layer re-runs with a larger depth before giving up.
    """
    if any(d != 0 for d in parent.presentation.generator_degrees):
        raise ValueError("idempotent cuts need a degree-0 generated module")
    field = parent.field
    alg = parent.algebra
    gens = [tuple(row) for row in image.basis]
    r = len(gens)
    relations = []
    current = ModulePresentation((0,) * r, ())
    for e in range(1, depth + 1):
        # full kernel of (new free module)_e -> parent_e
        block = alg.graded_dim(e)
        cols = []
        for beta in range(r):
            for j in range(block):
                unit = tuple(field.one if t == j else field.zero
                             for t in range(block))
                cols.append(parent.mult_by_element(0, gens[beta], e, unit))
        rows = [[cols[c][pos] for c in range(r * block)]
                for pos in range(parent.graded_dim(e))]
        kernel = Matrix(field, rows, ncols=r * block).kernel()
        scratch = GradedModule(alg, ModulePresentation((0,) * r,
                                                       tuple(relations)))
        span = scratch.level(e).rel_space
        for row in kernel.rows:
            if not span.contains(list(row)):
                relations.append((e, tuple(row)))
                scratch = GradedModule(alg, ModulePresentation(
                    (0,) * r, tuple(relations)))
                span = scratch.level(e).rel_space
    return ModulePresentation((0,) * r, tuple(relations))


@dataclass(frozen=True)
class CyclicMatch:
    element: object  # coordinate tuple over A_1 or None
    summand_dims: tuple
    quotient_dims: tuple
    matched: bool
    reason: str = ""


def identify_cyclic_quotient(presentation, algebra, bound):
    """Try to recognize a presented module as A/xA for a degree-1 element x."""
    summand = GradedModule(algebra, presentation)
    dims = tuple(summand.graded_dim(n) for n in range(bound + 1))
    if presentation.generator_degrees != (0,):
        return CyclicMatch(None, dims, (), False, "not generated by one "
                           "degree-0 element")
    deg1 = [vec for e, vec in presentation.relations if e == 1]
    ann = Subspace.span(algebra.field, algebra.gdim,
                        [list(v) for v in deg1])
    if ann.dim != 1:
        return CyclicMatch(None, dims, (), False,
                           f"degree-1 annihilator has dimension {ann.dim}")
    x = tuple(ann.basis[0])
    quotient = GradedModule(algebra, ModulePresentation((0,), ((1, x),)))
    qdims = tuple(quotient.graded_dim(n) for n in range(bound + 1))
    if dims != qdims:
        return CyclicMatch(x, dims, qdims, False,
                           "graded dimensions differ from A/xA")
    return CyclicMatch(x, dims, qdims, True)


@dataclass(frozen=True)
class SummandInfo:
    index: int
    image_basis: tuple
    presentation: ModulePresentation
    hilbert: tuple
    cyclic: CyclicMatch


@dataclass(frozen=True)
class McmClassification:
    summands: tuple
    parent_hilbert: tuple
    additivity_ok: bool


def classify_mcm(parent, idempotent_matrices, algebra, bound):
    """Cut the parent along idempotents and identify each piece.

    Idempotents act on degree-0 coordinates; each image subspace generates a
    summand whose presentation is deepened until Hilbert additivity holds.
    """
    field = algebra.field
    parent_h = tuple(parent.graded_dim(n) for n in range(bound + 1))
    for depth in (2, 3):
        infos = []
        total = [0] * (bound + 1)
        for idx, mat in enumerate(idempotent_matrices):
            image = Subspace.span(field, mat.nrows,
                                  [[mat.entry(r, c) for r in range(mat.nrows)]
                                   for c in range(mat.ncols)])
            pres = idempotent_summand(parent, image, depth=depth)
            summand = GradedModule(algebra, pres)
            h = tuple(summand.graded_dim(n) for n in range(bound + 1))
            for n in range(bound + 1):
                total[n] += h[n]
            cyc = identify_cyclic_quotient(pres, algebra, bound)
            infos.append(SummandInfo(idx, tuple(tuple(r) for r in image.basis),
                                     pres, h, cyc))
        if tuple(total) == parent_h:
            return McmClassification(tuple(infos), parent_h, True)
    raise AdditivityViolated(
        "summand Hilbert functions do not add up to the module; the "
        "truncated presentations miss relations beyond the search depth")


# -- syzygy shift evidence -----------------------------------------------------


@dataclass(frozen=True)
class SyzygyEvidence:
    rows: tuple  # (degree, dim of syzygy, dim of module one lower)
    dims_ok: bool
    annihilators: tuple
    permutation: tuple
    permutation_ok: bool
    notes: tuple


def syzygy_shift_evidence(parent, classification, algebra, bound,
                          isolated=True):
    """Numeric evidence that the syzygy permutes the summands with a shift.

    Compares dim of the first syzygy of the module against the module one
    degree lower, and matches each summand annihilator u with the line
    annihilated by u on the right.
    """
    if not isolated:
        raise NotIsolated(
            "syzygy evidence is only meaningful for the isolated case")
    rows = []
    dims_ok = True
    for n in range(1, bound + 1):
        omega = parent.relation_span_dim(n)
        prev = parent.graded_dim(n - 1)
        rows.append((n, omega, prev))
        if omega != prev:
            dims_ok = False
    notes = []
    anns = []
    for info in classification.summands:
        if info.cyclic.matched:
            anns.append(tuple(info.cyclic.element))
        else:
            anns.append(None)
    permutation = []
    perm_ok = True
    g = algebra.gdim
    for i, u in enumerate(anns):
        if u is None:
            permutation.append(None)
            perm_ok = False
            notes.append(f"summand {i + 1} is not recognized as cyclic")
            continue
        cols = [algebra.multiply(1, u, 1,
                                 tuple(algebra.field.one if t == l
                                       else algebra.field.zero
                                       for t in range(g)))
                for l in range(g)]
        rows_m = [[cols[l][pos] for l in range(g)]
                  for pos in range(algebra.graded_dim(2))]
        kern = Matrix(algebra.field, rows_m, ncols=g).kernel()
        right_ann = Subspace.span(algebra.field, g, kern.rows)
        if right_ann.dim != 1:
            permutation.append(None)
            perm_ok = False
            notes.append(f"right annihilator of summand {i + 1} generator "
                         f"is {right_ann.dim}-dimensional")
            continue
        target = tuple(right_ann.basis[0])
        match = None
        for j, v in enumerate(anns):
            if v == target:
                match = j
                break
        permutation.append(match)
        if match is None:
            perm_ok = False
            notes.append(f"shifted annihilator of summand {i + 1} is not in "
                         "the family")
    if perm_ok:
        seen = set(permutation)
        if len(seen) != len(permutation):
            perm_ok = False
            notes.append("annihilator matching is not a permutation")
    return SyzygyEvidence(tuple(rows), dims_ok, tuple(anns),
                          tuple(permutation), perm_ok, tuple(notes))


# -- graded Hom and the degree-zero endomorphism table -------------------------


def hom_space(P, Q, n):
    """Basis of degree-n module maps P -> Q, as generator image tuples."""
    field = Q.field
    alg = Q.algebra
    if alg is not P.algebra:
        raise ValueError("hom requires modules over the same algebra")
    blocks = []
    offsets = []
    pos = 0
    for d in P.presentation.generator_degrees:
        b = Q.graded_dim(d + n)
        offsets.append((pos, b))
        blocks.append(b)
        pos += b
    total = pos
    rows = []
    for e, vec in P.presentation.relations:
        tgt = Q.graded_dim(e + n)
        src_offsets, _ = P._free_offsets(e)
        cols = [[field.zero] * tgt for _ in range(total)]
        for alpha, d in enumerate(P.presentation.generator_degrees):
            start, b = src_offsets[alpha]
            coeffs = vec[start:start + b]
            if not any(coeffs):
                continue
            ostart, ob = offsets[alpha]
            for j in range(ob):
                unit = tuple(field.one if t == j else field.zero
                             for t in range(ob))
                img = Q.mult_by_element(d + n, unit, e - d, coeffs)
                cols[ostart + j] = list(img)
        for p in range(tgt):
            rows.append([cols[c][p] for c in range(total)])
    kernel = Matrix(field, rows, ncols=total).kernel()
    maps = []
    for row in kernel.rows:
        images = []
        for (start, b) in offsets:
            images.append(tuple(row[start:start + b]))
        maps.append(tuple(images))
    return tuple(maps)


def hom_graded(P, Q, n):
    return len(hom_space(P, Q, n))


@dataclass(frozen=True)
class PreresolutionReport:
    labels: tuple
    degrees: tuple
    table: tuple  # table[i][j] = tuple of dims over the degree window
    negative_ok: bool
    corner_zero: bool
    diagonal_dims: tuple
    diagonal_semisimple: bool
    algebra: FiniteDimAlgebra
    gldim_le_1: bool


def preresolution_table(summand_presentations, algebra, bound):
    """Degree-0 endomorphism algebra of (summands + A) with its Hom table.

    The table rows run over the listed summands followed by the free module.
    Hom dimensions are tabulated from degree -3 up to the bound; degree-0
    Homs become a finite dimensional algebra under composition, and the
    report records the triangular shape that gives global dimension <= 1.
    """
    field = algebra.field
    modules = [GradedModule(algebra, p) for p in summand_presentations]
    modules.append(free_module(algebra))
    labels = tuple([f"M{i + 1}" for i in range(len(summand_presentations))]
                   + ["A"])
    count = len(modules)
    degrees = tuple(range(-3, bound + 1))
    table = []
    maps0 = {}
    for i in range(count):
        row = []
        for j in range(count):
            dims = []
            for n in degrees:
                space = hom_space(modules[i], modules[j], n)
                if n == 0:
                    maps0[(i, j)] = space
                dims.append(len(space))
            row.append(tuple(dims))
        table.append(tuple(row))
    zero_at = degrees.index(0)
    negative_ok = all(all(d == 0 for k, d in enumerate(row_dims)
                          if degrees[k] < 0)
                      for row in table for row_dims in row)
    corner_zero = all(table[i][count - 1][zero_at] == 0
                      for i in range(count - 1))
    diagonal_dims = tuple(table[i][i][zero_at] for i in range(count - 1))

    # assemble the degree-0 composition algebra; a degree-0 map P_i -> P_j
    # is a matrix over the generator coordinates, flattened source-major
    def sizes(i):
        return len(modules[i].presentation.generator_degrees)

    def mat_to_vec(mat):
        return [mat.entry(beta, alpha) for alpha in range(mat.ncols)
                for beta in range(mat.nrows)]

    def vec_to_mat(i, j, row):
        si, sj = sizes(i), sizes(j)
        rows = [[row[alpha * sj + beta] for alpha in range(si)]
                for beta in range(sj)]
        return Matrix(field, rows, ncols=si)

    basis = []  # (i, j, matrix), matrices canonical per pair
    pair_spans = {}
    index_of = {}
    for i in range(count):
        for j in range(count):
            raw = [[c for img in images for c in img]
                   for images in maps0[(i, j)]]
            if not raw:
                continue
            span = Subspace.span(field, sizes(i) * sizes(j), raw)
            pair_spans[(i, j)] = span
            index_of[(i, j)] = []
            for row in span.basis:
                index_of[(i, j)].append(len(basis))
                basis.append((i, j, vec_to_mat(i, j, row)))
    dim = len(basis)

    def expand(i, j, mat):
        span = pair_spans.get((i, j))
        if span is None:
            raise AlgebraError("composition left the degree-0 Hom table")
        coords = span.coords_of(mat_to_vec(mat))
        if coords is None:
            raise AlgebraError("composition left the degree-0 Hom table")
        out = [field.zero] * dim
        for k, t in enumerate(index_of[(i, j)]):
            out[t] = coords[k]
        return tuple(out)

    zero_vec = (field.zero,) * dim
    structure = []
    for (i1, j1, m1) in basis:
        row = []
        for (i2, j2, m2) in basis:
            # product = first apply the right factor, then the left one
            if j2 != i1:
                row.append(zero_vec)
            else:
                row.append(expand(i2, j1, m1 * m2))
        structure.append(row)
    unit = [field.zero] * dim
    for i in range(count):
        s = len(modules[i].presentation.generator_degrees)
        ident = Matrix.identity(field, s)
        coords = expand(i, i, ident)
        unit = [a + b for a, b in zip(unit, coords)]
    labels_b = tuple(f"{labels[tgt]}<-{labels[src]}.{t}"
                     for t, (src, tgt, _) in enumerate(basis))
    b0 = FiniteDimAlgebra(field, labels_b, structure, unit)

    diag_idx = [t for t, (i, j, _) in enumerate(basis)
                if i == j and i < count - 1]
    diag_ok = True
    if diag_idx:
        sub_sc = []
        for t in diag_idx:
            sub_sc.append([tuple(structure[t][u][v] for v in diag_idx)
                           for u in diag_idx])
        sub_unit = []
        unit_diag = [field.zero] * dim
        for i in range(count - 1):
            s = len(modules[i].presentation.generator_degrees)
            coords = expand(i, i, Matrix.identity(field, s))
            unit_diag = [a + b for a, b in zip(unit_diag, coords)]
        sub_unit = tuple(unit_diag[v] for v in diag_idx)
        diag_alg = FiniteDimAlgebra(
            field, tuple(labels_b[t] for t in diag_idx), sub_sc, sub_unit)
        diag_ok = diag_alg.is_semisimple()
    gldim = corner_zero and diag_ok
    return PreresolutionReport(labels, degrees, tuple(table), negative_ok,
                               corner_zero, diagonal_dims, diag_ok, b0, gldim)
