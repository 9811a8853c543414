"""Coordinates for tensor powers of the generator space.

Words over g generators index the coordinates of V^(x)n lexicographically
with the leftmost factor most significant.  On top of that ordering we build
placement embeddings V^(x)i (x) W (x) V^(x)j and the Koszul spaces
C_n = intersection of all placements of the relation space.
"""

from __future__ import annotations

from itertools import product

from .errors import ContainmentViolated
from .linalg import Matrix, Subspace


def word_index(word, g):
    flat = 0
    for letter in word:
        flat = flat * g + letter
    return flat


def index_word(flat, n, g):
    word = [0] * n
    for k in range(n - 1, -1, -1):
        word[k] = flat % g
        flat //= g
    return tuple(word)


def all_words(n, g):
    return list(product(range(g), repeat=n))


def tensor_with_generators(space, g, side):
    """W (x) V (side "right") or V (x) W (side "left") as a Subspace.

    The produced basis is already in reduced row echelon form: tensoring an
    rref basis with standard generators keeps pivots distinct and entries at
    foreign pivots zero, so no re-reduction happens here.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    amb = space.ambient_dim
    z = space.field.zero
    basis = []
    pivots = []
    if side == "right":
        new_amb = amb * g
        for i, row in enumerate(space.basis):
            for k in range(g):
                v = [z] * new_amb
                for p in range(amb):
                    if row[p]:
                        v[p * g + k] = row[p]
                basis.append(tuple(v))
                pivots.append(space.pivots[i] * g + k)
    else:
        new_amb = g * amb
        for k in range(g):
            for i, row in enumerate(space.basis):
                v = [z] * new_amb
                for p in range(amb):
                    if row[p]:
                        v[k * amb + p] = row[p]
                basis.append(tuple(v))
                pivots.append(k * amb + space.pivots[i])
    return Subspace(space.field, new_amb, tuple(basis), tuple(pivots))


def subspace_tensor(a, b):
    """Tensor product of two subspaces inside the tensor of their ambients."""
    amb = a.ambient_dim * b.ambient_dim
    z = a.field.zero
    basis = []
    pivots = []
    for i, ra in enumerate(a.basis):
        for j, rb in enumerate(b.basis):
            v = [z] * amb
            for p in range(a.ambient_dim):
                if ra[p]:
                    for q in range(b.ambient_dim):
                        if rb[q]:
                            v[p * b.ambient_dim + q] = ra[p] * rb[q]
            basis.append(tuple(v))
            pivots.append(a.pivots[i] * b.ambient_dim + b.pivots[j])
    return Subspace(a.field, amb, tuple(basis), tuple(pivots))


def place(w, i, n, g):
    """The subspace V^(x)i (x) w (x) V^(x)(n-i-2) of V^(x)n."""
    if w.ambient_dim != g * g:
        raise ValueError("placement input must live in V(x)V")
    if i < 0 or i > n - 2:
        raise ValueError(f"placement index {i} out of range for degree {n}")
    right = n - i - 2
    left_dim = g ** i
    right_dim = g ** right
    amb = left_dim * (g * g) * right_dim
    z = w.field.zero
    basis = []
    pivots = []
    for u in range(left_dim):
        for bi, row in enumerate(w.basis):
            base = u * (g * g)
            for v in range(right_dim):
                vec = [z] * amb
                for q in range(g * g):
                    if row[q]:
                        vec[(base + q) * right_dim + v] = row[q]
                basis.append(tuple(vec))
                pivots.append((base + w.pivots[bi]) * right_dim + v)
    return Subspace(w.field, amb, tuple(basis), tuple(pivots))


def ideal_component(rel, n, g):
    """Degree-n component of the two-sided ideal (R): the sum of placements."""
    if n < 2:
        raise ValueError("ideal components start in degree 2")
    vectors = []
    for i in range(n - 1):
        vectors.extend(list(b) for b in place(rel, i, n, g).basis)
    return Subspace.span(rel.field, g ** n, vectors)


def koszul_space(rel, n, g, cache=None):
    """C_n: the intersection of all placements of the relation space.

    C_0 is the scalar line, C_1 the full generator space, C_2 the relations.
    For n >= 3 the full intersection collapses to two terms,
    C_n = (C_(n-1) (x) V) intersect (V (x) C_(n-1)), because every other
    placement constraint already holds inside either factor.
    """
    if n < 0:
        raise ValueError("negative tensor degree")
    if cache is not None and n in cache:
        return cache[n]
    if n == 0:
        out = Subspace.full(rel.field, 1)
    elif n == 1:
        out = Subspace.full(rel.field, g)
    elif n == 2:
        out = rel
    else:
        prev = koszul_space(rel, n - 1, g, cache)
        out = tensor_with_generators(prev, g, "right").intersect(
            tensor_with_generators(prev, g, "left"))
    if cache is not None:
        cache[n] = out
    return out


def koszul_transition(rel, d, g, cache=None):
    """Basis of C_(d+1) written over the basis {c_k (x) v_l} of C_d (x) V."""
    lower = koszul_space(rel, d, g, cache)
    upper = koszul_space(rel, d + 1, g, cache)
    rows = [tensor_coords_right(vec, lower, g) for vec in upper.basis]
    return Matrix(rel.field, rows, ncols=lower.dim * g)


def tensor_coords_right(vector, left, g):
    """Coordinates of a vector of W (x) V over basis rows of W tensor gens."""
    amb = left.ambient_dim
    if len(vector) != amb * g:
        raise ValueError("vector does not live in W (x) V")
    out = [left.field.zero] * (left.dim * g)
    for k in range(g):
        slice_k = [vector[p * g + k] for p in range(amb)]
        coords = left.coords_of(slice_k)
        if coords is None:
            raise ContainmentViolated(
                "tensor slice escapes the expected left factor")
        for i, c in enumerate(coords):
            out[i * g + k] = c
    return out


def tensor_vector_from_coords(coords, left, g):
    """Inverse of tensor_coords_right: assemble the ambient tensor vector."""
    amb = left.ambient_dim
    z = left.field.zero
    out = [z] * (amb * g)
    for i, row in enumerate(left.basis):
        for k in range(g):
            c = coords[i * g + k]
            if c:
                for p in range(amb):
                    if row[p]:
                        out[p * g + k] = out[p * g + k] + c * row[p]
    return out
