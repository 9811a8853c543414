"""Quadratic algebras T(V)/(R) with exact graded arithmetic.

A presentation stores the relation subspace R inside V (x) V.  Graded
components are built degree by degree: A_n is the cokernel of the span of
u * r placements inside A_(n-1) (x) V, which matches striking the leading
words of the degree-n ideal component.  Multiplication tables by generators
come out of the same reduction and drive everything else (Hilbert data,
centrality tests, regularity certificates, the quadratic dual).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import RelationDependence
from .linalg import Matrix, Subspace


class _Component:
    __slots__ = ("dim", "words", "rel_space", "free_cols", "gen_mult")

    def __init__(self, dim, words, rel_space, free_cols, gen_mult):
        self.dim = dim
        self.words = words
        self.rel_space = rel_space
        self.free_cols = free_cols
        self.gen_mult = gen_mult


class QuadraticPresentation:
    """A quadratic algebra given by generator names and relation vectors."""

    def __init__(self, field, generators, relation_vectors):
        self.field = field
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        g = len(self.generators)
        self.gdim = g
        rows = [tuple(field.element(c) if not hasattr(c, "field") else c
                      for c in vec) for vec in relation_vectors]
        for r in rows:
            if len(r) != g * g:
                raise ValueError("relation vectors must live in V (x) V")
        span = Subspace.span(field, g * g, [list(r) for r in rows])
        if span.dim != len(rows):
            raise RelationDependence(
                "relation list is linearly dependent")
        self.relation_space = span
        self._components = {}

    # -- graded components -------------------------------------------------

    def component(self, n):
        if n < 0:
            raise ValueError("negative degree")
        comp = self._components.get(n)
        if comp is not None:
            return comp
        if n == 0:
            comp = _Component(1, ((),), None, None, None)
        else:
            comp = self._build_component(n)
        self._components[n] = comp
        return comp

    def _build_component(self, n):
        g = self.gdim
        prev = self.component(n - 1)
        ambient = prev.dim * g
        field = self.field
        if n == 1 or prev.dim == 0:
            rel_space = Subspace.zero(field, ambient)
        else:
            below = self.component(n - 2)
            rel_rows = self.relation_space.basis
            vectors = []
            for j in range(below.dim):
                for r in rel_rows:
                    vec = [field.zero] * ambient
                    for k in range(g):
                        cls = prev.gen_mult[k][j]
                        for l in range(g):
                            c = r[k * g + l]
                            if c:
                                for i, ci in enumerate(cls):
                                    if ci:
                                        vec[i * g + l] = vec[i * g + l] + c * ci
                    vectors.append(vec)
            rel_space = Subspace.span(field, ambient, vectors)
        pivot_set = set(rel_space.pivots)
        free_cols = tuple(c for c in range(ambient) if c not in pivot_set)
        words = tuple(prev.words[c // g] + (c % g,) for c in free_cols)
        dim = len(free_cols)
        gen_mult = []
        for l in range(g):
            cols = []
            for i in range(prev.dim):
                vec = [field.zero] * ambient
                vec[i * g + l] = field.one
                resid = rel_space.reduce(vec)
                cols.append(tuple(resid[c] for c in free_cols))
            gen_mult.append(tuple(cols))
        return _Component(dim, words, rel_space, free_cols, tuple(gen_mult))

    def graded_dim(self, n):
        if n < 0:
            return 0
        return self.component(n).dim

    def hilbert(self, bound):
        return [self.graded_dim(n) for n in range(bound + 1)]

    def basis_words(self, n):
        return self.component(n).words

    # -- multiplication ----------------------------------------------------

    def mult_by_generator(self, n, coords, l):
        """Class of (element of A_n) * x_l in A_(n+1)."""
        comp = self.component(n + 1)
        out = [self.field.zero] * comp.dim
        table = comp.gen_mult[l]
        for i, ci in enumerate(coords):
            if ci:
                for k, tk in enumerate(table[i]):
                    if tk:
                        out[k] = out[k] + ci * tk
        return tuple(out)

    def multiply(self, m, a_coords, n, b_coords):
        """Product A_m x A_n -> A_(m+n) on class coordinates."""
        words = self.component(n).words
        out = [self.field.zero] * self.graded_dim(m + n)
        for j, bj in enumerate(b_coords):
            if not bj:
                continue
            cur = tuple(a_coords)
            level = m
            for letter in words[j]:
                cur = self.mult_by_generator(level, cur, letter)
                level += 1
            for k, ck in enumerate(cur):
                if ck:
                    out[k] = out[k] + bj * ck
        return tuple(out)

    def project(self, n, vector):
        """Class in A_n of an ambient tensor vector of V^(x)n."""
        if n == 0:
            return (self.field.element(vector[0])
                    if not hasattr(vector[0], "field") else vector[0],)
        if n == 1:
            return tuple(vector)
        g = self.gdim
        block = g ** (n - 1)
        out = [self.field.zero] * self.graded_dim(n)
        for l in range(g):
            slice_l = [vector[p * g + l] for p in range(block)]
            if all(not c for c in slice_l):
                continue
            cls = self.project(n - 1, slice_l)
            stepped = self.mult_by_generator(n - 1, cls, l)
            for k, ck in enumerate(stepped):
                if ck:
                    out[k] = out[k] + ck
        return tuple(out)

    def element_vector(self, n, coords):
        """Lift class coordinates to the canonical normal-word tensor vector."""
        g = self.gdim
        vec = [self.field.zero] * (g ** n)
        words = self.component(n).words
        for j, c in enumerate(coords):
            if c:
                flat = 0
                for letter in words[j]:
                    flat = flat * g + letter
                vec[flat] = vec[flat] + c
        return vec

    # -- derived structure -------------------------------------------------

    def quadratic_dual(self):
        """T(V*)/(R^perp) with the coordinatewise pairing on V (x) V."""
        g = self.gdim
        rows = [list(r) for r in self.relation_space.basis]
        mat = Matrix(self.field, rows, ncols=g * g)
        perp = mat.kernel()
        names = tuple(name + "*" for name in self.generators)
        return QuadraticPresentation(self.field, names, perp.rows)

    def is_central_deg2(self, w):
        """Does w (x) v - v (x) w vanish in A_3 for every generator v?"""
        g = self.gdim
        w = [self.field.element(c) if not hasattr(c, "field") else c
             for c in w]
        if len(w) != g * g:
            raise ValueError("central candidate must live in V (x) V")
        for l in range(g):
            diff = [self.field.zero] * (g ** 3)
            for q in range(g * g):
                if w[q]:
                    diff[q * g + l] = diff[q * g + l] + w[q]
                    diff[l * g * g + q] = diff[l * g * g + q] - w[q]
            if any(c for c in self.project(3, diff)):
                return False
        return True


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class RegularityCertificate:
    passed: bool
    rows: tuple  # (degree, expected, actual)
    first_failure: object = None


@dataclass(frozen=True)
class NumericKoszulCertificate:
    passed: bool
    coefficients: tuple  # coefficient of t^n in H_A(t) H_dual(-t), n = 0..N
    first_failure: object = None


@dataclass(frozen=True)
class QuantumPolynomialCertificate:
    passed: bool
    hilbert: tuple
    expected_hilbert: tuple
    dual_hilbert: tuple
    expected_dual_hilbert: tuple
    numeric: NumericKoszulCertificate
    failures: tuple


def is_regular_deg2(presentation, w, bound):
    """Check dim (A/wA)_n = dim A_n - dim A_(n-2) for 2 <= n <= bound.

    For w central this certifies that w acts without torsion up to the bound.
    A dependent w (already a relation) fails at n = 2 instead of raising.
    """
    field = presentation.field
    w = [field.element(c) if not hasattr(c, "field") else c for c in w]
    try:
        quotient = QuadraticPresentation(
            field, presentation.generators,
            list(presentation.relation_space.basis) + [tuple(w)])
    except RelationDependence:
        quotient = presentation
    rows = []
    passed = True
    first = None
    for n in range(2, bound + 1):
        expected = presentation.graded_dim(n) - presentation.graded_dim(n - 2)
        actual = quotient.graded_dim(n)
        rows.append((n, expected, actual))
        if expected != actual and first is None:
            first = n
            passed = False
    return RegularityCertificate(passed, tuple(rows), first)


def koszul_numeric_check(presentation, bound, dual=None):
    """Coefficientwise check of H_A(t) * H_dual(-t) = 1 up to t^bound."""
    if dual is None:
        dual = presentation.quadratic_dual()
    coeffs = []
    passed = True
    first = None
    for n in range(bound + 1):
        c = 0
        for k in range(n + 1):
            term = dual.graded_dim(k) * presentation.graded_dim(n - k)
            c += -term if k % 2 else term
        coeffs.append(c)
        want = 1 if n == 0 else 0
        if c != want and first is None:
            first = n
            passed = False
    return NumericKoszulCertificate(passed, tuple(coeffs), first)


def quantum_polynomial_certificate(presentation, bound):
    """Numeric certificate that the input presents a quantum polynomial algebra.

    Checks the binomial Hilbert function in dimension g, the dual Hilbert
    function (1+t)^g including vanishing in degree g+1, and the coefficient
    identity between the two Hilbert series.  Necessary conditions only, but
    they catch every mistyped presentation we care about.
    """
    g = presentation.gdim
    hilbert = tuple(presentation.graded_dim(n) for n in range(bound + 1))
    expected = tuple(comb(g + n - 1, n) for n in range(bound + 1))
    dual = presentation.quadratic_dual()
    dual_h = tuple(dual.graded_dim(n) for n in range(g + 2))
    expected_dual = tuple(comb(g, n) for n in range(g + 2))
    numeric = koszul_numeric_check(presentation, bound, dual=dual)
    failures = []
    if hilbert != expected:
        failures.append("hilbert function differs from the polynomial one")
    if dual_h != expected_dual:
        failures.append("dual hilbert function is not (1+t)^g")
    if not numeric.passed:
        failures.append(
            f"series product check fails at degree {numeric.first_failure}")
    return QuantumPolynomialCertificate(
        not failures, hilbert, expected, dual_h, expected_dual, numeric,
        tuple(failures))


# -- display helpers ---------------------------------------------------------


def _coeff_prefix(c):
    s = str(c)
    if s == "1":
        return ""
    if s == "-1":
        return "-"
    body = s[1:] if s.startswith("-") else s
    if "+" in body or "-" in body:
        return f"({s})*"
    return f"{s}*"


def _join_terms(terms):
    out = ""
    for t in terms:
        if not out:
            out = t
        elif t.startswith("-"):
            out += t
        else:
            out += "+" + t
    return out if out else "0"


def linear_string(names, coords):
    """Display a degree-1 element, e.g. 'y+i*z'."""
    terms = []
    for l, c in enumerate(coords):
        if c:
            terms.append(_coeff_prefix(c) + names[l])
    return _join_terms(terms)


def tensor2_string(names, coords):
    """Display a degree-2 tensor, e.g. 'x*x+z*z'."""
    g = len(names)
    terms = []
    for q, c in enumerate(coords):
        if c:
            terms.append(_coeff_prefix(c) + f"{names[q // g]}*{names[q % g]}")
    return _join_terms(terms)
