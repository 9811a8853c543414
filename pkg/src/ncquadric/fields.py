"""Exact scalars: Q, the Gaussian rationals Q(i), and simple extensions Q[t]/(m).

Elements are coordinate vectors over the power basis 1, t, ..., t^(e-1) with
Fraction coordinates.  All arithmetic is exact; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch

RATIONALS = "rationals"
GAUSSIAN = "gaussian"
EXTENSION = "simple-extension"

_ZERO = Fraction(0)
_ONE = Fraction(1)


# --- polynomial helpers on plain Fraction lists (ascending coefficients) ---


def _fr_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _fr_divmod(a, b):
    # b must be nonzero
    a = list(a)
    q = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[k + i] -= c * bi
        _fr_trim(a)
        if not a:
            break
        while len(a) >= len(b) and a[-1] == 0:
            a.pop()
    return _fr_trim(q), _fr_trim(a)


def _fr_mul(a, b):
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _fr_trim(out)


def _fr_sub(a, b):
    out = list(a) + [_ZERO] * max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return _fr_trim(out)


def _fr_inverse_mod(a, m):
    """Inverse of a modulo m in Q[t]; both as Fraction lists, gcd(a, m) = 1."""
    # extended Euclid
    r0, r1 = list(m), list(a)
    s0, s1 = [], [_ONE]
    while r1:
        q, r = _fr_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _fr_sub(s0, _fr_mul(q, s1))
    # r0 = gcd (nonzero constant when coprime)
    if len(r0) != 1:
        raise DivisionByZero("element has no inverse modulo the field modulus")
    c = 1 / r0[0]
    return _fr_trim([x * c for x in s0])


def _int_rational_roots(coeffs):
    """All rational roots of a nonzero integer-coefficient polynomial."""
    c = list(coeffs)
    roots = set()
    k = 0
    while c and c[0] == 0:
        c.pop(0)
        k += 1
    if k:
        roots.add(Fraction(0))
    if len(c) <= 1:
        return roots
    c0, cn = abs(c[0]), abs(c[-1])
    for p in _divisors(c0):
        for q in _divisors(cn):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for coef in reversed(c):
                    acc = acc * cand + coef
                if acc == 0:
                    roots.add(cand)
    return roots


def _divisors(n):
    n = abs(n)
    if n == 0:
        return [1]
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def _factor_int(n):
    """Trial-division factorization of n >= 1 as {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# --- Gaussian integer helpers: pairs (a, b) meaning a + b*i ---


def _gs_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gs_norm(x):
    return x[0] * x[0] + x[1] * x[1]


def _gs_divmod(x, y):
    n = _gs_norm(y)
    num = _gs_mul(x, (y[0], -y[1]))
    q = (_round_half(Fraction(num[0], n)), _round_half(Fraction(num[1], n)))
    r = (x[0] - (q[0] * y[0] - q[1] * y[1]), x[1] - (q[0] * y[1] + q[1] * y[0]))
    return q, r


def _round_half(fr):
    # deterministic round-to-nearest, half toward +inf
    return (2 * fr.numerator + fr.denominator) // (2 * fr.denominator)


def _gs_canonical(x):
    """Rotate by units into the canonical quadrant: a > 0, b >= 0 (or zero)."""
    a, b = x
    if a == 0 and b == 0:
        return x
    for _ in range(4):
        if a > 0 and b >= 0:
            return (a, b)
        a, b = b, -a
    return (a, b)


def _gs_prime_factors(x):
    """Factor a nonzero Gaussian integer into canonical primes with exponents."""
    out = {}
    rest = x
    for p, e in sorted(_factor_int(_gs_norm(x)).items()):
        if p == 2:
            cands = [(1, 1)]
        elif p % 4 == 3:
            cands = [(p, 0)]
        else:
            a = 1
            while True:
                b2 = p - a * a
                b = isqrt(b2)
                if b * b == b2:
                    break
                a += 1
            cands = [_gs_canonical((a, b)), _gs_canonical((a, -b))]
        for pi in cands:
            while True:
                q, r = _gs_divmod(rest, pi)
                if r == (0, 0):
                    rest = q
                    out[pi] = out.get(pi, 0) + 1
                else:
                    break
    return out


def _gs_divisors(x):
    """All divisors of a nonzero Gaussian integer, one per associate class."""
    factors = sorted(_gs_prime_factors(x).items(), key=lambda kv: (_gs_norm(kv[0]), kv[0]))
    divs = [(1, 0)]
    for pi, e in factors:
        grown = []
        for d in divs:
            cur = d
            for _ in range(e + 1):
                grown.append(cur)
                cur = _gs_mul(cur, pi)
        divs = grown
    seen = set()
    out = []
    for d in divs:
        c = _gs_canonical(d)
        if c not in seen:
            seen.add(c)
            out.append(c)
    out.sort(key=lambda d: (_gs_norm(d), d))
    return out


class Field:
    """A base field: the rationals, the Gaussian rationals, or Q[t]/(m(t)).

    The modulus of an extension must be a monic integer polynomial.  For
    degree two or three, irreducibility is verified via the absence of
    rational roots; higher degrees are accepted on the caller's assertion,
    recorded in ``modulus_verified``.
    """

    __slots__ = ("kind", "degree", "modulus", "symbol", "modulus_verified",
                 "_theta_pows", "zero", "one", "_elem_cls")

    def __init__(self, kind, modulus=None):
        if kind == RATIONALS:
            self.kind = kind
            self.degree = 1
            self.modulus = None
            self.symbol = ""
            self.modulus_verified = True
        elif kind == GAUSSIAN:
            self.kind = kind
            self.degree = 2
            self.modulus = (1, 0, 1)
            self.symbol = "i"
            self.modulus_verified = True
        elif kind == EXTENSION:
            m = tuple(int(c) for c in modulus)
            if len(m) < 3:
                raise ValueError("extension modulus must have degree at least 2")
            if m[-1] != 1:
                raise ValueError("extension modulus must be monic")
            deg = len(m) - 1
            verified = False
            if deg <= 3:
                if _int_rational_roots(m):
                    raise ValueError("modulus is reducible over Q (has a rational root)")
                verified = True
            self.kind = kind
            self.degree = deg
            self.modulus = m
            self.symbol = "t"
            self.modulus_verified = verified
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self._theta_pows = self._reduction_table()
        self.zero = FieldElement(self, (_ZERO,) * self.degree)
        one = [_ZERO] * self.degree
        one[0] = _ONE
        self.one = FieldElement(self, tuple(one))

    def _reduction_table(self):
        e = self.degree
        if e == 1:
            return ()
        m = [Fraction(c) for c in self.modulus]
        # t^e = -(m0 + m1 t + ... + m_{e-1} t^{e-1})
        pows = []
        cur = [-m[k] for k in range(e)]
        pows.append(tuple(cur))
        for _ in range(e - 2):
            nxt = [_ZERO] * e
            carry = cur[e - 1]
            for k in range(e - 1):
                nxt[k + 1] = cur[k]
            if carry:
                for k in range(e):
                    nxt[k] += carry * pows[0][k]
            pows.append(tuple(nxt))
            cur = nxt
        return tuple(pows)

    # --- constructors ---

    @classmethod
    def rationals(cls):
        return cls(RATIONALS)

    @classmethod
    def gaussian(cls):
        return cls(GAUSSIAN)

    @classmethod
    def extension(cls, modulus):
        return cls(EXTENSION, modulus)

    def element(self, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def from_rational(self, value):
        coords = [_ZERO] * self.degree
        coords[0] = Fraction(value)
        return FieldElement(self, tuple(coords))

    def generator(self):
        """The adjoined element: i for Q(i), t for an extension."""
        if self.degree < 2:
            raise ValueError("the rationals have no adjoined generator")
        coords = [_ZERO] * self.degree
        coords[1] = _ONE
        return FieldElement(self, tuple(coords))

    def describe(self):
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == GAUSSIAN:
            return "Q(i)"
        return f"Q[t]/({_int_poly_str(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return f"Field({self.describe()})"


class FieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch(
                f"cannot combine elements of {self.field.describe()} and {other.field.describe()}")
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        e = self.field.degree
        a, b = self.coords, o.coords
        if e == 1:
            return FieldElement(self.field, (a[0] * b[0],))
        conv = [_ZERO] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = list(conv[:e])
        pows = self.field._theta_pows
        for k in range(e, 2 * e - 1):
            c = conv[k]
            if c:
                row = pows[k - e]
                for idx in range(e):
                    if row[idx]:
                        out[idx] += c * row[idx]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        e = self.field.degree
        if e == 1:
            return FieldElement(self.field, (1 / self.coords[0],))
        inv = _fr_inverse_mod(_fr_trim(list(self.coords)),
                              [Fraction(c) for c in self.field.modulus])
        inv = list(inv) + [_ZERO] * (e - len(inv))
        return FieldElement(self.field, tuple(inv[:e]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self.field.modulus, self.coords))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            sym = self.field.symbol if k == 1 else f"{self.field.symbol}^{k}"
            if c == 1:
                terms.append(sym)
            elif c == -1:
                terms.append(f"-{sym}")
            else:
                terms.append(f"{c}*{sym}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += "-" + t[1:] if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"<{self} in {self.field.describe()}>"


def _int_poly_str(coeffs):
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+" if c > 0 else "-") + body)
    return "".join(terms) if terms else "0"


def parse_field_spec(text):
    """Parse a field description: ``Q``, ``Q(i)``, or ``Q[t]/(t^2-2)``."""
    s = text.strip().replace(" ", "")
    if s == "Q":
        return Field.rationals()
    if s == "Q(i)":
        return Field.gaussian()
    if s.startswith("Q[t]/(") and s.endswith(")"):
        return Field.extension(parse_int_poly(s[len("Q[t]/("):-1]))
    raise ValueError(f"unrecognized field spec {text!r}")


def parse_int_poly(text):
    """Parse an integer polynomial in t, e.g. ``t^2-2`` or ``2*t^3+t-5``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    # split into signed terms
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    coeffs = {}
    for term in terms:
        if term in ("", "+", "-"):
            raise ValueError(f"malformed term in {text!r}")
        body = term.lstrip("+-")
        sign = -1 if term.startswith("-") else 1
        if "t" in body:
            coef_part, _, rest = body.partition("t")
            coef_part = coef_part.rstrip("*")
            coef = int(coef_part) if coef_part else 1
            if rest.startswith("^"):
                k = int(rest[1:])
            elif rest == "":
                k = 1
            else:
                raise ValueError(f"malformed term {term!r}")
        else:
            coef = int(body)
            k = 0
        coeffs[k] = coeffs.get(k, 0) + sign * coef
    deg = max(coeffs)
    return tuple(coeffs.get(k, 0) for k in range(deg + 1))


class Polynomial:
    """Univariate polynomial with FieldElement coefficients, ascending order.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.from_rational(c) for c in ints])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __call__(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Polynomial(self.field, [x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return Polynomial(self.field, [x - y for x, y in zip(a, b)])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Polynomial(self.field, [c * other for c in self.coeffs])
        if not self or not other:
            return Polynomial(self.field, ())
        z = self.field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def divmod(self, other):
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        z = self.field.zero
        q = [z] * max(0, len(rem) - len(div) + 1)
        inv = div[-1].inverse()
        while len(rem) >= len(div):
            c = rem[-1] * inv
            k = len(rem) - len(div)
            q[k] = c
            for i, b in enumerate(div):
                rem[k + i] = rem[k + i] - c * b
            while rem and not rem[-1]:
                rem.pop()
            if not rem:
                break
        return Polynomial(self.field, q), Polynomial(self.field, rem)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self):
        return Polynomial(self.field,
                          [c * k for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self:
            return self
        inv = self.coeffs[-1].inverse()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def squarefree_part(self):
        if self.degree <= 1:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return (self // g).monic()

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c)
            compound = ("+" in cs[1:]) or ("-" in cs[1:]) or ("*" in cs)
            if k == 0:
                body = f"({cs})" if compound else cs
            else:
                var = "t" if k == 1 else f"t^{k}"
                if cs == "1":
                    body = var
                elif cs == "-1":
                    body = f"-{var}"
                else:
                    body = (f"({cs})*{var}" if compound else f"{cs}*{var}")
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(body)
            else:
                parts.append("+" + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self} over {self.field.describe()})"


@dataclass(frozen=True)
class RootSearch:
    """Roots found in the base field, with a completeness guarantee flag."""

    roots: tuple
    complete: bool


def roots_in_field(p):
    """Roots of p lying in its coefficient field, each listed once.

    Complete over Q and Q(i).  Over other simple extensions the search is
    best-effort (rational candidates plus quadratic factors solved through
    the norm form) and ``complete`` reports whether it certifies all roots.
    """
    if not p:
        raise ValueError("root search needs a nonzero polynomial")
    sq = p.squarefree_part()
    field = p.field
    if field.kind == RATIONALS:
        roots = _roots_rational(sq)
        return RootSearch(tuple(sorted(roots, key=lambda r: r.coords)), True)
    if field.kind == GAUSSIAN:
        roots = _roots_gaussian(sq)
        return RootSearch(tuple(sorted(roots, key=lambda r: r.coords)), True)
    roots, complete = _roots_extension(sq)
    return RootSearch(tuple(sorted(roots, key=lambda r: r.coords)), complete)


def _roots_rational(sq):
    field = sq.field
    denom = 1
    for c in sq.coeffs:
        denom = denom * c.coords[0].denominator // _gcd(denom, c.coords[0].denominator)
    ints = [int(c.coords[0] * denom) for c in sq.coeffs]
    return [field.from_rational(r) for r in sorted(_int_rational_roots(ints))]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _roots_gaussian(sq):
    field = sq.field
    if sq.degree <= 0:
        return []
    denom = 1
    for c in sq.coeffs:
        for fr in c.coords:
            denom = denom * fr.denominator // _gcd(denom, fr.denominator)
    ints = [(int(c.coords[0] * denom), int(c.coords[1] * denom)) for c in sq.coeffs]
    roots = []
    k = 0
    while ints and ints[0] == (0, 0):
        ints.pop(0)
        k += 1
    if k:
        roots.append(field.zero)
    if len(ints) <= 1:
        return roots
    units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    seen = set()
    for r in _gs_divisors(ints[0]):
        for s in _gs_divisors(ints[-1]):
            ns = _gs_norm(s)
            for u in units:
                ru = _gs_mul(r, u)
                # candidate = ru / s = ru * conj(s) / norm(s)
                num = _gs_mul(ru, (s[0], -s[1]))
                cand = (Fraction(num[0], ns), Fraction(num[1], ns))
                if cand in seen:
                    continue
                seen.add(cand)
                x = field.element(cand)
                if not sq(x):
                    roots.append(x)
    return roots


def _roots_extension(sq):
    field = sq.field
    roots = []
    cur = sq
    complete = True
    while True:
        if cur.degree <= 0:
            break
        if cur.degree == 1:
            roots.append(-cur.coeffs[0] / cur.coeffs[1])
            break
        found = None
        for cand in _rational_candidates(cur):
            if not cur(cand):
                found = cand
                break
        if found is None and cur.degree == 2:
            qroots = _quadratic_roots(cur)
            if qroots is not None:
                roots.extend(qroots)
            else:
                complete = False  # square-ness of the discriminant unknown
            break
        if found is None:
            complete = False
            break
        roots.append(found)
        lin = Polynomial(field, [-found, field.one])
        cur = cur // lin
    return roots, complete


def _rational_candidates(p):
    """Rational elements that can be roots of p (complete for rational roots)."""
    field = p.field
    e = field.degree
    for j in range(e):
        coord_poly = [c.coords[j] for c in p.coeffs]
        if any(coord_poly):
            denom = 1
            for fr in coord_poly:
                denom = denom * fr.denominator // _gcd(denom, fr.denominator)
            ints = [int(fr * denom) for fr in coord_poly]
            return [field.from_rational(r) for r in sorted(_int_rational_roots(ints))]
    return []


def _quadratic_roots(p):
    """Both roots of a quadratic over a simple extension, or None if unknown.

    Returns a list (possibly empty) when the question is decided; None when
    the field degree rules out our square-root reduction.
    """
    field = p.field
    a, b, c = p.coeffs[2], p.coeffs[1], p.coeffs[0]
    disc = b * b - field.from_rational(4) * a * c
    s = _sqrt_in_field(disc)
    if s is None:
        if field.degree == 2:
            return []  # decided: discriminant is a non-square, no roots here
        if field.degree % 2 == 1 and all(x == 0 for x in disc.coords[1:]):
            # a rational non-square cannot acquire a square root inside an
            # odd-degree extension (it would generate a quadratic subfield)
            return []
        return None
    two_a = field.from_rational(2) * a
    r1 = (-b + s) / two_a
    r2 = (-b - s) / two_a
    return [r1] if r1 == r2 else [r1, r2]


def _sqrt_in_field(d):
    """A square root of d in its field, or None if none exists / undecidable."""
    field = d.field
    if not d:
        return field.zero
    if field.degree == 1 or all(x == 0 for x in d.coords[1:]):
        r = _rational_sqrt(d.coords[0])
        if r is not None:
            return field.from_rational(r)
        if field.degree != 2:
            return None
    if field.degree != 2:
        return None
    # z = u + v*t with t^2 = -p*t - q; solve z^2 = d0 + d1*t exactly
    pm = Fraction(field.modulus[1])
    qm = Fraction(field.modulus[0])
    d0, d1 = d.coords
    cands = []
    if d1 == 0:
        r = _rational_sqrt(d0)
        if r is not None:
            cands.append((r, Fraction(0)))
        den = pm * pm / 4 - qm
        if den != 0:
            v2 = d0 / den
            v = _rational_sqrt(v2)
            if v is not None:
                cands.append((pm * v / 2, v))
    else:
        # (p^2 - 4q) w^2 + (2 p d1 - 4 d0) w + d1^2 = 0 with w = v^2
        A = pm * pm - 4 * qm
        B = 2 * pm * d1 - 4 * d0
        C = d1 * d1
        for w in _rational_quadratic_roots(A, B, C):
            if w <= 0:
                continue
            v = _rational_sqrt(w)
            if v is not None and v != 0:
                u = (d1 + pm * w) / (2 * v)
                cands.append((u, v))
    for u, v in sorted(cands):
        z = field.element((u, v))
        if z * z == d:
            return z
    return None


def _rational_sqrt(fr):
    if fr < 0:
        return None
    n, d = fr.numerator, fr.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _rational_quadratic_roots(a, b, c):
    if a == 0:
        return [] if b == 0 else [Fraction(-c, b)]
    disc = b * b - 4 * a * c
    s = _rational_sqrt(Fraction(disc)) if disc >= 0 else None
    if s is None:
        return []
    return sorted({(-b + s) / (2 * a), (-b - s) / (2 * a)})
