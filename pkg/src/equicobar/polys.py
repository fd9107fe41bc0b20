"""Univariate polynomials over a :class:`~equicobar.fields.Field`.

A polynomial is a tuple of raw field values, lowest degree first, with no
trailing zeros (the zero polynomial is ``()``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import Inconclusive


def trim(F, a):
    a = list(a)
    while a and a[-1] == F.zero:
        a.pop()
    return tuple(a)


def deg(a):
    return len(a) - 1


def add(F, a, b):
    n = max(len(a), len(b))
    return trim(F, [F.add(a[i] if i < len(a) else F.zero, b[i] if i < len(b) else F.zero) for i in range(n)])


def neg(F, a):
    return tuple(F.neg(x) for x in a)


def sub(F, a, b):
    return add(F, a, neg(F, b))


def mul(F, a, b):
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def scale(F, c, a):
    return trim(F, [F.mul(c, x) for x in a])


def monic(F, a):
    if not a:
        return a
    return scale(F, F.inv(a[-1]), a)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b) and a:
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bi))
        a = list(trim(F, a))
    return trim(F, q), trim(F, a)


def mod(F, a, b):
    return divmod_(F, a, b)[1]


def gcd(F, a, b):
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def lcm(F, a, b):
    if not a or not b:
        return ()
    return monic(F, divmod_(F, mul(F, a, b), gcd(F, a, b))[0])


def derivative(F, a):
    return trim(F, [F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def powmod(F, a, e, m):
    result = (F.one,)
    base = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        e >>= 1
    return result


def evaluate(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def x_minus(F, c):
    return (F.neg(c), F.one)


@dataclass
class Factorization:
    """``unit * prod(f**m for f, m in factors)`` with monic irreducible ``f``."""

    unit: object
    factors: list

    def expand(self, F):
        out = (self.unit,)
        for f, m in self.factors:
            for _ in range(m):
                out = mul(F, out, f)
        return out

    def roots(self, F):
        return [F.neg(f[0]) for f, _ in self.factors if deg(f) == 1]


# -- finite fields -----------------------------------------------------------

def _pth_root_poly(F, a):
    # a(x) = sum b_i x^{ip}; returns sum b_i^{1/p} x^i
    p = F.p
    e = F.order // p  # b^(p^(k-1)) is the p-th root in GF(p^k)
    return trim(F, [F.pow(a[i], e) if F.k > 1 else a[i] for i in range(0, len(a), p)])


def squarefree_decomposition(F, f):
    """Monic ``f`` -> list of (squarefree monic g, multiplicity)."""
    out = []
    c = gcd(F, f, derivative(F, f))
    w = divmod_(F, f, c)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(F, w, c)
        fac = divmod_(F, w, y)[0]
        if deg(fac) > 0:
            out.append((fac, i))
        w = y
        c = divmod_(F, c, y)[0]
        i += 1
    if deg(c) > 0:
        for g, j in squarefree_decomposition(F, _pth_root_poly(F, c)):
            out.append((g, j * F.p))
    return out


def berlekamp(F, f):
    """Irreducible factors of a squarefree monic ``f`` over a finite field."""
    from .linalg import kernel_vectors

    n = deg(f)
    if n <= 1:
        return [f]
    q = F.order
    xq = powmod(F, (F.zero, F.one), q, f)
    rows = []
    cur = (F.one,)
    for _ in range(n):
        rows.append([cur[j] if j < len(cur) else F.zero for j in range(n)])
        cur = mod(F, mul(F, cur, xq), f)
    # g (Q - I) = 0  <=>  (Q - I)^T g = 0
    mat = [[F.sub(rows[i][j], F.one if i == j else F.zero) for i in range(n)] for j in range(n)]
    basis = kernel_vectors(F, mat, n)
    r = len(basis)
    factors = [f]
    if r == 1:
        return factors
    for v in basis:
        g = trim(F, v)
        if deg(g) <= 0:
            continue
        new = []
        for h in factors:
            if deg(h) == 1:
                new.append(h)
                continue
            parts = []
            rest = h
            for c in F.elements():
                d = gcd(F, rest, sub(F, g, (c,)))
                if deg(d) > 0:
                    parts.append(d)
                    rest = divmod_(F, rest, d)[0]
                    if deg(rest) == 0:
                        break
            new.extend(parts if parts else [h])
        factors = new
        if len(factors) == r:
            break
    return factors


def _factor_finite(F, f):
    lead = f[-1]
    f = monic(F, f)
    out = []
    for g, m in squarefree_decomposition(F, f):
        for h in berlekamp(F, g):
            out.append((h, m))
    out.sort()
    return Factorization(lead, out)


# -- rationals ---------------------------------------------------------------

def _divisors(n):
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _primitive_int(f):
    den = 1
    for c in f:
        den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _rational_roots(ints):
    if ints[0] == 0:
        return [Fraction(0)]
    out = []
    for a in _divisors(ints[0]):
        for b in _divisors(ints[-1]):
            for s in (1, -1):
                r = Fraction(s * a, b)
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    out.append(r)
    return sorted(set(out))


def _quadratic_split(F, g):
    """Kronecker search for a quadratic factor of an integer quartic."""
    ints = _primitive_int(g)
    pts = [0, 1, -1]
    vals = [sum(c * x**i for i, c in enumerate(ints)) for x in pts]
    choices = [[s * d for d in _divisors(v) for s in (1, -1)] for v in vals]
    for h0, h1, hm in itertools.product(*choices):
        # h(x) = a x^2 + b x + c through (0,h0), (1,h1), (-1,hm)
        c = h0
        a2 = h1 + hm - 2 * c
        if a2 % 2:
            continue
        a = a2 // 2
        b = h1 - a - c
        if a == 0:
            continue
        h = trim(F, [Fraction(c), Fraction(b), Fraction(a)])
        qt, r = divmod_(F, g, h)
        if not r:
            return monic(F, h), monic(F, qt)
    return None


def _factor_rational(F, f):
    lead = f[-1]
    g = monic(F, f)
    out = {}
    while deg(g) > 0:
        roots = _rational_roots(_primitive_int(g))
        if not roots:
            break
        for r in roots:
            while True:
                qt, rem = divmod_(F, g, x_minus(F, r))
                if rem:
                    break
                out[x_minus(F, r)] = out.get(x_minus(F, r), 0) + 1
                g = qt
    if deg(g) >= 5:
        raise Inconclusive(f"rational factorization of a degree-{deg(g)} rootless factor is unsupported", cap="rational degree 4")
    if deg(g) == 4:
        split = _quadratic_split(F, g)
        if split:
            for h in split:
                out[h] = out.get(h, 0) + 1
            g = ()
    if deg(g) > 0:
        out[g] = out.get(g, 0) + 1
    return Factorization(lead, sorted(out.items()))


def poly_factor(F, f):
    """Factor ``f`` (tuple of raw field values, low -> high) into irreducibles.

    Over QQ only rational roots and quadratic factors of quartics are found;
    a rootless remainder of degree >= 5 raises :class:`Inconclusive`.
    """
    f = trim(F, f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if deg(f) == 0:
        return Factorization(f[0], [])
    if F.kind == "rational":
        return _factor_rational(F, f)
    return _factor_finite(F, f)
