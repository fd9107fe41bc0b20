"""Exact fields: the rationals and finite fields GF(p^k) with p^k <= 2**16.

Elements are plain Python values so the linear algebra can stay generic:

* ``QQ`` uses :class:`fractions.Fraction`;
* ``GF(p)`` uses ints in ``range(p)``;
* ``GF(p, k)`` uses int codes ``sum(c_i * p**i)`` for the residue
  ``sum(c_i t**i)`` modulo the defining polynomial, multiplied through
  log/antilog tables.

:class:`FieldElem` wraps a value together with its field for callers that
want operator syntax and mixed-field checks.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch

MAX_ORDER = 2**16


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


# -- small polynomial helpers over GF(p) on coefficient lists (low -> high) --

def _pmod(a, f, p):
    a = list(a)
    n = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= n and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - n
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _is_primitive(f, p):
    n = len(f) - 1
    if f[0] == 0:
        return False
    order = p**n - 1
    x = [0, 1]
    if _ppowmod(x, order, f, p) != [1]:
        return False
    return all(_ppowmod(x, order // r, f, p) != [1] for r in _prime_factors(order))


@functools.lru_cache(maxsize=None)
def conway_polynomial(p, k):
    """Conway polynomial for GF(p^k), coefficients low -> high, monic.

    Computed by the defining search: least (in Conway's alternating-sign
    lexicographic order) primitive polynomial whose roots are compatible
    with the Conway polynomials of every proper subfield.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**k > MAX_ORDER:
        raise ValueError(f"field of order {p}^{k} exceeds {MAX_ORDER}")
    if k == 1:
        # least primitive root g; the polynomial is x - g
        for g in range(1, p):
            if p == 2 or all(pow(g, (p - 1) // r, p) != 1 for r in _prime_factors(p - 1)):
                return ((-g) % p, 1)
    sub = [d for d in _divisors(k) if d < k]
    total = p**k
    for code in range(total):
        # code enumerates (t_{k-1}, ..., t_0) lexicographically
        t = []
        c = code
        for _ in range(k):
            t.append(c % p)
            c //= p
        t.reverse()  # t[0] = t_{k-1}
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        for idx, ti in enumerate(t):
            i = k - 1 - idx
            sign = 1 if (k - i) % 2 == 0 else -1
            coeffs[i] = (sign * ti) % p
        if coeffs[0] == 0 or not _is_primitive(coeffs, p):
            continue
        ok = True
        for d in sub:
            g = conway_polynomial(p, d)
            e = (p**k - 1) // (p**d - 1)
            beta = _ppowmod([0, 1], e, coeffs, p)
            acc = []
            for gi in reversed(g):
                acc = _pmulmod(acc, beta, coeffs, p)
                acc = _pmod(_padd(acc, [gi], p), coeffs, p)
            if acc:
                ok = False
                break
        if ok:
            return tuple(coeffs)
    raise AssertionError("no Conway polynomial found")


class Field:
    """An exact field. Construct through :func:`QQ` or :func:`GF`."""

    def __init__(self, kind, p=0, k=1, modulus=None):
        self.kind = kind
        self.p = p
        self.k = k
        self.modulus = tuple(modulus) if modulus is not None else None
        if kind == "rational":
            self.order = None
            self.zero = Fraction(0)
            self.one = Fraction(1)
            return
        self.order = p**k
        self.zero = 0
        self.one = 1
        if k > 1:
            self._build_tables()

    # -- identity ---------------------------------------------------------
    @property
    def signature(self):
        return (self.kind, self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    def __repr__(self):
        if self.kind == "rational":
            return "QQ"
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    @property
    def name(self):
        if self.kind == "rational":
            return "Q"
        return f"F{self.order}"

    @property
    def is_finite(self):
        return self.kind == "finite"

    @property
    def characteristic(self):
        return 0 if self.kind == "rational" else self.p

    # -- tables for GF(p^k) -------------------------------------------------
    def _build_tables(self):
        p, q = self.p, self.order
        f = list(self.modulus)
        # find a generator of the multiplicative group
        for gcode in range(p, q):
            g = self._code_to_poly(gcode)
            exp = [0] * (q - 1)
            cur = [1]
            seen = set()
            good = True
            for i in range(q - 1):
                c = self._poly_to_code(cur)
                if c in seen:
                    good = False
                    break
                seen.add(c)
                exp[i] = c
                cur = _pmulmod(cur, g, f, p)
            if good:
                break
        else:  # pragma: no cover - modulus was validated irreducible
            raise ValueError("defining polynomial is not irreducible")
        self._exp = exp
        self._log = [0] * q
        for i, c in enumerate(exp):
            self._log[c] = i
        self.generator = exp[1] if q > 2 else 1

    def _code_to_poly(self, c):
        out = []
        while c:
            out.append(c % self.p)
            c //= self.p
        return out

    def _poly_to_code(self, coeffs):
        c = 0
        for x in reversed(coeffs):
            c = c * self.p + x
        return c

    # -- arithmetic on raw values -------------------------------------------
    def coerce(self, x):
        """Map an int (or Fraction for QQ) into the field."""
        if self.kind == "rational":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by characteristic")
            return self.mul(self.from_int(x.numerator), self.inv(self.from_int(x.denominator)))
        return self.from_int(x)

    def from_int(self, n):
        if self.kind == "rational":
            return Fraction(n)
        return n % self.p

    def add(self, a, b):
        if self.kind == "rational":
            return a + b
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        r, m = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return r

    def neg(self, a):
        if self.kind == "rational":
            return -a
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        p = self.p
        r, m = 0, 1
        while a:
            r += ((-(a % p)) % p) * m
            a //= p
            m *= p
        return r

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "rational":
            return a * b
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        if self.kind == "rational":
            return 1 / a
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if self.kind == "rational":
            return a**e
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inversion of zero")
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e % (self.p - 1), self.p)
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def frobenius(self, a, q=None):
        """Return ``a**q`` where ``q`` is a power of the characteristic."""
        if self.kind == "rational":
            raise TypeError("frobenius is undefined on the rationals")
        q = self.p if q is None else q
        r = q
        while r % self.p == 0:
            r //= self.p
        if r != 1 or q < self.p:
            raise ValueError(f"{q} is not a power of the characteristic {self.p}")
        return self.pow(a, q)

    def elements(self):
        if self.kind == "rational":
            raise TypeError("the rationals are infinite")
        return range(self.order)

    def element(self, x):
        return FieldElem(self, self.coerce(x))

    def from_code(self, code):
        """Element of GF(p^k) with residue coefficients given by base-p digits."""
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self}")
        return FieldElem(self, code)

    def gen(self):
        """The residue class of ``t`` (code ``p``) in GF(p^k)."""
        if self.kind == "rational" or self.k == 1:
            raise TypeError("no polynomial generator for a prime field")
        return FieldElem(self, self.p)

    def format(self, a):
        if self.kind == "rational" or self.k == 1:
            return str(a)
        coeffs = self._code_to_poly(a)
        if not coeffs:
            return "0"
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)

    def to_json(self):
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "finite", "p": self.p, "k": self.k, "modulus": list(self.modulus or ())}


@functools.lru_cache(maxsize=None)
def QQ():
    return Field("rational")


@functools.lru_cache(maxsize=None)
def GF(p, k=1, modulus=None):
    """The finite field of order ``p**k``.

    ``modulus`` (coefficients low -> high, monic, degree ``k``) overrides the
    default Conway polynomial; it must be irreducible over GF(p).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p**k > MAX_ORDER:
        raise ValueError(f"field of order {p}^{k} exceeds the supported bound {MAX_ORDER}")
    if k == 1:
        return Field("finite", p, 1, None)
    if modulus is None:
        modulus = conway_polynomial(p, k)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise ValueError("modulus must be monic of degree k")
    if not _is_irreducible_fp(list(modulus), p):
        raise ValueError(f"modulus {modulus} is reducible over GF({p})")
    return Field("finite", p, k, modulus)


def _is_irreducible_fp(f, p):
    # Rabin's test
    n = len(f) - 1
    x = [0, 1]
    if _ppowmod(x, p**n, f, p) != _pmod(x, f, p):
        return False
    for r in _prime_factors(n):
        h = _ppowmod(x, p ** (n // r), f, p)
        h = list(h) + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        while h and h[-1] == 0:
            h.pop()
        a, b = list(f), h
        while b:
            a, b = b, _pmod(a, b, p)
        if len(a) > 1:
            return False
    return True


def parse_field(text):
    """Parse ``Q``, ``F5``, ``F9``, ``GF(2^4)`` style names."""
    s = text.strip().upper().replace(" ", "")
    if s in ("Q", "QQ", "RATIONAL"):
        return QQ()
    if s.startswith("GF(") and s.endswith(")"):
        body = s[3:-1]
        if "^" in body:
            p, k = body.split("^")
            return GF(int(p), int(k))
        s = "F" + body
    if s.startswith("F") and s[1:].isdigit():
        q = int(s[1:])
        for p in range(2, q + 1):
            if q % p == 0:
                k, r = 0, q
                while r % p == 0:
                    r //= p
                    k += 1
                if r != 1 or not _is_prime(p):
                    break
                return GF(p, k)
    raise ValueError(f"unrecognised field {text!r}")


@dataclass(frozen=True)
class FieldElem:
    """A field value bundled with its field, for operator-style arithmetic."""

    field: Field
    value: object

    def _check(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._check(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._check(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._check(other)))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inv(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def frobenius(self, q=None):
        return FieldElem(self.field, self.field.frobenius(self.value, q))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != self.field.zero

    def __repr__(self):
        return self.field.format(self.value)


def field_arithmetic(a, b, op):
    """Dispatch ``add``/``mul``/``inv``/``neg`` on :class:`FieldElem` values."""
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def frobenius(a, q):
    return a.frobenius(q)


def embedding(small, big):
    """Field embedding ``small -> big`` as a lookup function on raw values.

    Requires ``small.k`` to divide ``big.k``. When both moduli are Conway
    polynomials the canonical Conway-compatible root is used, otherwise the
    smallest root code.
    """
    if small.kind != "finite" or big.kind != "finite" or small.p != big.p:
        raise FieldMismatch(f"cannot embed {small} in {big}")
    if big.k % small.k:
        raise FieldMismatch(f"{small} is not a subfield of {big}")
    if small.k == 1:
        return lambda a: a
    g = small.modulus

    def ev(x):
        acc = 0
        for c in reversed(g):
            acc = big.add(big.mul(acc, x), c)
        return acc

    root = None
    if small.modulus == conway_polynomial(small.p, small.k) and big.modulus == conway_polynomial(big.p, big.k):
        e = (big.order - 1) // (small.order - 1)
        cand = big.pow(big.p, e)
        if ev(cand) == 0:
            root = cand
    if root is None:
        root = next(x for x in big.elements() if ev(x) == 0)
    table = []
    for code in small.elements():
        coeffs = small._code_to_poly(code)
        acc = 0
        for c in reversed(coeffs):
            acc = big.add(big.mul(acc, root), c)
        table.append(acc)
    return table.__getitem__
