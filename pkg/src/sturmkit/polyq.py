"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending (coeffs[k] multiplies x**k) with no
trailing zeros, so degree == len(coeffs) - 1 and the zero polynomial has
an empty tuple.  Text form is "x^3 - 3*x + 1" style, descending powers.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .arith import format_rational, is_prime, parse_rational

_Q = Fraction


class Poly:
    """Immutable polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _Q(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly([c * _Q(other) for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [_Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner; exact for int/Fraction x, numeric otherwise."""
        if isinstance(x, int):
            x = _Q(x)
        result = x * 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("zero polynomial cannot be made monic")
        inv = 1 / self.lead
        return Poly([c * inv for c in self.coeffs])

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division f = q*g + r with deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if f.degree < g.degree:
        return Poly(), f
    rem = list(f.coeffs)
    quo = [_Q(0)] * (f.degree - g.degree + 1)
    glead = g.lead
    for k in range(f.degree - g.degree, -1, -1):
        c = rem[k + g.degree] / glead
        quo[k] = c
        if c:
            for i, gc in enumerate(g.coeffs):
                rem[k + i] -= c * gc
    return Poly(quo), Poly(rem[: g.degree])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def derivative(f: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(f.coeffs)][1:])


def descartes_bound(f: Poly) -> int:
    """Sign changes in the coefficient sequence, zero coefficients skipped.

    An upper bound on the number of positive real roots, and of the same
    parity.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no sign sequence")
    signs = [1 if c > 0 else -1 for c in f.coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cubic_real_root_count(p, q) -> int:
    """Distinct real roots of x**3 + p*x + q, from the sign of -4p^3 - 27q^2.

    Negative sign means one real root, positive means three; on the
    boundary there are two (a double and a simple root), except the
    degenerate p = q = 0 triple root, which counts once.
    """
    p, q = _Q(p), _Q(q)
    d = -4 * p**3 - 27 * q**2
    if d > 0:
        return 3
    if d < 0:
        return 1
    return 1 if p == 0 and q == 0 else 2


def shift_poly(f: Poly, c) -> Poly:
    """Exact Taylor shift: the polynomial g with g(x) = f(x + c)."""
    shift = Poly([_Q(c), _Q(1)])
    result = Poly()
    for coef in reversed(f.coeffs):
        result = result * shift + Poly.constant(coef)
    return result


def depress(f: Poly) -> tuple[Poly, Fraction]:
    """Remove the second-highest coefficient of a cubic or quartic.

    Returns (g, s) with g monic, zero coefficient at degree n-1, and
    every root x of f equal to y - s for a root y of g.
    """
    n = f.degree
    if n not in (3, 4):
        raise ValueError("depress expects degree 3 or 4")
    m = f.monic()
    s = m.coeffs[n - 1] / n
    return shift_poly(m, -s), s


def eisenstein(f: Poly, p: int) -> bool:
    """Eisenstein irreducibility test at the prime p.

    True iff p does not divide the leading coefficient, divides all the
    others, and p**2 does not divide the constant term.  A pass certifies
    irreducibility over Q.
    """
    if f.degree < 1:
        raise ValueError("eisenstein needs a nonconstant polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if any(c.denominator != 1 for c in f.coeffs):
        raise ValueError("eisenstein needs integer coefficients")
    ints = [c.numerator for c in f.coeffs]
    if ints[-1] % p == 0:
        return False
    if any(c % p for c in ints[:-1]):
        return False
    return ints[0] % (p * p) != 0


# ----- text form ------------------------------------------------------

_TERM = re.compile(
    r"^(?P<sign>[+-])?"
    r"(?P<coef>\d+(?:/\d+)?)?"
    r"(?:\*?(?P<var>x)(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(s: str) -> Poly:
    """Parse "x^3 - 3*x + 1" style text (also accepts ** for ^)."""
    compact = s.replace("**", "^").replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(terms) != compact:
        raise ValueError(f"cannot parse polynomial: {s!r}")
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM.match(term)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {term!r} in {s!r}")
        neg = m.group("sign") == "-"
        raw = m.group("coef")
        coef = _Q(1) if raw is None else parse_rational(raw)
        if neg:
            coef = -coef
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, _Q(0)) + coef
    out = [_Q(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(out)


def format_poly(f: Poly) -> str:
    """Canonical text, descending powers: "x^3 - 3*x + 1"."""
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{format_rational(mag)}*{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
