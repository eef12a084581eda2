"""Closed-form cubic and quartic solvers with numeric root output.

The depression step is exact (rational arithmetic); root extraction is
double precision with one round of Newton polish.  A root is classified
real when |Im| < IM_EPS after polishing.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .polyq import Poly, depress

# Classification threshold on the imaginary part, applied after polish.
IM_EPS = 1e-9


@dataclass(frozen=True)
class RootSet:
    """All roots of a polynomial, with multiplicity; len(roots) == degree.

    residual_bound is the measured max |f(root)| over the returned roots,
    so |f(root)| <= residual_bound holds by construction.
    """

    roots: tuple[complex, ...]
    residual_bound: float

    def real_roots(self) -> tuple[float, ...]:
        return tuple(r.real for r in self.roots if abs(r.imag) < IM_EPS)


def _cbrt(t: float) -> float:
    # Real cube root, negative inputs allowed.
    return math.copysign(abs(t) ** (1.0 / 3.0), t)


def _polish(f: Poly, z: complex, steps: int = 3) -> complex:
    fp = [complex(c) for c in f.coeffs]
    dp = [k * c for k, c in enumerate(fp)][1:]

    def ev(cs: list[complex], x: complex) -> complex:
        acc = 0j
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    best, best_val = z, abs(ev(fp, z))
    for _ in range(steps):
        d = ev(dp, z)
        if d == 0:
            break
        z = z - ev(fp, z) / d
        val = abs(ev(fp, z))
        if val < best_val:
            best, best_val = z, val
        else:
            break
    return best


def _finish(f: Poly, roots: list[complex]) -> RootSet:
    polished = []
    for z in roots:
        z = _polish(f, z)
        if abs(z.imag) < IM_EPS:
            z = complex(z.real, 0.0)
        polished.append(z)
    polished.sort(key=lambda z: (z.real, z.imag))
    residual = max(abs(f(z)) for z in polished)
    if any(not (math.isfinite(z.real) and math.isfinite(z.imag)) for z in polished):
        raise ArithmeticError("non-finite root escaped the solver")
    return RootSet(tuple(polished), residual)


def solve_cubic(f: Poly) -> RootSet:
    """Roots of a degree-3 polynomial.

    After depressing to y^3 + p*y + q: three real roots (positive
    discriminant -4p^3 - 27q^2) go through the cosine method, everything
    else through del Ferro with real cube roots, so no complex
    intermediate appears when it can be avoided.
    """
    if f.degree != 3:
        raise ValueError("solve_cubic expects degree 3")
    g, shift = depress(f)
    p = float(g.coeff(1))
    q = float(g.coeff(0))
    s = float(shift)
    if g.coeff(1) == 0 and g.coeff(0) == 0:
        ys: list[complex] = [0j, 0j, 0j]
    else:
        disc = -4 * p**3 - 27 * q**2
        if disc > 0:
            # casus irreducibilis: three distinct real roots
            m = 2.0 * math.sqrt(-p / 3.0)
            theta = math.acos(max(-1.0, min(1.0, 3.0 * q / (p * m))))
            ys = [
                complex(m * math.cos((theta + 2.0 * math.pi * k) / 3.0), 0.0)
                for k in range(3)
            ]
        else:
            d = math.sqrt(max(q * q / 4.0 + p**3 / 27.0, 0.0))
            u = _cbrt(-q / 2.0 + d)
            v = _cbrt(-q / 2.0 - d)
            w = u + v
            half = math.sqrt(3.0) / 2.0 * (u - v)
            ys = [complex(w, 0.0), complex(-w / 2.0, half), complex(-w / 2.0, -half)]
    return _finish(f, [y - s for y in ys])


def resolvent_cubic(f: Poly) -> Poly:
    """Resolvent of a depressed quartic x^4 + p*x^2 + q*x + r.

    The monic cubic in alpha whose roots make (x^2 + alpha)^2 - f(x) a
    perfect square of a linear polynomial; derived by zeroing the
    discriminant q^2 - 4(2*alpha - p)(alpha^2 - r).
    """
    if f.degree != 4 or f.lead != 1 or f.coeff(3) != 0:
        raise ValueError("resolvent_cubic expects a depressed monic quartic")
    p, q, r = f.coeff(2), f.coeff(1), f.coeff(0)
    return Poly([p * r / 2 - q * q / 8, -r, -p / 2, 1])


def _quadratic(b: complex, c: complex) -> list[complex]:
    # Roots of x^2 + b*x + c.
    d = cmath.sqrt(b * b - 4 * c)
    return [(-b + d) / 2, (-b - d) / 2]


def solve_quartic(f: Poly) -> RootSet:
    """Roots of a degree-4 polynomial via the resolvent cubic.

    The resolvent root is the largest real one; the resolvent is
    nonpositive at alpha = p/2, so that choice keeps 2*alpha - p >= 0 and
    the square root b real.
    """
    if f.degree != 4:
        raise ValueError("solve_quartic expects degree 4")
    g, shift = depress(f)
    s = float(shift)
    p = float(g.coeff(2))
    q = float(g.coeff(1))
    r = float(g.coeff(0))
    if g.coeff(1) == 0:
        # biquadratic: z^2 + p*z + r in z = x^2
        ys = []
        for z in _quadratic(complex(p), complex(r)):
            w = cmath.sqrt(z)
            ys.extend([w, -w])
    else:
        res = solve_cubic(resolvent_cubic(g))
        alpha = max(res.real_roots())
        b = math.sqrt(max(2.0 * alpha - p, 0.0))
        c = -q / (2.0 * b)
        ys = _quadratic(complex(-b), complex(alpha - c)) + _quadratic(
            complex(b), complex(alpha + c)
        )
    return _finish(f, [y - s for y in ys])
