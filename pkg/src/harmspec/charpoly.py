"""Exact univariate polynomials over the rationals, characteristic
polynomials of rational symmetric matrices, and the closed-form harmonic
characteristic polynomials of the named graph families.

The characteristic polynomial is computed with the Faddeev-LeVerrier trace
recursion. To keep the big-rational arithmetic cheap the recursion runs on
the denominator-cleared integer matrix and the coefficients are rescaled at
the end; the result is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .families import FamilySpec
from .graphs import Graph

Rat = int | Fraction


class RatPoly:
    """Dense univariate polynomial over Fraction, ascending coefficients.

    Canonical form: no trailing zero coefficients; the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def one() -> "RatPoly":
        return RatPoly((1,))

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly((0, 1))

    @staticmethod
    def monomial(k: int, c: Rat = 1) -> "RatPoly":
        return RatPoly((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "RatPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "RatPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, x: Rat) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __call__(self, x: Rat) -> Fraction:
        return self.evaluate(x)

    def __repr__(self):
        return f"RatPoly({poly_text(self)})"


def _coerce(value) -> "RatPoly":
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RatPoly((value,))
    return NotImplemented


# ---------------------------------------------------------------------------
# Characteristic polynomial
# ---------------------------------------------------------------------------


def char_poly(matrix: Sequence[Sequence[Rat]]) -> RatPoly:
    """Monic characteristic polynomial det(xI - M) of a square rational
    matrix, computed exactly."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return RatPoly.one()

    entries = [[Fraction(x) for x in row] for row in matrix]
    scale = math.lcm(*(x.denominator for row in entries for x in row))
    a = [[int(x * scale) for x in row] for row in entries]

    # Faddeev-LeVerrier on the integer matrix A = scale*M:
    #   M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    # All c are integers and the trace is divisible by k at every step.
    mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cs = [0] * (n + 1)
    cs[n] = 1
    for k in range(1, n + 1):
        amk = _int_matmul(a, mk)
        t = sum(amk[i][i] for i in range(n))
        q, r = divmod(-t, k)
        if r:
            raise ArithmeticError("trace recursion lost exactness")
        cs[n - k] = q
        if k < n:
            for i in range(n):
                amk[i][i] += q
            mk = amk

    # det(xI - M) = scale**-n * det(scale*x*I - A); rescale coefficients.
    return RatPoly([Fraction(cs[i], scale ** (n - i)) for i in range(n + 1)])


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


# ---------------------------------------------------------------------------
# The tridiagonal determinant sequence
# ---------------------------------------------------------------------------

_TRIDIAG: list[RatPoly] = [RatPoly.one(), RatPoly.x()]


def tridiag_charpoly(k: int) -> RatPoly:
    """Determinant of the k x k tridiagonal matrix with the variable on the
    diagonal and -1/2 off it.

    Satisfies D_k = x*D_{k-1} - (1/4)*D_{k-2} with D_0 = 1 (the empty
    determinant) and D_1 = x. Equals the characteristic polynomial of the
    k-vertex path with uniform edge weight 1/2.
    """
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    x = RatPoly.x()
    quarter = Fraction(1, 4)
    while len(_TRIDIAG) <= k:
        _TRIDIAG.append(x * _TRIDIAG[-1] - quarter * _TRIDIAG[-2])
    return _TRIDIAG[k]


# ---------------------------------------------------------------------------
# Closed-form harmonic characteristic polynomials, stated per family.
# Each function expands the published formula to canonical form; whether the
# formula agrees with the exact char_poly oracle is the audit module's job.
# ---------------------------------------------------------------------------


def closed_form_path_statement(n: int) -> RatPoly:
    """Path form with leading term x*D_{n-2} (degree n-1)."""
    if n < 4:
        raise ValueError(f"path closed form requires n >= 4, got {n}")
    x = RatPoly.x()
    return (
        x * tridiag_charpoly(n - 2)
        - Fraction(8, 9) * x * tridiag_charpoly(n - 3)
        + Fraction(16, 81) * tridiag_charpoly(n - 4)
    )


def closed_form_path_proof(n: int) -> RatPoly:
    """Path form with leading term x^2*D_{n-2} (degree n)."""
    if n < 4:
        raise ValueError(f"path closed form requires n >= 4, got {n}")
    x = RatPoly.x()
    return (
        x * x * tridiag_charpoly(n - 2)
        - Fraction(8, 9) * x * tridiag_charpoly(n - 3)
        + Fraction(16, 81) * tridiag_charpoly(n - 4)
    )


def closed_form_cycle(n: int) -> RatPoly:
    if n < 3:
        raise ValueError(f"cycle closed form requires n >= 3, got {n}")
    x = RatPoly.x()
    return (
        x * tridiag_charpoly(n - 1)
        - Fraction(1, 2) * tridiag_charpoly(n - 2)
        - RatPoly((Fraction(1, 2) ** (n - 1),))
    )


def closed_form_star(n: int) -> RatPoly:
    if n < 2:
        raise ValueError(f"star closed form requires n >= 2, got {n}")
    x = RatPoly.x()
    return RatPoly.monomial(n - 2) * (x * x - Fraction(4 * (n - 1), n * n))


def closed_form_complete(n: int) -> RatPoly:
    if n < 2:
        raise ValueError(f"complete closed form requires n >= 2, got {n}")
    x = RatPoly.x()
    return (x - 1) * (x + Fraction(1, n - 1)) ** (n - 1)


def closed_form_complete_bipartite(m: int, n: int) -> RatPoly:
    if m < 1 or n < 1:
        raise ValueError(f"complete bipartite closed form requires m, n >= 1, got ({m}, {n})")
    x = RatPoly.x()
    return RatPoly.monomial(m + n - 2) * (x * x - Fraction(4 * m * n, (m + n) ** 2))


def closed_form_friendship(n: int) -> RatPoly:
    if n < 1:
        raise ValueError(f"friendship closed form requires n >= 1, got {n}")
    x = RatPoly.x()
    half = Fraction(1, 2)
    quad = x * x - half * x - Fraction(2 * n, (n + 1) ** 2)
    return (x - half) ** (n - 1) * (x + half) ** n * quad


def closed_form_windmill_product(m: int, n: int) -> RatPoly:
    """Claimed factorization: D_{m-1}^{n-1} times the cycle closed form."""
    if m < 3:
        raise ValueError(f"windmill closed form requires m >= 3, got m={m}")
    if n < 1:
        raise ValueError(f"windmill closed form requires n >= 1, got n={n}")
    return tridiag_charpoly(m - 1) ** (n - 1) * closed_form_cycle(m)


def closed_form_windmill4(n: int) -> RatPoly:
    """Dedicated formula for windmills with quadrilateral blades."""
    if n < 1:
        raise ValueError(f"windmill4 closed form requires n >= 1, got {n}")
    x = RatPoly.x()
    quad = x * x - Fraction(4 * n + (n + 1) ** 2, 2 * (n + 1) ** 2)
    return RatPoly.monomial(n + 1) * (x * x - Fraction(1, 2)) ** (n - 1) * quad


def closed_form_windmill5(n: int) -> RatPoly:
    """Dedicated formula for windmills with pentagonal blades, taken
    literally: the cubic factor carries two separate linear terms and no
    quadratic term."""
    if n < 1:
        raise ValueError(f"windmill5 closed form requires n >= 1, got {n}")
    x = RatPoly.x()
    half = Fraction(1, 2)
    quarter = Fraction(1, 4)
    cubic = (
        x ** 3
        - half * x
        - Fraction(8 * n + (n + 1) ** 2, 4 * (n + 1) ** 2) * x
        - Fraction(n, (n + 1) ** 2)
    )
    return (x * x - half * x - quarter) ** (n - 1) * (x * x + half * x - quarter) ** n * cubic


def closed_form_book(n: int) -> RatPoly:
    if n < 1:
        raise ValueError(f"book closed form requires n >= 1, got {n}")
    x = RatPoly.x()
    b = Fraction(n + 3, 2 * (n + 1))
    c = Fraction(7 * n * n + 2 * n - 9, 2 * (n + 1) * (n + 3) ** 2)
    return (x * x - Fraction(1, 2)) ** (n - 1) * (x * x + b * x + c) * (x * x - b * x + c)


def closed_form_petersen() -> RatPoly:
    x = RatPoly.x()
    return (x - 1) * (x + Fraction(2, 3)) ** 4 * (x - Fraction(1, 3)) ** 5


def closed_form(spec: FamilySpec, path_variant: str = "proof") -> RatPoly:
    """Dispatch to the published closed form for a family spec.

    For paths two textual variants exist; ``path_variant`` selects
    "statement" or "proof" (default). Dutch windmills dispatch to the
    dedicated 4- and 5-cycle formulas when m is 4 or 5, otherwise to the
    general claimed factorization.
    """
    fam = spec.family
    if fam == "path":
        if path_variant == "statement":
            return closed_form_path_statement(spec.n)
        if path_variant == "proof":
            return closed_form_path_proof(spec.n)
        raise ValueError(f"unknown path variant {path_variant!r}")
    if fam == "cycle":
        return closed_form_cycle(spec.n)
    if fam == "star":
        return closed_form_star(spec.n)
    if fam == "complete":
        return closed_form_complete(spec.n)
    if fam == "complete_bipartite":
        return closed_form_complete_bipartite(spec.m, spec.n)
    if fam == "friendship":
        return closed_form_friendship(spec.n)
    if fam == "dutch_windmill":
        if spec.m == 4:
            return closed_form_windmill4(spec.n)
        if spec.m == 5:
            return closed_form_windmill5(spec.n)
        return closed_form_windmill_product(spec.m, spec.n)
    if fam == "book":
        return closed_form_book(spec.n)
    if fam == "petersen":
        return closed_form_petersen()
    raise ValueError(f"no closed form registered for family {spec.family!r}")


def graph_char_poly(g: Graph) -> RatPoly:
    """Exact characteristic polynomial of the harmonic matrix of g."""
    from .harmonic import harmonic_matrix

    return char_poly(harmonic_matrix(g))


# ---------------------------------------------------------------------------
# Rational root extraction and display
# ---------------------------------------------------------------------------


def rational_roots(p: RatPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, sorted in descending order.

    Uses the rational root test on the denominator-cleared polynomial.
    Divisor enumeration factors by trial division; the coefficients this
    toolkit produces are smooth, so the candidate set stays small.
    """
    if p.is_zero or p.degree == 0:
        return []
    # Strip zero roots first.
    zero_mult = 0
    coeffs = list(p.coeffs)
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    roots: list[tuple[Fraction, int]] = []
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    q = RatPoly(coeffs)
    if q.degree >= 1:
        scale = math.lcm(*(c.denominator for c in q.coeffs))
        ints = [int(c * scale) for c in q.coeffs]
        for cand in _root_candidates(ints[0], ints[-1]):
            mult = 0
            while q.degree >= 1 and q.evaluate(cand) == 0:
                q = _deflate(q, cand)
                mult += 1
            if mult:
                roots.append((cand, mult))
    roots.sort(key=lambda rm: rm[0], reverse=True)
    return roots


def _root_candidates(constant: int, leading: int) -> list[Fraction]:
    nums = _divisors(abs(constant))
    dens = _divisors(abs(leading))
    cands = {Fraction(a, b) for a in nums for b in dens}
    out: set[Fraction] = set()
    for c in cands:
        out.add(c)
        out.add(-c)
    return sorted(out)


def _divisors(n: int) -> list[int]:
    if n == 0:
        return [1]
    factors: dict[int, int] = {}
    m = n
    d = 2
    while d * d <= m and d <= 100_000:
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    divs = [1]
    for prime, mult in factors.items():
        divs = [dv * prime**e for dv in divs for e in range(mult + 1)]
    return sorted(divs)


def _deflate(p: RatPoly, root: Fraction) -> RatPoly:
    """Exact synthetic division of p by (x - root); assumes p(root) == 0."""
    out = []
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * root + c
        out.append(acc)
    assert out[-1] == 0
    return RatPoly(list(reversed(out[:-1])))


def _fraction_text(x: Fraction) -> str:
    return str(x)


def poly_text(p: RatPoly, var: str = "λ") -> str:
    """Expanded human-readable form, highest power first."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _fraction_text(mag)
        else:
            xpow = var if k == 1 else f"{var}^{k}"
            body = xpow if mag == 1 else f"{_fraction_text(mag)} {xpow}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def factored_display(p: RatPoly, var: str = "λ") -> str:
    """Product of (var - r)^m factors over the rational roots, times the
    remaining factor (free of rational roots) printed expanded."""
    if p.is_zero:
        return "0"
    if p.degree == 0:
        return _fraction_text(p.coeffs[0])
    roots = rational_roots(p)
    q = p
    for root, mult in roots:
        for _ in range(mult):
            q = _deflate(q, root)
    parts = []
    for root, mult in roots:
        if root == 0:
            base = var
        elif root > 0:
            base = f"({var} - {_fraction_text(root)})"
        else:
            base = f"({var} + {_fraction_text(-root)})"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    if q.degree >= 1:
        body = poly_text(q, var)
        parts.append(f"({body})" if parts else body)
    elif q != RatPoly.one() or not parts:
        # Constant factor left over (non-monic input or constant poly).
        parts.insert(0, _fraction_text(q.coeffs[0]) if not q.is_zero else "0")
    return "".join(parts) if parts else "1"


def poly_json(p: RatPoly) -> dict:
    """JSON-ready form: ascending coefficients as {num, den} objects."""
    return {
        "degree": p.degree,
        "coefficients": [
            {"num": c.numerator, "den": c.denominator} for c in p.coeffs
        ],
    }
