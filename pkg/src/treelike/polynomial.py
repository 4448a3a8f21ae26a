"""Dense polynomials with arbitrary-precision integer coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class NonIntegerCoefficient(ArithmeticError):
    pass


class IntPolynomial:
    """``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_histogram(cls, hist: dict[int, int]) -> "IntPolynomial":
        if not hist:
            return cls()
        c = [0] * (max(hist) + 1)
        for k, v in hist.items():
            c[k] += v
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(m))

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * a for k, a in enumerate(self.coeffs) if k)

    def antiderivative(self, constant: int = 0) -> "IntPolynomial":
        out = [constant]
        for k, a in enumerate(self.coeffs):
            q, r = divmod(a, k + 1)
            if r:
                raise NonIntegerCoefficient(f"{a} x^{k} integrates to {Fraction(a, k + 1)} x^{k + 1}")
            out.append(q)
        return IntPolynomial(out)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            coef = "" if a == 1 and k else str(a)
            terms.append(coef + ("" if k == 0 else "x" if k == 1 else f"x^{k}"))
        return " + ".join(terms) or "0"


X = IntPolynomial([0, 1])
ONE = IntPolynomial([1])


def variance_from_polynomial(P: IntPolynomial) -> Fraction:
    """Variance of the exponent under the distribution with weights ``P``'s
    coefficients, from exact derivatives at 1."""
    total = P(1)
    d1 = P.derivative()
    d2 = d1.derivative()
    mean = Fraction(d1(1), total)
    return Fraction(d2(1) + d1(1), total) - mean * mean
