"""Integer-coefficient Laurent polynomials in one variable.

Used for the Kauffman bracket / Jones fingerprint (variable A) and the
Alexander polynomial (variable t). Arithmetic is exact; zero coefficients
are never stored.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple


class LaurentPoly:
    """Sparse Laurent polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, int] | Iterable[Tuple[int, int]] = ()):
        d = dict(coeffs)
        self.coeffs = {e: c for e, c in d.items() if c}

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.terms())

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        r = dict(self.coeffs)
        for e, c in other.coeffs.items():
            r[e] = r.get(e, 0) + c
        return LaurentPoly(r)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        r = dict(self.coeffs)
        for e, c in other.coeffs.items():
            r[e] = r.get(e, 0) - c
        return LaurentPoly(r)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        r: Dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                r[e] = r.get(e, 0) + c1 * c2
        return LaurentPoly(r)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def min_exp(self) -> int:
        return min(self.coeffs)

    def max_exp(self) -> int:
        return max(self.coeffs)

    def span(self) -> int:
        return self.max_exp() - self.min_exp() if self.coeffs else 0

    def __call__(self, x: int) -> int:
        """Evaluate at an integer (negative exponents need |x| == 1)."""
        total = 0
        for e, c in self.coeffs.items():
            if e >= 0:
                total += c * x**e
            elif abs(x) == 1:
                total += c * (1 if e % 2 == 0 else x)
            else:
                raise ValueError("negative exponent at non-unit argument")
        return total

    def terms(self) -> Tuple[Tuple[int, int], ...]:
        """Ascending (exponent, coefficient) pairs; canonical serialization."""
        return tuple(sorted(self.coeffs.items()))

    def pretty(self, var: str = "A") -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            sign = "-" if c < 0 else ("+" if bits else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                pow_ = var if e == 1 else f"{var}^{e}"
                body = pow_ if mag == 1 else f"{mag}*{pow_}"
            bits.append(f"{sign} {body}" if bits else f"{sign}{body}")
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.pretty()})"
