"""Exact univariate rational functions with factored-linear denominators.

Every rational function in scope has all its poles at explicitly known
rational points (contents of boxes, possibly shifted by integers), so the
denominator is stored as a multiset of roots and no root-finding ever
happens.  Numerators are dense polynomials over Q.  The two workhorses are
Laurent expansion at infinity (moment/cumulant extraction) and exact residue
extraction at a point, for poles of any order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class PoleEvaluationError(ZeroDivisionError):
    """Evaluation at a pole of the function."""


class Poly:
    """Dense univariate polynomial over Q, coefficients by ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def linear(root: Fraction) -> "Poly":
        """The monic factor z - root."""
        return Poly([-Fraction(root), Fraction(1)])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
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

    def __mul__(self, other: "Poly | Fraction | int") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a: Fraction) -> "Poly":
        """Return p(z + a) via Taylor recentering."""
        if not a:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            # c * (z + a)^i
            p = Fraction(1)
            for k in range(i, -1, -1):
                out[k] += c * comb(i, k) * p
                p *= a
        return Poly(out)

    def divide_linear(self, root: Fraction) -> "Poly":
        """Exact synthetic division by (z - root); requires p(root) == 0."""
        cs = self.coeffs
        n = len(cs) - 1
        out = [Fraction(0)] * n
        carry = cs[n]
        for i in range(n - 1, -1, -1):
            out[i] = carry
            carry = cs[i] + root * carry
        if carry != 0:
            raise ValueError("divide_linear: not a root of the polynomial")
        return Poly(out)

    def taylor_at(self, p: Fraction, order: int) -> list[Fraction]:
        """Coefficients of (z - p)^0 .. (z - p)^order in the expansion at p."""
        return list(self.shift(p).coeffs[: order + 1]) + [Fraction(0)] * max(
            0, order + 1 - len(self.coeffs)
        )

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"


ONE_POLY = Poly([1])


@dataclass(frozen=True)
class FactoredRatFun:
    """numer(z) / prod_r (z - r)^m, reduced (no denominator root of numer)."""

    numer: Poly
    denom: tuple[tuple[Fraction, int], ...]  # sorted ((root, multiplicity), ...)

    @staticmethod
    def make(numer: Poly, denom: dict[Fraction, int]) -> "FactoredRatFun":
        dd = {Fraction(r): m for r, m in denom.items() if m}
        if any(m < 0 for m in dd.values()):
            raise ValueError("denominator multiplicities must be positive")
        # Reduce: cancel denominator roots that are numerator roots.
        if not numer.is_zero():
            for r in list(dd):
                while dd.get(r, 0) and numer(r) == 0:
                    numer = numer.divide_linear(r)
                    dd[r] -= 1
                if not dd.get(r, 1):
                    del dd[r]
        else:
            dd = {}
        return FactoredRatFun(numer, tuple(sorted(dd.items())))

    @staticmethod
    def from_poly(p: Poly) -> "FactoredRatFun":
        return FactoredRatFun(p, ())

    @staticmethod
    def from_roots(numer_roots, denom_roots) -> "FactoredRatFun":
        num = ONE_POLY
        for r in numer_roots:
            num = num * Poly.linear(r)
        den: dict[Fraction, int] = {}
        for r in denom_roots:
            r = Fraction(r)
            den[r] = den.get(r, 0) + 1
        return FactoredRatFun.make(num, den)

    @property
    def denom_dict(self) -> dict[Fraction, int]:
        return dict(self.denom)

    def denom_poly(self) -> Poly:
        p = ONE_POLY
        for r, m in self.denom:
            for _ in range(m):
                p = p * Poly.linear(r)
        return p

    def poles(self) -> list[Fraction]:
        return [r for r, _ in self.denom]

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def __call__(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        den = Fraction(1)
        for r, m in self.denom:
            if x == r:
                raise PoleEvaluationError(f"evaluation at pole z = {x}")
            den *= (x - r) ** m
        return self.numer(x) / den

    def __mul__(self, other: "FactoredRatFun | Fraction | int") -> "FactoredRatFun":
        if isinstance(other, (int, Fraction)):
            return FactoredRatFun(self.numer * other, self.denom) if other else FactoredRatFun.make(Poly([]), {})
        den = self.denom_dict
        for r, m in other.denom:
            den[r] = den.get(r, 0) + m
        return FactoredRatFun.make(self.numer * other.numer, den)

    __rmul__ = __mul__

    def __neg__(self) -> "FactoredRatFun":
        return FactoredRatFun(-self.numer, self.denom)

    def __add__(self, other: "FactoredRatFun") -> "FactoredRatFun":
        den = self.denom_dict
        for r, m in other.denom:
            den[r] = max(den.get(r, 0), m)
        a = self.numer
        for r, m in den.items():
            need = m - self.denom_dict.get(r, 0)
            for _ in range(need):
                a = a * Poly.linear(r)
        b = other.numer
        od = other.denom_dict
        for r, m in den.items():
            need = m - od.get(r, 0)
            for _ in range(need):
                b = b * Poly.linear(r)
        return FactoredRatFun.make(a + b, den)

    def __sub__(self, other: "FactoredRatFun") -> "FactoredRatFun":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredRatFun):
            return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self) -> int:
        return hash((self.numer, self.denom))

    def shift(self, a: Fraction) -> "FactoredRatFun":
        """Return R(z + a); denominator roots translate by -a."""
        a = Fraction(a)
        return FactoredRatFun(
            self.numer.shift(a), tuple(sorted((r - a, m) for r, m in self.denom))
        )

    def series_at_infinity(self, K: int) -> list[Fraction]:
        """Laurent coefficients at infinity.

        Returns ``[a_0, ..., a_K]`` where ``R(z) = sum_j a_j z^(g - j)`` with
        ``g = deg(numer) - deg(denom)``.
        """
        if K < 0:
            raise ValueError("K must be >= 0")
        if self.numer.is_zero():
            return [Fraction(0)] * (K + 1)
        num = list(reversed(self.numer.coeffs)) + [Fraction(0)] * (K + 1)
        den = list(reversed(self.denom_poly().coeffs)) + [Fraction(0)] * (K + 1)
        out: list[Fraction] = []
        for j in range(K + 1):
            acc = num[j]
            for t in range(j):
                acc -= out[t] * den[j - t]
            out.append(acc / den[0])
        return out

    def residue_at(self, p: Fraction) -> Fraction:
        """Coefficient of (z - p)^(-1) in the Laurent expansion at p.

        Works for poles of any order via exact Taylor expansion of the
        numerator and of the co-factor denominator around p; returns 0 when
        p is not a pole (the reduced form guarantees the order is genuine).
        """
        p = Fraction(p)
        dd = self.denom_dict
        m = dd.get(p, 0)
        if m == 0:
            return Fraction(0)
        order = m - 1
        num_taylor = self.numer.taylor_at(p, order)
        # Taylor series of prod_{r != p} (z - r)^(-mr) around p.
        cof = [Fraction(1)] + [Fraction(0)] * order
        for r, mr in self.denom:
            if r == p:
                continue
            base = p - r  # nonzero
            # (z - r)^(-mr) = (base + (z-p))^(-mr)
            fac = [
                Fraction(comb(mr + t - 1, t) * (-1) ** t, 1) / base ** (mr + t)
                for t in range(order + 1)
            ]
            cof = _convolve(cof, fac, order)
        full = _convolve(num_taylor, cof, order)
        return full[order]

    def sum_of_residues(self) -> Fraction:
        return sum((self.residue_at(r) for r, _ in self.denom), Fraction(0))

    def render(self, var: str = "z") -> str:
        num = _render_poly(self.numer, var)
        if not self.denom:
            return num
        parts = []
        for r, m in self.denom:
            base = f"({var}-{r})" if r >= 0 else f"({var}+{-r})"
            parts.append(base if m == 1 else f"{base}^{m}")
        return f"({num}) / ({''.join(parts)})"


def _convolve(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def _render_poly(p: Poly, var: str) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
