"""Sums of products of affine factors, closed under residue extraction.

A term is ``coef * prod_k F_k^(e_k)`` where each factor ``F_k`` is either
``z_i - c`` or ``z_i - z_j - c`` with rational ``c`` and integer exponent
``e_k`` (possibly negative).  This class carries the multivariate integrands
of the nested contour integrals: it is closed under substituting a rational
for a variable, under differentiation in one variable, and hence under
taking residues at poles located at rational constants.

Residues are computed per term (residue extraction is linear); within one
term, factors at the same pole location share a dict key, so the pole order
is always the net exponent.  Poles whose location still involves another,
not-yet-integrated variable may only be excluded -- including one would
leave the class -- and asking for one raises :class:`AffinePoleError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

# Factor keys:  ("c", i, c)        for  z_i - c
#               ("d", i, j, c)     for  z_i - z_j - c   (normalized: i < j)
FactorKey = tuple


class AffinePoleError(ValueError):
    """A requested pole cannot be handled inside the affine class."""


class PoleHit(ZeroDivisionError):
    """A sample point landed on a pole; callers resample."""


def diff_factor(i: int, j: int, c) -> tuple[FactorKey, int]:
    """Normalized key and sign for the factor z_i - z_j - c."""
    c = Fraction(c)
    if i == j:
        raise ValueError("diff factor needs distinct variables")
    if i < j:
        return ("d", i, j, c), 1
    return ("d", j, i, -c), -1


def const_factor(i: int, c) -> FactorKey:
    return ("c", i, Fraction(c))


@dataclass
class Term:
    coef: Fraction
    factors: dict[FactorKey, int]

    def mul_factor(self, key: FactorKey, exp: int, sign: int = 1) -> "Term":
        factors = dict(self.factors)
        e = factors.get(key, 0) + exp
        if e:
            factors[key] = e
        else:
            factors.pop(key, None)
        coef = self.coef * (sign ** (exp % 2) if sign < 0 else 1)
        return Term(coef, factors)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for k in self.factors:
            if k[0] == "c":
                out.add(k[1])
            else:
                out.add(k[1])
                out.add(k[2])
        return out


TermSum = list  # list of Term


def term_product(coef: Fraction, factors: list[tuple[int, int | None, Fraction, int]]) -> Term:
    """Build a term from (i, j, c, exp) tuples; j=None means z_i - c."""
    t = Term(Fraction(coef), {})
    for i, j, c, e in factors:
        if j is None:
            t = t.mul_factor(const_factor(i, c), e)
        else:
            key, sign = diff_factor(i, j, c)
            t = t.mul_factor(key, e, sign)
    return t


def _factor_value(key: FactorKey, values: dict[int, Fraction]) -> Fraction:
    if key[0] == "c":
        return values[key[1]] - key[2]
    return values[key[1]] - values[key[2]] - key[3]


def evaluate(terms: TermSum, values: dict[int, Fraction]) -> Fraction:
    total = Fraction(0)
    for t in terms:
        acc = t.coef
        for key, e in t.factors.items():
            v = _factor_value(key, values)
            if not v and e < 0:
                raise PoleHit(f"sample hit pole of {key}")
            acc *= v**e
        total += acc
    return total


def substitute(term: Term, v: int, value: Fraction) -> Term | None:
    """Set z_v = value; returns None when the term vanishes."""
    coef = term.coef
    factors: dict[FactorKey, int] = {}
    for key, e in term.factors.items():
        if key[0] == "c" and key[1] == v:
            base = value - key[2]
            if not base:
                if e < 0:
                    raise AffinePoleError("substitution at a pole")
                return None
            coef *= base**e
        elif key[0] == "d" and v in (key[1], key[2]):
            i, j, c = key[1], key[2], key[3]
            if v == i:
                # (value - z_j - c) = -(z_j - (value - c))
                nk = const_factor(j, value - c)
                coef *= (-1) ** (e % 2)
            else:
                # (z_i - value - c) = z_i - (value + c)
                nk = const_factor(i, value + c)
            ne = factors.get(nk, 0) + e
            if ne:
                factors[nk] = ne
            else:
                factors.pop(nk, None)
        else:
            factors[key] = factors.get(key, 0) + e
    return Term(coef, factors)


def derivative(term: Term, v: int) -> TermSum:
    """d/dz_v of the term, by the product rule (each affine factor has slope +-1)."""
    out: TermSum = []
    for key, e in term.factors.items():
        if key[0] == "c":
            slope = 1 if key[1] == v else 0
        else:
            slope = 1 if key[1] == v else (-1 if key[2] == v else 0)
        if not slope or not e:
            continue
        factors = dict(term.factors)
        if e == 1:
            del factors[key]
        else:
            factors[key] = e - 1
        out.append(Term(term.coef * e * slope, factors))
    return out


def _pole_locations(term: Term, v: int) -> list[tuple[FactorKey, int, object]]:
    """Factors of the term with a pole in z_v: (key, order, location).

    location is ('const', c) or ('var', j, c) meaning z_v = z_j + c.
    """
    out = []
    for key, e in term.factors.items():
        if e >= 0:
            continue
        if key[0] == "c" and key[1] == v:
            out.append((key, -e, ("const", key[2])))
        elif key[0] == "d":
            if key[1] == v:
                out.append((key, -e, ("var", key[2], key[3])))
            elif key[2] == v:
                out.append((key, -e, ("var", key[1], -key[3])))
    return out


def include_constants(location) -> bool:
    """The radial-contour rule: constant locations in, variable-dependent out."""
    return location[0] == "const"


def residue_in(terms: TermSum, v: int, include=include_constants) -> TermSum:
    """Sum of residues of the term sum in z_v over all included poles.

    The result no longer mentions z_v.  Higher-order poles at constant
    locations are handled by differentiation inside the class.
    """
    out: TermSum = []
    for term in terms:
        for key, order, location in _pole_locations(term, v):
            if not include(location):
                continue
            if location[0] != "const":
                raise AffinePoleError(
                    f"pole of z_{v} at variable-dependent location {location}"
                )
            p = location[1]
            rest = Term(term.coef, {k: e for k, e in term.factors.items() if k != key})
            if order == 1:
                sub = substitute(rest, v, p)
                if sub is not None:
                    out.append(sub)
            else:
                layer: TermSum = [rest]
                for _ in range(order - 1):
                    nxt: TermSum = []
                    for t in layer:
                        nxt.extend(derivative(t, v))
                    layer = nxt
                scale = Fraction(1, factorial(order - 1))
                for t in layer:
                    sub = substitute(t, v, p)
                    if sub is not None:
                        out.append(Term(sub.coef * scale, sub.factors))
    return out


def constant_value(terms: TermSum) -> Fraction:
    """Total of a term sum that mentions no variables."""
    total = Fraction(0)
    for t in terms:
        if t.factors:
            raise ValueError(f"term still mentions variables: {t.factors}")
        total += t.coef
    return total
