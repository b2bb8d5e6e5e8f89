"""The Plancherel harmonic function and its transition/cotransition measures.

``f_pl(lam) = dim(lam) / |lam|!`` is harmonic on the Young graph:
``f(mu) = sum_{mu -> lam} f(lam)``.  The transition measure ``p_up`` and the
cotransition measure ``p_down`` are computed from the profile of the diagram
(products of content differences); the dim-ratio forms appear in the tests
as independent oracles only.  The Cauchy transform ``G`` and its reciprocal
``H`` are the rational functions with zeros at removable and poles at
addable contents (and vice versa); their expansions at infinity generate
moments and Boolean cumulants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable

from .ratfun import FactoredRatFun
from .young import Diagram, box_content, dim, down_covers, profile, up_covers, weight


@dataclass(frozen=True)
class HarmonicFunction:
    """A positive rational-valued harmonic function on the Young graph."""

    name: str
    value: Callable[[Diagram], Fraction]

    def __call__(self, lam: Diagram) -> Fraction:
        return self.value(lam)


@cache
def f_pl(lam: Diagram) -> Fraction:
    """dim(lam) / |lam|!, the harmonic function of the Plancherel family."""
    return Fraction(dim(lam), factorial(weight(lam)))


PLANCHEREL = HarmonicFunction("plancherel", f_pl)


def p_up(lam: Diagram, mu: Diagram) -> Fraction:
    """Transition probability from lam to a cover mu."""
    x = box_content(mu, lam)
    xs, ys = profile(lam)
    num = Fraction(1)
    for y in ys:
        num *= x - y
    den = Fraction(1)
    for x2 in xs:
        if x2 != x:
            den *= x - x2
    if x not in xs:
        raise ValueError(f"{mu} is not an upward cover of {lam}")
    return num / den


def p_down(lam: Diagram, mu: Diagram) -> Fraction:
    """Cotransition probability from lam to a diagram mu it covers."""
    y = box_content(lam, mu)
    xs, ys = profile(lam)
    if y not in ys:
        raise ValueError(f"{lam} does not cover {mu}")
    num = Fraction(1)
    for x in xs:
        num *= y - x
    den = Fraction(1)
    for y2 in ys:
        if y2 != y:
            den *= y - y2
    return -num / den / weight(lam)


def cauchy_g(lam: Diagram) -> FactoredRatFun:
    """G(z) = prod(z - y_i) / prod(z - x_i), the Cauchy transform."""
    xs, ys = profile(lam)
    return FactoredRatFun.from_roots(ys, xs)


def inv_h(lam: Diagram) -> FactoredRatFun:
    """H(z) = 1/G(z) = prod(z - x_i) / prod(z - y_i)."""
    xs, ys = profile(lam)
    return FactoredRatFun.from_roots(xs, ys)


def moment(lam: Diagram, n: int) -> Fraction:
    """n-th moment of the transition measure, read off the expansion of G."""
    if n < 1:
        raise ValueError("moment index must be >= 1")
    return cauchy_g(lam).series_at_infinity(n)[n]


def boolean_cumulant(lam: Diagram, n: int) -> Fraction:
    """n-th Boolean cumulant, read off the expansion of H."""
    if n < 1:
        raise ValueError("cumulant index must be >= 1")
    return -inv_h(lam).series_at_infinity(n)[n]


def moment_by_measure(lam: Diagram, n: int) -> Fraction:
    """Oracle: sum of c(mu/lam)^n over the transition measure."""
    return sum(
        (Fraction(c) ** n * p_up(lam, mu) for mu, c in up_covers(lam)), Fraction(0)
    )


def boolean_cumulant_by_measure(lam: Diagram, n: int) -> Fraction:
    """Oracle: |lam| * sum of c(lam/mu)^(n-2) over the cotransition measure."""
    if n < 2:
        raise ValueError("measure form defined for n >= 2")
    return weight(lam) * sum(
        (Fraction(c) ** (n - 2) * p_down(lam, mu) for mu, c in down_covers(lam)),
        Fraction(0),
    )
