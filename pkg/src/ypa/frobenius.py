"""Single-cycle characters by exact contour integration, two contour schemes.

Everything here integrates the same multivariate function

    F(z_1..z_n) = prod 1/(z_i - z_(i+1))
                  * prod_(i<j) (z_i-z_j)^2 / ((z_i-z_j-1)(z_i-z_j+1))
                  * prod H(z_i)

by summing exact residues; there is no numeric quadrature anywhere.  The
satellite scheme integrates variable by variable along small contours around
z +- k and z +- 1 and collapses to the univariate Frobenius integrand
H(z) H(z-1) ... H(z-k+1); the radial scheme nests the contours by radius so
that, at each step, poles at already-known rational locations are enclosed
and poles at locations still involving an outer variable are not.  Both
reproduce the normalized character on one-cycle partitions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cache

from . import affine
from .affine import PoleHit, Term, const_factor, diff_factor
from .plancherel import inv_h
from .ratfun import FactoredRatFun, PoleEvaluationError
from .young import Diagram, profile


def h_shifted(lam: Diagram, a: int | Fraction) -> FactoredRatFun:
    """H(z + a)."""
    return inv_h(lam).shift(Fraction(a))


def h_product(lam: Diagram, shifts) -> FactoredRatFun:
    """prod_s H(z + s)."""
    out = None
    for s in shifts:
        h = h_shifted(lam, s)
        out = h if out is None else out * h
    return out if out is not None else FactoredRatFun.from_roots([], [])


def frobenius_sigma(lam: Diagram, k: int) -> Fraction:
    """Sigma_(k)(lam) = -(1/k) * contour integral of H(z) H(z-1) .. H(z-k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    prod = h_product(lam, [-j for j in range(k)])
    return -prod.sum_of_residues() / k


# -- satellite scheme -----------------------------------------------------------

def satellite_final_form(lam: Diagram, n: int) -> FactoredRatFun:
    """The fully collapsed integrand: (prod H(z+j) + prod H(z-j)) / 2."""
    plus = h_product(lam, range(n))
    minus = h_product(lam, [-j for j in range(n)])
    return (plus + minus) * Fraction(1, 2)


def satellite_I(lam: Diagram, n: int) -> Fraction:
    """The satellite integral; satisfies Sigma_(n) = -satellite_I / n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return satellite_final_form(lam, n).sum_of_residues()


def satellite_level_form(
    lam: Diagram, n: int, k: int, tail: tuple[Fraction, ...]
) -> FactoredRatFun:
    """The closed form of the k-th partial satellite integral.

    Univariate in the next variable to integrate; ``tail`` holds rational
    values for the n - k - 1 remaining outer variables (the first entry is
    the one whose contour comes next).  Valid for 0 <= k <= n - 2.
    """
    if not 0 <= k <= n - 2:
        raise ValueError("level k must satisfy 0 <= k <= n-2")
    if len(tail) != n - k - 1:
        raise ValueError(f"need {n - k - 1} outer values, got {len(tail)}")
    w = tail[0]
    half = Fraction(1, 2)
    total = None
    for sgn in (1, -1):
        t = h_product(lam, [sgn * j for j in range(k + 1)])
        t = t * FactoredRatFun.from_roots([], [w])
        for zj in tail:
            t = t * FactoredRatFun.from_roots(
                [zj, zj - sgn * k], [zj + sgn, zj - sgn * (k + 1)]
            )
        total = t if total is None else total + t
    # Trailing factor F^(n-k-1) over the outer variables, a constant here.
    return total * (half * f_eval(lam, n - k - 1, tail))


def satellite_step_check(
    lam: Diagram, n: int, k: int, samples
) -> bool:
    """Check one induction step of the satellite recursion at rational samples.

    Integrating the level-k closed form in its first variable along the
    contour around w +- 1 and w +- (k+1) (all other poles excluded) must
    reproduce the level-(k+1) closed form.
    """
    if not 0 <= k <= n - 2:
        raise ValueError("step k must satisfy 0 <= k <= n-2")
    for tail in samples:
        tail = tuple(Fraction(z) for z in tail)
        if len(tail) != n - k - 1:
            raise ValueError(f"sample needs {n - k - 1} values")
        w = tail[0]
        form = satellite_level_form(lam, n, k, tail)
        lhs = sum(
            (form.residue_at(p) for p in {w + 1, w - 1, w + k + 1, w - k - 1}),
            Fraction(0),
        )
        if k + 1 <= n - 2:
            rhs = satellite_level_form(lam, n, k + 1, tail[1:])(w)
        else:
            rhs = satellite_final_form(lam, n)(w)
        if lhs != rhs:
            return False
    return True


# -- the multivariate integrand and the radial scheme ---------------------------

@cache
def f_term(lam: Diagram, n: int) -> Term:
    """F as a single product of affine factors in variables 1..n."""
    xs, ys = profile(lam)
    t = Term(Fraction(1), {})
    for i in range(1, n):
        key, sign = diff_factor(i, i + 1, 0)
        t = t.mul_factor(key, -1, sign)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            key, sign = diff_factor(i, j, 0)
            t = t.mul_factor(key, 2, sign)
            key, sign = diff_factor(i, j, 1)
            t = t.mul_factor(key, -1, sign)
            key, sign = diff_factor(i, j, -1)
            t = t.mul_factor(key, -1, sign)
    for i in range(1, n + 1):
        for x in xs:
            t = t.mul_factor(const_factor(i, x), 1)
        for y in ys:
            t = t.mul_factor(const_factor(i, y), -1)
    return t


def f_eval(lam: Diagram, n: int, points) -> Fraction:
    """Evaluate F at rational points; raises PoleHit on a pole."""
    points = [Fraction(p) for p in points]
    if len(points) != n:
        raise ValueError(f"need {n} points")
    values = {i + 1: p for i, p in enumerate(points)}
    return affine.evaluate([f_term(lam, n)], values)


def radial_I(lam: Diagram, n: int, sigma: tuple[int, ...] | None = None) -> Fraction:
    """The radial integral I^(n)[sigma]; sigma lists the nesting order.

    Variable z_sigma(1) runs along the innermost contour (enclosing all
    poles of H), each later one at larger radius.  At every step, residues
    are taken at all poles with constant rational locations; poles at
    locations involving a not-yet-integrated variable lie outside by the
    radius ordering.  sigma = id is supported for n <= 5, general sigma for
    n <= 3 (larger cases may hit variable-located higher-order poles).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if sigma is None:
        sigma = tuple(range(1, n + 1))
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"sigma must permute 1..{n}")
    is_id = sigma == tuple(range(1, n + 1))
    if (is_id and n > 5) or (not is_id and n > 3):
        raise ValueError("radial integrals supported for sigma=id up to n=5, else n<=3")
    terms = [f_term(lam, n)]
    for v in sigma:
        terms = affine.residue_in(terms, v, affine.include_constants)
    return affine.constant_value(terms)


# -- sampling and the cyclic/inversion lemmas ------------------------------------

_SAMPLE_DENOMS = (7, 11, 13, 17, 19, 23, 29)


def sample_points(lam: Diagram, n: int, rng: random.Random) -> tuple[Fraction, ...]:
    """n random rationals with |z| > max content + 2n, never on a pole.

    Coordinate i gets denominator p_i from a list of distinct primes, so
    every coordinate is a non-integer (missing the poles of the shifted H
    factors) and every pairwise difference is a non-integer (missing the
    z_i - z_j = 0, +-1, +-k poles).
    """
    if n > len(_SAMPLE_DENOMS):
        raise ValueError("too many variables for the sampling scheme")
    xs, ys = profile(lam)
    bound = max([abs(c) for c in xs + ys] + [1]) + 2 * n + 1
    out: list[Fraction] = []
    for i in range(n):
        p = _SAMPLE_DENOMS[i]
        num = rng.randint(bound * p, 4 * bound * p)
        if num % p == 0:
            num += 1
        out.append(Fraction(num, p) * rng.choice((1, -1)))
    return tuple(out)


def lemma_checks(
    lam: Diagram, n: int, sample_count: int = 20, seed: int = 0
) -> dict[str, bool]:
    """Exact checks of the cyclic-sum and inversion laws (and the n=3
    contour identities) at random rational sample points."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = random.Random(seed)
    results: dict[str, bool] = {}
    cyclic_ok = True
    inversion_ok = True
    done = 0
    while done < sample_count:
        pts = sample_points(lam, n, rng)
        try:
            total = Fraction(0)
            for p in range(n):
                rotated = pts[p:] + pts[:p]
                total += f_eval(lam, n, rotated)
            if total:
                cyclic_ok = False
            base = f_eval(lam, n, pts)
            rev = f_eval(lam, n, tuple(reversed(pts)))
            if rev != (-1) ** (n - 1) * base:
                inversion_ok = False
        except (PoleHit, PoleEvaluationError, ZeroDivisionError):
            continue
        done += 1
    results["cyclic_sum"] = cyclic_ok
    results["inversion"] = inversion_ok
    if n == 2:
        i2 = satellite_I(lam, 2)
        r_id = radial_I(lam, 2, (1, 2))
        r_sw = radial_I(lam, 2, (2, 1))
        results["contour_change_n2"] = (r_sw - r_id == i2) and (r_sw == -r_id)
    if n == 3:
        r_213 = radial_I(lam, 3, (2, 1, 3))
        r_231 = radial_I(lam, 3, (2, 3, 1))
        results["exchange_lemma_n3"] = r_213 == r_231
        results["contour_change_n3"] = satellite_I(lam, 3) == 3 * radial_I(lam, 3)
    return results
