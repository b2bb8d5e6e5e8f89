"""Crossing element, local relations, and diagram realizations of characters.

The crossing ``t = t_id + t_ex`` is a function of loops of signature
``(-,-,+,+)``: on a loop ``l0 > l1 > l2 < l3 < l0`` (two boxes removed, two
added back), with ``r = c(l0/l1) - c(l1/l2)``,

    t_id = delta(l1, l3) / r * sqrt(f(l2)/f(l0))
    t_ex = (1 - delta(l1, l3)) * sqrt(1 - 1/r^2) * sqrt(f(l2)/f(l0))

Stripped of the sqrt(f/f) part these are exactly the Gelfand-Tsetlin matrix
entries of an adjacent transposition, which is why chaining crossing boxes
lifts permutations.  The five local relations are verified by evaluating
both sides as layered tangle programs over every loop up to a weight bound;
the layered presentations below were derived from the state-sum shape of
each side and re-derivable by scripts/derive_relation_programs.py.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .plancherel import PLANCHEREL, f_pl
from .surd import ONE, Surd, sqrt_fraction
from .tangle import Element, TangleProgram, as_element, evaluate, parse
from .young import (
    Diagram,
    LoopPath,
    Signature,
    box_content,
    diagrams_up_to,
    down_covers,
    enumerate_loops,
    format_loop,
    weight,
)

CROSS_SIGNATURE: Signature = (-1, -1, 1, 1)


def _check_cross_loop(loop: LoopPath):
    if loop.signature != CROSS_SIGNATURE:
        raise ValueError(f"crossing needs signature (-,-,+,+), got {loop.signature}")


def cross_id(loop: LoopPath) -> Surd:
    """t_id: nonzero only when the two reading paths are identical."""
    _check_cross_loop(loop)
    l0, l1, l2, l3, _ = loop.diagrams
    if l1 != l3:
        return Surd()
    r = box_content(l0, l1) - box_content(l1, l2)
    return sqrt_fraction(f_pl(l2) / f_pl(l0)) * Fraction(1, r)


def cross_ex(loop: LoopPath) -> Surd:
    """t_ex: nonzero only when the two added boxes are exchanged."""
    _check_cross_loop(loop)
    l0, l1, l2, l3, _ = loop.diagrams
    if l1 == l3:
        return Surd()
    r = box_content(l0, l1) - box_content(l1, l2)
    return sqrt_fraction(f_pl(l2) / f_pl(l0)) * sqrt_fraction(
        Fraction(r * r - 1, r * r)
    )


def cross(loop: LoopPath) -> Surd:
    _check_cross_loop(loop)
    l0, l1, l2, l3, _ = loop.diagrams
    if l1 == l3:
        return cross_id(loop)
    return cross_ex(loop)


def cross_value(loop: LoopPath, which: str = "t") -> Surd:
    """Dispatch over the crossing family: which in {'t', 't_id', 't_ex'}."""
    if which == "t":
        return cross(loop)
    if which == "t_id":
        return cross_id(loop)
    if which == "t_ex":
        return cross_ex(loop)
    raise ValueError(f"unknown crossing family member {which!r}")


CROSS = Element("cross", CROSS_SIGNATURE, cross)
CROSS_ID = Element("cross_id", CROSS_SIGNATURE, cross_id)
CROSS_EX = Element("cross_ex", CROSS_SIGNATURE, cross_ex)


def dot_value(loop: LoopPath) -> Surd:
    """Right-turn element on a loop (lam > mu < lam): c(lam/mu) sqrt(f(mu)/f(lam))."""
    if loop.signature != (-1, 1):
        raise ValueError(f"dot needs signature (-,+), got {loop.signature}")
    lam, mu, _ = loop.diagrams
    c = box_content(lam, mu)
    if not c:
        return Surd()
    return sqrt_fraction(f_pl(mu) / f_pl(lam)) * Fraction(c)


DOT = Element("dot", (-1, 1), dot_value)

BUILTIN_ELEMENTS = {
    "cross": CROSS,
    "cross_id": CROSS_ID,
    "cross_ex": CROSS_EX,
    "dot": DOT,
}


def _prog(text: str) -> TangleProgram:
    return parse(text, BUILTIN_ELEMENTS)


# Right turn as a composed tangle: the crossing closed by a turn-back.
RIGHT_TURN = _prog(
    """
    tangle right_turn : (-,+) {
      row cup_ud@1;
      row box cross;
    }
    """
)

LEFT_CIRCLE = _prog("tangle left_circle : () { row cup_du; row cap; }")
CW_CIRCLE = _prog("tangle cw_circle : () { row cup_ud; row cap; }")


def _x_gadget(p: int, n: int) -> str:
    """Rows crossing the up-up strand pair (p, p+1) of an n-strand slice."""
    passes_before = "| " * (p - 1)
    passes_after = "| " * (n + 1 - p)
    return (
        f"row cup_du@{p + 1};\n"
        f"row cup_du@{p + 2};\n"
        f"row {passes_before}box cross {passes_after};\n"
    )


def _nested_caps(n_pairs: int) -> str:
    rows = []
    for t in range(n_pairs, 0, -1):
        rows.append("row " + "| " * (t - 1) + "cap " + "| " * (t - 1) + ";")
    return "\n".join(rows)


LEFT_TURN_LHS = _prog(
    """
    tangle left_turn_lhs : (-,+) {
      row cup_du@0;
      row cup_du@4;
      row | box cross |;
      row cap;
    }
    """
)

IND_IND_LHS = _prog(
    """
    tangle ind_ind_lhs : (-,-,+,+) {
      row cup_du@2;
      row cup_du@3;
      row box cross | | | |;
      row box cross;
    }
    """
)

IND_IND_RHS = _prog(
    "tangle ind_ind_rhs : (-,-,+,+) { row | cap |; row cap; }"
)

IND_RES_LHS = _prog(
    """
    tangle ind_res_lhs : (-,+,-,+) {
      row cup_du@2;
      row cup_du@6;
      row | | | box cross |;
      row cup_du@0;
      row | box cross |;
      row cap;
    }
    """
)

IND_RES_RHS = _prog(
    "tangle ind_res_rhs : (-,+,-,+) { row | cap |; row cap; }"
)

# The res-ind double crossing; presentation found by the program search in
# scripts/derive_relation_programs.py and pinned by the weight-6 sweep.
RES_IND_LHS = _prog(
    """
    tangle res_ind_lhs : (+,-,+,-) {
      row cup_du@0;
      row cup_ud@4;
      row cup_du@5;
      row cup_du@6;
      row | | | box cross | | | | |;
      row | | cap | | | |;
      row | box cross |;
      row cap;
    }
    """
)

RES_IND_STRAIGHT = _prog(
    "tangle res_ind_straight : (+,-,+,-) { row | cap |; row cap; }"
)

RES_IND_CUPS = _prog(
    "tangle res_ind_cups : (+,-,+,-) { row cap cap; }"
)

YBE_LHS = _prog(
    "tangle ybe_lhs : (-,-,-,+,+,+) {\n"
    + _x_gadget(2, 6)
    + _x_gadget(1, 6)
    + _x_gadget(2, 6)
    + _nested_caps(3)
    + "\n}"
)

YBE_RHS = _prog(
    "tangle ybe_rhs : (-,-,-,+,+,+) {\n"
    + _x_gadget(1, 6)
    + _x_gadget(2, 6)
    + _x_gadget(1, 6)
    + _nested_caps(3)
    + "\n}"
)


@dataclass(frozen=True)
class RelationSides:
    """lhs and rhs of a relation as signed combinations of programs."""

    name: str
    signature: Signature
    lhs: tuple[tuple[int, TangleProgram], ...]
    rhs: tuple[tuple[int, TangleProgram], ...]
    rhs_constant: Fraction | None = None  # rhs is this constant function

    def lhs_value(self, loop: LoopPath) -> Surd:
        total = Surd()
        for coef, prog in self.lhs:
            total = total + evaluate(prog, loop, PLANCHEREL) * Fraction(coef)
        return total

    def rhs_value(self, loop: LoopPath) -> Surd:
        if self.rhs_constant is not None:
            return Surd.from_rational(self.rhs_constant)
        total = Surd()
        for coef, prog in self.rhs:
            total = total + evaluate(prog, loop, PLANCHEREL) * Fraction(coef)
        return total


RELATIONS: dict[str, RelationSides] = {
    "left_turn": RelationSides(
        "left_turn", (-1, 1), ((1, LEFT_TURN_LHS),), (), Fraction(0)
    ),
    "ind_ind": RelationSides(
        "ind_ind", (-1, -1, 1, 1), ((1, IND_IND_LHS),), ((1, IND_IND_RHS),)
    ),
    "ind_res": RelationSides(
        "ind_res", (-1, 1, -1, 1), ((1, IND_RES_LHS),), ((1, IND_RES_RHS),)
    ),
    "res_ind": RelationSides(
        "res_ind",
        (1, -1, 1, -1),
        ((1, RES_IND_LHS),),
        ((1, RES_IND_STRAIGHT), (-1, RES_IND_CUPS)),
    ),
    "ybe": RelationSides(
        "ybe", (-1, -1, -1, 1, 1, 1), ((1, YBE_LHS),), ((1, YBE_RHS),)
    ),
    "left_circle": RelationSides(
        "left_circle", (), ((1, LEFT_CIRCLE),), (), Fraction(1)
    ),
}

RELATION_IDS = tuple(RELATIONS)


def relation_sides(name: str) -> RelationSides:
    if name not in RELATIONS:
        raise ValueError(f"unknown relation {name!r}; known: {RELATION_IDS}")
    return RELATIONS[name]


@dataclass
class RelationReport:
    relation: str
    max_weight: int
    loops_checked: int
    failures: list[tuple[str, str, str]]
    elapsed_ms: int

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "relation": self.relation,
            "max_weight": self.max_weight,
            "loops_checked": self.loops_checked,
            "failures": [list(f) for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _verify_base(args: tuple[str, Diagram]) -> tuple[int, list[tuple[str, str, str]]]:
    name, base = args
    sides = RELATIONS[name]
    checked = 0
    failures: list[tuple[str, str, str]] = []
    for loop in enumerate_loops(base, sides.signature):
        checked += 1
        lhs = sides.lhs_value(loop)
        rhs = sides.rhs_value(loop)
        if lhs != rhs:
            failures.append((format_loop(loop), lhs.render(), rhs.render()))
    return checked, failures


def verify_relation(name: str, max_weight: int, jobs: int = 1) -> RelationReport:
    """Check one relation over every loop of base weight <= max_weight.

    Deterministic regardless of jobs: bases are processed in a fixed order
    and their per-base results merged in that order.
    """
    sides = relation_sides(name)
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    t0 = time.monotonic()
    bases = diagrams_up_to(max_weight)
    tasks = [(name, base) for base in bases]
    results = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_base, tasks, chunksize=4))
    else:
        results = [_verify_base(t) for t in tasks]
    checked = sum(c for c, _ in results)
    failures = [f for _, fs in results for f in fs]
    elapsed = int((time.monotonic() - t0) * 1000)
    return RelationReport(name, max_weight, checked, failures, elapsed)


# -- cycle elements and diagram formulas ---------------------------------------

def cycle_element(k: int) -> Element:
    """The chained-crossing lift of the k-cycle, in P((-^k, +^k)).

    k = 1 is the identity (delta) element: value 1 on every valid loop.
    """
    if k < 1:
        raise ValueError("cycle length must be >= 1")
    if k == 1:
        return Element("cycle_1", (-1, 1), lambda loop: ONE)
    return as_element(cycle_program(k), PLANCHEREL)


def cycle_program(k: int) -> TangleProgram:
    """Layered program for the k-cycle element, k >= 2: k-1 crossing boxes."""
    if k < 2:
        raise ValueError("cycle_program needs k >= 2")
    n = 2 * k
    body = []
    for j in range(1, k - 1):
        body.append(_x_gadget(j, n))
    body.append(
        "row " + "| " * (k - 2) + "box cross " + "| " * (k - 2) + ";\n"
    )
    if k > 2:
        body.append(_nested_caps(k - 2))
    sig = "(" + ",".join(["-"] * k + ["+"] * k) + ")"
    text = f"tangle cycle_{k} : {sig} {{\n" + "\n".join(body) + "\n}"
    return _prog(text)


def character_diagram(lam: Diagram, pi: tuple[int, ...]) -> Fraction:
    """Normalized character via the evaluated cycle-diagram state sum.

    Sums over descending paths lam = d0 > d1 > ... > dk (k = |pi|) the
    product of 1/(content gap) over the non-final index of each cycle block,
    times f(dk)/f(lam); zero when |pi| > |lam|.
    """
    pi = tuple(pi)
    if any(p < 1 for p in pi) or any(
        pi[i] < pi[i + 1] for i in range(len(pi) - 1)
    ):
        raise ValueError(f"not a partition: {pi}")
    k = sum(pi)
    if k > weight(lam):
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    skip = set()
    acc = 0
    for part in pi:
        acc += part
        skip.add(acc)  # last index of each cycle block contributes no factor
    f_lam = f_pl(lam)
    total = Fraction(0)

    def descend(d: Diagram, j: int, contents: list[int], coeff: Fraction):
        nonlocal total
        if j == k:
            total += coeff * (f_pl(d) / f_lam)
            return
        for mu, c in down_covers(d):
            if j and (j not in skip):
                gap = contents[-1] - c
                descend(mu, j + 1, contents + [c], coeff / gap)
            else:
                descend(mu, j + 1, contents + [c], coeff)

    descend(lam, 0, [], Fraction(1))
    return total


def character_from_cycle_tangle(lam: Diagram, k: int) -> Surd:
    """Single-cycle character via cycle elements wrapped in nested cups.

    For k >= 2 the k-cycle box is fed by k nested cup_ud maxima; the k = 1
    picture is the plain clockwise circle (the identity strand needs no box).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return evaluate(CW_CIRCLE, LoopPath((lam,), ()), PLANCHEREL)
    rows = "\n".join(f"row cup_ud@{j};" for j in range(k))
    text = (
        f"tangle wrapped_cycle_{k} : () {{\n{rows}\nrow box cycle_{k};\n}}"
    )
    bindings = dict(BUILTIN_ELEMENTS)
    bindings[f"cycle_{k}"] = cycle_element(k)
    prog = parse(text, bindings)
    return evaluate(prog, LoopPath((lam,), ()), PLANCHEREL)


@lru_cache(maxsize=None)
def _circle_with_dots(kind: str, k: int) -> TangleProgram:
    rows = ["row cup_du;" if kind == "ccw" else "row cup_ud;"]
    rows += ["row * |;"] * k
    rows.append("row cap;")
    return _prog(f"tangle circle : () {{ {' '.join(rows)} }}")


def moment_diagram(lam: Diagram, k: int) -> Fraction:
    """k-th moment as the counterclockwise circle with k dots."""
    if k < 1:
        raise ValueError("k must be >= 1")
    v = evaluate(_circle_with_dots("ccw", k), LoopPath((lam,), ()), PLANCHEREL)
    return v.as_fraction()


def cumulant_diagram(lam: Diagram, k: int) -> Fraction:
    """Boolean cumulant B_(k+2) as the clockwise circle with k dots."""
    if k < 0:
        raise ValueError("k must be >= 0")
    v = evaluate(_circle_with_dots("cw", k), LoopPath((lam,), ()), PLANCHEREL)
    return v.as_fraction()


# -- Boolean-cumulant expansion of normalized characters ------------------------

class KerovUnderdeterminedError(ValueError):
    """Not enough sample diagrams to pin the expansion; raise sample_weight."""


class KerovInconsistentError(ValueError):
    """The sampled values admit no expansion (implementation bug)."""


Monomial = tuple[tuple[int, int], ...]  # ((k, exponent), ...) sorted by k


def _monomials(ks: list[int], max_weight: int, parity: int) -> list[Monomial]:
    out: list[Monomial] = []

    def build(idx: int, remaining: int, acc: list[tuple[int, int]]):
        if idx == len(ks):
            w = max_weight - remaining
            if w % 2 == parity:
                out.append(tuple(acc))
            return
        k = ks[idx]
        e = 0
        while e * k <= remaining:
            build(idx + 1, remaining - e * k, acc + ([(k, e)] if e else []))
            e += 1

    build(0, max_weight, [])
    out.sort()
    return out


def kerov_boolean_expansion(
    pi: tuple[int, ...], sample_weight: int
) -> dict[Monomial, Fraction]:
    """Exact expansion of Sigma_pi as a polynomial in B_2, B_3, ...

    Monomials range over B_k, 2 <= k <= |pi| - len(pi) + 2, of weighted
    degree sum(k * e_k) <= |pi| + len(pi), filtered by the transpose parity
    rule sum(k * e_k) == |pi| - len(pi) mod 2.  Solved exactly by sampling
    all diagrams of weight <= sample_weight.
    """
    from .plancherel import boolean_cumulant

    pi = tuple(pi)
    n, ell = sum(pi), len(pi)
    ks = list(range(2, n - ell + 3))
    mons = _monomials(ks, n + ell, (n - ell) % 2)
    samples = diagrams_up_to(sample_weight)
    rows = []
    for lam in samples:
        b = {k: boolean_cumulant(lam, k) for k in ks}
        row = [
            _eval_monomial(m, b) for m in mons
        ]
        rows.append((row, character_diagram(lam, pi)))
    solution = _solve_exact(rows, len(mons))
    return {m: c for m, c in zip(mons, solution) if c}


def _eval_monomial(m: Monomial, b: dict[int, Fraction]) -> Fraction:
    acc = Fraction(1)
    for k, e in m:
        acc *= b[k] ** e
    return acc


def _solve_exact(rows, m: int) -> list[Fraction]:
    mat = [list(r) + [v] for r, v in rows]
    pivots: list[int] = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(mat)):
        if mat[i][m]:
            raise KerovInconsistentError("no polynomial fits the sampled values")
    if len(pivots) < m:
        raise KerovUnderdeterminedError(
            f"rank {len(pivots)} < {m} monomials; increase sample_weight"
        )
    sol = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        sol[c] = mat[i][m]
    return sol


def kerov_p_polynomial(
    pi: tuple[int, ...], expansion: dict[Monomial, Fraction]
) -> dict[Monomial, Fraction]:
    """Coefficients of P_pi, where (-1)^len(pi) Sigma_pi = P_pi(-B_2, ...)."""
    ell = len(pi)
    out = {}
    for mon, coef in expansion.items():
        if not coef:
            continue
        deg = sum(e for _, e in mon)
        out[mon] = coef * (-1) ** (ell + deg)
    return out


def render_monomial(m: Monomial, var: str = "B") -> str:
    if not m:
        return "1"
    return "*".join(
        f"{var}{k}" + (f"^{e}" if e > 1 else "") for k, e in m
    )


def render_expansion(expansion: dict[Monomial, Fraction], var: str = "B") -> str:
    parts = []
    for mon in sorted(expansion):
        c = expansion[mon]
        if not c:
            continue
        body = render_monomial(mon, var)
        if body == "1":
            term = str(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = f"{abs(c)}*{body}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"
