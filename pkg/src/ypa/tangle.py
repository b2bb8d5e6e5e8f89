"""Layered planar tangles: a textual DSL, validation, and the state sum.

Standard shape and reading conventions
--------------------------------------
Every tangle is normalized to a rectangle with all marked boundary points on
the top edge and the distinguished interval containing the bottom edge.
Boundary points are read right-to-left (counterclockwise from the
distinguished interval); the sign - gives a downward-oriented strand, + an
upward one.  Sweeping top to bottom, the state of a horizontal slice is the
list of regions ``r_0 .. r_m`` between strands, each filled with a Young
diagram.  Across a downward strand the east region covers the west; across
an upward strand the west covers the east.  For a loop of length n the
initial slice reads the loop backwards: ``r_j`` holds diagram ``n - j``.

Rows and atoms
--------------
A program is a sequence of rows.  Within a row, ``|`` (pass), ``*`` (inline
dot), ``cap`` and ``box NAME`` tile the current strands left to right and
must consume all of them; ``cup_du``/``cup_ud`` occupy gaps, either an
explicit pre-row gap ``@g`` (0-based) or the gap at the point of the row
where they are written (the right end in a row of cups alone).  A cup is a
maximum of a string: ``cup_du`` inserts a (down, up) pair around a summed
region covering the gap's region, ``cup_ud`` an (up, down) pair around a
summed region covered by it; both weigh ``sqrt(f(inner)/f(outer))``.  A cap
is a minimum: it joins two adjacent opposite strands whose outer regions
must agree and weighs ``sqrt(f(inner)/f(outer))``.  The dot multiplies by
the content of the box between its strand's two regions, sign included.  A
box consumes ``2q`` strands whose orientations must match the bound
element's signature read right-to-left (up = internal +, down = internal -),
requires the two flanking regions to agree, and multiplies by the element's
value on the loop read right-to-left across its legs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .plancherel import HarmonicFunction
from .surd import ONE, Surd, sqrt_fraction
from .young import Diagram, LoopPath, Signature, box_content, down_covers, up_covers

UP, DOWN = 1, -1


class TangleError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Element:
    """A function of loops of a fixed signature; the value of a filled box."""

    name: str
    signature: Signature
    fn: Callable[[LoopPath], Surd]

    def evaluate(self, loop: LoopPath) -> Surd:
        if loop.signature != self.signature:
            raise TangleError(
                f"element {self.name} expects signature {self.signature}, "
                f"got {loop.signature}"
            )
        return self.fn(loop)

    def legs(self) -> tuple[int, ...]:
        """Strand orientations left-to-right that the box window must show."""
        return tuple(UP if e > 0 else DOWN for e in reversed(self.signature))


# -- atoms and compiled rows ---------------------------------------------------

@dataclass(frozen=True)
class Atom:
    kind: str  # "pass" | "dot" | "cap" | "cup" | "box"
    cup_kind: str | None = None  # "du" | "ud"
    gap: int | None = None
    box_name: str | None = None
    line: int | None = None
    col: int | None = None


@dataclass(frozen=True)
class RowPlan:
    """A validated row: gap insertions plus strand operations.

    Insertions hold (pre-row gap, cup kind).  Strand operations hold the
    post-insertion start position (1-based) of each consuming atom.
    """

    insertions: tuple[tuple[int, str], ...]
    ops: tuple[tuple[str, int, object], ...]  # (kind, post_start, extra)


@dataclass(frozen=True)
class TangleProgram:
    name: str
    signature: Signature
    rows: tuple[tuple[Atom, ...], ...]
    bindings: dict[str, Element] = field(default_factory=dict)
    plans: tuple[RowPlan, ...] = ()
    orientations: tuple[tuple[int, ...], ...] = ()  # per-row pre-insertion


def _signature_orientations(sig: Signature) -> tuple[int, ...]:
    return tuple(UP if e > 0 else DOWN for e in reversed(sig))


def compile_program(
    name: str,
    signature: Signature,
    rows: tuple[tuple[Atom, ...], ...],
    bindings: dict[str, Element],
) -> TangleProgram:
    """Validate orientations/arities row by row and fix all positions."""
    orient = list(_signature_orientations(signature))
    plans: list[RowPlan] = []
    pre_orients: list[tuple[int, ...]] = []
    for row in rows:
        pre_orients.append(tuple(orient))
        n = len(orient)
        strand_atoms = [a for a in row if a.kind != "cup"]
        insertions: list[tuple[int, str]] = []
        cursor = 0
        spans: list[tuple[str, int, int, object]] = []  # kind, start, end, extra
        for atom in row:
            if atom.kind == "cup":
                if atom.gap is not None:
                    gap = atom.gap
                elif strand_atoms:
                    gap = cursor
                else:
                    gap = n
                if not 0 <= gap <= n:
                    raise TangleError(f"cup gap {gap} out of range 0..{n}", atom.line, atom.col)
                insertions.append((gap, atom.cup_kind))
                continue
            if atom.kind in ("pass", "dot"):
                arity = 1
                extra: object = None
            elif atom.kind == "cap":
                arity = 2
                extra = None
            else:  # box
                elem = bindings.get(atom.box_name)
                if elem is None:
                    raise TangleError(f"unbound box name {atom.box_name!r}", atom.line, atom.col)
                arity = len(elem.signature)
                extra = elem
            start = cursor + 1
            end = cursor + arity
            if end > n:
                raise TangleError(
                    f"row consumes more strands than the {n} available", atom.line, atom.col
                )
            if atom.kind == "cap":
                if orient[start - 1] == orient[end - 1]:
                    raise TangleError("cap on same-direction strands", atom.line, atom.col)
            if atom.kind == "box":
                window = tuple(orient[start - 1 : end])
                if window != extra.legs():
                    raise TangleError(
                        f"box {atom.box_name!r} legs {extra.legs()} do not match "
                        f"strand orientations {window}",
                        atom.line,
                        atom.col,
                    )
            spans.append((atom.kind, start, end, extra))
            cursor = end
        if strand_atoms and cursor != n:
            raise TangleError(f"{n - cursor} strands remain untiled in a row")
        # Post-insertion coordinates; insertion inside a consuming span would
        # break the span's contiguity.
        gaps = sorted(g for g, _ in insertions)
        for kind, start, end, _ in spans:
            if end > start and any(start <= g <= end - 1 for g in gaps):
                raise TangleError("cup inserted inside a cap/box span")

        def post(p: int) -> int:
            return p + 2 * sum(1 for g in gaps if g <= p - 1)

        ops = tuple(
            (kind, post(start), extra) for kind, start, end, extra in spans if kind != "pass"
        )
        plans.append(RowPlan(tuple(insertions), ops))
        # Update orientations: apply insertions right-to-left, then remove spans.
        for gap, ck in sorted(insertions, key=lambda t: t[0], reverse=True):
            pair = [DOWN, UP] if ck == "du" else [UP, DOWN]
            orient[gap:gap] = pair
        removed: set[int] = set()
        for kind, start, end, extra in spans:
            if kind in ("cap", "box"):
                removed.update(range(post(start), post(start) + (end - start) + 1))
        orient = [o for i, o in enumerate(orient, start=1) if i not in removed]
    if orient:
        raise TangleError(f"{len(orient)} strands remain after the last row")
    return TangleProgram(
        name, signature, rows, dict(bindings), tuple(plans), tuple(pre_orients)
    )


# -- DSL parser ----------------------------------------------------------------

_PUNCT = set("{}():;,@")


def _tokenize(text: str):
    tokens: list[tuple[str, str, int, int]] = []  # (type, value, line, col)
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in _PUNCT or ch in "|*+-":
            tokens.append(("punct", ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise TangleError(f"unexpected character {ch!r}", line, col)
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise TangleError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            raise TangleError(f"expected {value!r}, got {tok[1]!r}", tok[2], tok[3])
        return tok

    def parse_signature(self) -> Signature:
        self.expect("(")
        signs: list[int] = []
        tok = self.peek()
        if tok and tok[1] == ")":
            self.next()
            return ()
        while True:
            tok = self.next()
            if tok[1] == "+":
                signs.append(1)
            elif tok[1] == "-":
                signs.append(-1)
            else:
                raise TangleError(f"expected '+' or '-', got {tok[1]!r}", tok[2], tok[3])
            tok = self.next()
            if tok[1] == ")":
                break
            if tok[1] != ",":
                raise TangleError(f"expected ',' or ')', got {tok[1]!r}", tok[2], tok[3])
        if sum(signs) != 0:
            raise TangleError("signature signs must sum to zero")
        return tuple(signs)

    def parse_atom(self) -> Atom:
        tok = self.next()
        line, col = tok[2], tok[3]
        if tok[1] == "|":
            return Atom("pass", line=line, col=col)
        if tok[1] == "*":
            return Atom("dot", line=line, col=col)
        if tok[0] == "ident" and tok[1] == "cap":
            return Atom("cap", line=line, col=col)
        if tok[0] == "ident" and tok[1] in ("cup_du", "cup_ud"):
            gap = None
            nxt = self.peek()
            if nxt and nxt[1] == "@":
                self.next()
                gtok = self.next()
                if gtok[0] != "int":
                    raise TangleError("expected gap index after '@'", gtok[2], gtok[3])
                gap = int(gtok[1])
            return Atom("cup", cup_kind=tok[1][-2:], gap=gap, line=line, col=col)
        if tok[0] == "ident" and tok[1] == "box":
            nm = self.next()
            if nm[0] != "ident":
                raise TangleError("expected box name", nm[2], nm[3])
            return Atom("box", box_name=nm[1], line=line, col=col)
        raise TangleError(f"unknown atom {tok[1]!r}", line, col)

    def parse_program_source(self):
        self.expect("tangle")
        nm = self.next()
        if nm[0] != "ident":
            raise TangleError("expected tangle name", nm[2], nm[3])
        self.expect(":")
        sig = self.parse_signature()
        self.expect("{")
        rows: list[tuple[Atom, ...]] = []
        while True:
            tok = self.peek()
            if tok is None:
                raise TangleError("unterminated tangle body")
            if tok[1] == "}":
                self.next()
                break
            self.expect("row")
            atoms: list[Atom] = []
            while True:
                tok = self.peek()
                if tok is None:
                    raise TangleError("unterminated row")
                if tok[1] == ";":
                    self.next()
                    break
                atoms.append(self.parse_atom())
            if not atoms:
                raise TangleError("empty row")
            rows.append(tuple(atoms))
        return nm[1], sig, tuple(rows)


def parse_programs(
    text: str,
    bindings: dict[str, Element] | None = None,
    f: HarmonicFunction | None = None,
) -> dict[str, TangleProgram]:
    """Parse a DSL source with any number of tangle definitions.

    Earlier definitions become available as box bindings for later ones
    (wrapped by :func:`as_element`; requires ``f``).
    """
    parser = _Parser(_tokenize(text))
    env: dict[str, Element] = dict(bindings or {})
    out: dict[str, TangleProgram] = {}
    while parser.peek() is not None:
        name, sig, rows = parser.parse_program_source()
        prog = compile_program(name, sig, rows, env)
        out[name] = prog
        if f is not None:
            env[name] = as_element(prog, f)
    return out


def parse(text: str, bindings: dict[str, Element] | None = None) -> TangleProgram:
    """Parse a source containing exactly one tangle definition."""
    progs = parse_programs(text, bindings)
    if len(progs) != 1:
        raise TangleError(f"expected exactly one tangle, found {len(progs)}")
    return next(iter(progs.values()))


# -- evaluation ----------------------------------------------------------------

def evaluate(program: TangleProgram, loop: LoopPath, f: HarmonicFunction) -> Surd:
    """Exact state-sum value of the program on the loop."""
    if loop.signature != program.signature:
        raise TangleError(
            f"loop signature {loop.signature} does not match program "
            f"signature {program.signature}"
        )
    init = tuple(reversed(loop.diagrams)) if len(loop) else (loop.diagrams[0],)
    states: dict[tuple[Diagram, ...], Surd] = {init: ONE}
    fval = f.value
    for plan in program.plans:
        new_states: dict[tuple[Diagram, ...], Surd] = {}
        # Insertions apply right-to-left so gap indices stay valid; on equal
        # gaps the later-listed cup goes first, leaving listed order west-east.
        order = sorted(
            range(len(plan.insertions)),
            key=lambda k: (plan.insertions[k][0], k),
            reverse=True,
        )
        for regions, amp in states.items():
            branches = [(list(regions), amp)]
            for k in order:
                gap, ck = plan.insertions[k]
                grown: list[tuple[list[Diagram], Surd]] = []
                for regs, a in branches:
                    region = regs[gap]
                    pockets = up_covers(region) if ck == "du" else down_covers(region)
                    for s, _c in pockets:
                        w = sqrt_fraction(fval(s) / fval(region))
                        grown.append((regs[: gap + 1] + [s, region] + regs[gap + 1 :], a * w))
                branches = grown
            for regs, a in branches:
                drop: set[int] = set()
                dead = False
                for kind, p, extra in plan.ops:
                    if kind == "dot":
                        w, e = regs[p - 1], regs[p]
                        big, small = (e, w) if sum(w) < sum(e) else (w, e)
                        c = box_content(big, small)
                        if not c:  # content 0 annihilates the state
                            dead = True
                            break
                        a = a * Fraction(c)
                    elif kind == "cap":
                        if regs[p - 1] != regs[p + 1]:
                            dead = True
                            break
                        a = a * sqrt_fraction(fval(regs[p]) / fval(regs[p - 1]))
                        drop.update((p, p + 1))
                    else:  # box
                        elem: Element = extra
                        q2 = len(elem.signature)
                        if regs[p - 1] != regs[p + q2 - 1]:
                            dead = True
                            break
                        diagrams = tuple(reversed(regs[p - 1 : p + q2]))
                        value = elem.fn(LoopPath(diagrams, elem.signature))
                        if value.is_zero():
                            dead = True
                            break
                        a = a * value
                        drop.update(range(p, p + q2))
                if dead or a.is_zero():
                    continue
                new_regs = tuple(r for i, r in enumerate(regs) if i not in drop)
                acc = new_states.get(new_regs)
                new_states[new_regs] = a if acc is None else acc + a
        states = {k: v for k, v in new_states.items() if not v.is_zero()}
    total = Surd()
    for regions, amp in states.items():
        assert len(regions) == 1 and regions[0] == loop.base
        total = total + amp
    return total


def as_element(program: TangleProgram, f: HarmonicFunction) -> Element:
    """Wrap the program as an element usable inside boxes of other tangles."""
    return Element(
        program.name, program.signature, lambda loop: evaluate(program, loop, f)
    )
