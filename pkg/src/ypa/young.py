"""Young diagrams, the Young graph, profiles, loops, and their literals.

Diagrams are tuples of weakly decreasing positive integers (no trailing
zeros); the empty tuple is the empty diagram.  An edge ``mu -> lam`` of the
Young graph adds one box; loops carry a sign per step (+ adds, - removes).

Caching: :func:`dim` and the cover maps use per-process ``functools.cache``
tables.  Under the process-pool verifier every worker owns its table, and
within one process CPython's GIL makes the idempotent inserts safe, so no
further locking is needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache

Diagram = tuple[int, ...]
Signature = tuple[int, ...]  # entries +1 / -1

EMPTY: Diagram = ()


def is_diagram(parts) -> bool:
    return all(
        isinstance(p, int) and p > 0 for p in parts
    ) and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_diagram(parts) -> Diagram:
    lam = tuple(int(p) for p in parts if p)
    if not is_diagram(lam):
        raise ValueError(f"not weakly decreasing positive parts: {parts}")
    return lam


def weight(lam: Diagram) -> int:
    return sum(lam)


def transpose(lam: Diagram) -> Diagram:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def content(cell: tuple[int, int]) -> int:
    """Content j - i of the box in row i, column j (both 1-based)."""
    i, j = cell
    return j - i


@cache
def profile(lam: Diagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Local minima and maxima of the Russian-convention profile.

    Minima are the contents of addable boxes, maxima of removable boxes;
    they interlace strictly and share the same sum.
    """
    l = len(lam)
    minima = []
    maxima = []
    for i in range(1, l + 2):  # rows 1..l+1, with row l+1 allowing a new row
        here = lam[i - 1] if i <= l else 0
        above = lam[i - 2] if i >= 2 else None
        if above is None or above > here:
            minima.append(here + 1 - i)
        if i <= l and here > (lam[i] if i < l else 0):
            maxima.append(here - i)
    return tuple(sorted(minima)), tuple(sorted(maxima))


@cache
def up_covers(lam: Diagram) -> tuple[tuple[Diagram, int], ...]:
    """All (mu, content) with lam -> mu by adding one box."""
    out = []
    l = len(lam)
    for i in range(1, l + 2):
        here = lam[i - 1] if i <= l else 0
        above = lam[i - 2] if i >= 2 else None
        if above is None or above > here:
            mu = list(lam) + ([0] if i == l + 1 else [])
            mu[i - 1] += 1
            out.append((tuple(mu), here + 1 - i))
    return tuple(out)


@cache
def down_covers(lam: Diagram) -> tuple[tuple[Diagram, int], ...]:
    """All (mu, content) with mu -> lam, i.e. removing one box from lam."""
    out = []
    l = len(lam)
    for i in range(1, l + 1):
        here = lam[i - 1]
        below = lam[i] if i < l else 0
        if here > below:
            mu = list(lam)
            mu[i - 1] -= 1
            if not mu[-1]:
                mu.pop()
            out.append((tuple(mu), here - i))
    return tuple(out)


def covers(lam: Diagram, direction: str):
    if direction == "up":
        return up_covers(lam)
    if direction == "down":
        return down_covers(lam)
    raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")


def box_content(big: Diagram, small: Diagram) -> int:
    """Content of the single box of big/small; requires small -> big."""
    if weight(big) != weight(small) + 1:
        raise ValueError(f"{big} does not cover {small}")
    for i in range(len(big)):
        b = big[i]
        s = small[i] if i < len(small) else 0
        if b == s + 1:
            rest_ok = big[i + 1 :] == small[i + 1 :] and big[:i] == small[:i]
            if rest_ok:
                return b - (i + 1)
        elif b != s:
            break
    raise ValueError(f"{big} does not cover {small}")


@cache
def dim(lam: Diagram) -> int:
    """Number of saturated paths from the empty diagram to lam.

    This is the path-count definition (equivalently the number of standard
    tableaux), computed by the memoized cover recursion.  Tests cross-check
    it against |lam|! / prod(hook lengths).
    """
    if not lam:
        return 1
    return sum(dim(mu) for mu, _ in down_covers(lam))


def hook_lengths(lam: Diagram) -> list[int]:
    lamt = transpose(lam)
    return [
        lam[i] + lamt[j] - (i + 1) - (j + 1) + 1
        for i in range(len(lam))
        for j in range(lam[i])
    ]


@dataclass(frozen=True)
class LoopPath:
    """A loop in the Young graph together with its signature."""

    diagrams: tuple[Diagram, ...]
    signature: Signature

    def __post_init__(self):
        n = len(self.signature)
        if len(self.diagrams) != n + 1:
            raise ValueError("loop needs one more diagram than signs")
        if n and self.diagrams[0] != self.diagrams[-1]:
            raise ValueError("loop must end where it starts")
        for i, s in enumerate(self.signature):
            a, b = self.diagrams[i], self.diagrams[i + 1]
            big, small = (b, a) if s > 0 else (a, b)
            box_content(big, small)  # raises if not a cover

    @property
    def base(self) -> Diagram:
        return self.diagrams[0]

    def __len__(self) -> int:
        return len(self.signature)


def signature_of(signs) -> Signature:
    sig = tuple(1 if s in (1, "+") else -1 for s in signs)
    if sum(sig) != 0:
        raise ValueError(f"signature must balance to zero: {signs}")
    return sig


def enumerate_loops(base: Diagram, sig: Signature) -> list[LoopPath]:
    """All loops with the given base and signature, in lexicographic order."""
    sig = signature_of(sig)
    out: list[LoopPath] = []

    def walk(prefix: list[Diagram]):
        k = len(prefix) - 1
        if k == len(sig):
            if prefix[-1] == base:
                out.append(LoopPath(tuple(prefix), sig))
            return
        nxt = up_covers(prefix[-1]) if sig[k] > 0 else down_covers(prefix[-1])
        for mu, _ in nxt:
            prefix.append(mu)
            walk(prefix)
            prefix.pop()

    walk([base])
    out.sort(key=lambda lp: lp.diagrams)
    return out


# -- literals -----------------------------------------------------------------

_DIAGRAM_RE = re.compile(r"\[\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\]")


def parse_diagram(text: str) -> Diagram:
    """Parse ``[5,4,2,1,1]`` (``[]`` is the empty diagram)."""
    text = text.strip()
    if not _DIAGRAM_RE.fullmatch(text):
        raise ValueError(f"bad diagram literal: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return EMPTY
    return check_diagram(int(p) for p in inner.split(","))


def format_diagram(lam: Diagram) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def parse_loop(text: str) -> LoopPath:
    """Parse ``[2,1] v [2] v [1] ^ [1,1] ^ [2,1]``; a bare diagram is a loop
    of empty signature."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty loop literal")
    diagrams = [parse_diagram(tokens[0])]
    signs: list[int] = []
    i = 1
    while i < len(tokens):
        if tokens[i] == "^":
            signs.append(1)
        elif tokens[i] == "v":
            signs.append(-1)
        else:
            raise ValueError(f"expected '^' or 'v', got {tokens[i]!r}")
        if i + 1 >= len(tokens):
            raise ValueError("loop literal ends after a step marker")
        diagrams.append(parse_diagram(tokens[i + 1]))
        i += 2
    return LoopPath(tuple(diagrams), tuple(signs))


def format_loop(loop: LoopPath) -> str:
    parts = [format_diagram(loop.diagrams[0])]
    for s, lam in zip(loop.signature, loop.diagrams[1:]):
        parts.append("^" if s > 0 else "v")
        parts.append(format_diagram(lam))
    return " ".join(parts)


def diagrams_of_weight(n: int) -> list[Diagram]:
    """All diagrams of weight exactly n, lexicographically decreasing parts."""
    out: list[Diagram] = []

    def build(remaining: int, maxpart: int, prefix: list[int]):
        if not remaining:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            build(remaining - p, p, prefix)
            prefix.pop()

    build(n, n if n else 1, [])
    return out


def diagrams_up_to(n: int) -> list[Diagram]:
    out: list[Diagram] = []
    for k in range(n + 1):
        out.extend(diagrams_of_weight(k))
    return out
