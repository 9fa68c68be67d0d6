"""Topological 2-automata: data model, ``.tap`` text format, validation and
finite development.

Format (one declaration per line, ``#`` starts a comment)::

    automaton v1
    block <k> signature orientable=<true|false> genus=<g>|crosscaps=<c> boundaries=<b>
    block <k> triangulation <a,b,c> <a,b,c> ...
    incoming <k> <boundary-index>
    arrow <k> <boundary-index> -> <l>

Arrows carry no gluing map: the homeomorphism type of the resulting surface
does not depend on it.
"""
from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .surface_blocks import (
    SurfaceError,
    SurfaceSignature,
    Triangulation,
    triangulation_signature,
)

HEADER = "automaton v1"
DEFAULT_MAX_STAGE = 100_000


class AutomatonError(ValueError):
    pass


class ParseError(AutomatonError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class InvalidAutomaton(AutomatonError):
    def __init__(self, report):
        self.report = report
        super().__init__("invalid automaton:\n" + "\n".join(f"  {v}" for v in report.violations))


class StageCapExceeded(AutomatonError):
    pass


@dataclass(frozen=True)
class BlockSpec:
    """A building block, abstract (signature only) or triangulated."""

    signature: SurfaceSignature
    triangulation: Triangulation | None = None

    @classmethod
    def from_signature(cls, sig: SurfaceSignature) -> BlockSpec:
        return cls(sig, None)

    @classmethod
    def from_triangulation(cls, tri: Triangulation) -> BlockSpec:
        return cls(triangulation_signature(tri), tri)

    @property
    def boundary_count(self) -> int:
        return self.signature.boundary_count


@dataclass(frozen=True)
class Arrow:
    source_block: int
    source_boundary: int
    target_block: int

    @property
    def is_loop(self) -> bool:
        return self.source_block == self.target_block


@dataclass(frozen=True)
class TopologicalAutomaton:
    blocks: tuple
    incoming: dict = field(default_factory=dict)
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "incoming", dict(sorted(self.incoming.items())))

    @property
    def p(self) -> int:
        return len(self.blocks) - 1

    @property
    def q(self) -> int:
        return len(self.arrows)

    def outgoing(self, k: int) -> list[int]:
        """Outgoing boundary indices of block ``k``."""
        skip = self.incoming.get(k) if k >= 1 else None
        return [b for b in range(self.blocks[k].boundary_count) if b != skip]

    def arrow_at(self, k: int, boundary: int) -> Arrow:
        for a in self.arrows:
            if a.source_block == k and a.source_boundary == boundary:
                return a
        raise KeyError((k, boundary))


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class Violation:
    kind: str
    block: int | None = None
    boundary: int | None = None
    target: int | None = None

    def __str__(self):
        parts = [self.kind]
        if self.block is not None:
            parts.append(f"block={self.block}")
        if self.boundary is not None:
            parts.append(f"boundary={self.boundary}")
        if self.target is not None:
            parts.append(f"target={self.target}")
        return " ".join(parts)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


def validate(aut: TopologicalAutomaton) -> ValidationReport:
    """Check every structural condition and report all violations found."""
    out = []
    n = len(aut.blocks)
    if n == 0:
        return ValidationReport((Violation("NoBlocks"),))

    for k, b in aut.incoming.items():
        if k == 0:
            out.append(Violation("RootIncoming", 0, b))
        elif not 0 <= k < n:
            out.append(Violation("UnknownBlock", k))
        elif not 0 <= b < aut.blocks[k].boundary_count:
            out.append(Violation("BoundaryOutOfRange", k, b))
    for k in range(1, n):
        if aut.blocks[k].boundary_count == 0:
            out.append(Violation("ClosedBlock", k))
        elif k not in aut.incoming:
            out.append(Violation("MissingIncoming", k))

    sources = Counter()
    for a in aut.arrows:
        k, b, l = a.source_block, a.source_boundary, a.target_block
        bad = False
        if not 0 <= k < n:
            out.append(Violation("UnknownBlock", k))
            bad = True
        if not 0 <= l < n:
            out.append(Violation("UnknownBlock", l))
            bad = True
        if bad:
            continue
        if l == 0:
            out.append(Violation("TargetRoot", k, b, l))
        if k > l:
            out.append(Violation("BackwardArrow", k, b, l))
        if not 0 <= b < aut.blocks[k].boundary_count:
            out.append(Violation("BoundaryOutOfRange", k, b))
            continue
        if k >= 1 and aut.incoming.get(k) == b:
            out.append(Violation("ArrowFromIncoming", k, b))
            continue
        sources[(k, b)] += 1

    for (k, b), c in sorted(sources.items()):
        if c > 1:
            out.append(Violation("DuplicateArrow", k, b))
    for k in range(n):
        for b in aut.outgoing(k):
            if (k, b) not in sources:
                out.append(Violation("MissingArrow", k, b))
    return ValidationReport(tuple(out))


def check(aut: TopologicalAutomaton) -> TopologicalAutomaton:
    report = validate(aut)
    if not report.ok:
        raise InvalidAutomaton(report)
    return aut


# ------------------------------------------------------------------- parsing

_WORD = re.compile(r"\S+")
_INT = re.compile(r"\d+\Z")
_TRI = re.compile(r"(\d+),(\d+),(\d+)\Z")


def _int(tok, line):
    text, col = tok
    if not _INT.match(text):
        raise ParseError(f"expected a nonnegative integer, got {text!r}", line, col)
    return int(text)


def _keyed(tok, key, line):
    text, col = tok
    prefix = key + "="
    if not text.startswith(prefix):
        raise ParseError(f"expected {prefix}<value>, got {text!r}", line, col)
    return text[len(prefix):]


def _parse_signature(toks, line, end_col):
    if len(toks) != 3:
        col = toks[3][1] if len(toks) > 3 else end_col
        raise ParseError("signature needs orientable=, genus=|crosscaps= and boundaries=", line, col)
    orient = _keyed(toks[0], "orientable", line)
    if orient not in ("true", "false"):
        raise ParseError(f"orientable must be true or false, got {orient!r}", line, toks[0][1])
    key = "genus" if orient == "true" else "crosscaps"
    amount = _int((_keyed(toks[1], key, line), toks[1][1] + len(key) + 1), line)
    bnd = _int((_keyed(toks[2], "boundaries", line), toks[2][1] + 11), line)
    try:
        if orient == "true":
            return SurfaceSignature.orientable_surface(amount, bnd)
        return SurfaceSignature.nonorientable_surface(amount, bnd)
    except ValueError as exc:
        raise ParseError(str(exc), line, toks[1][1]) from None


def _parse_triangulation(toks, line, end_col):
    if not toks:
        raise ParseError("triangulation needs at least one triangle", line, end_col)
    triangles = []
    for text, col in toks:
        m = _TRI.match(text)
        if not m:
            raise ParseError(f"expected a triangle a,b,c, got {text!r}", line, col)
        triangles.append(tuple(int(x) for x in m.groups()))
    try:
        return Triangulation.from_triangles(triangles)
    except SurfaceError as exc:
        raise ParseError(str(exc), line, toks[0][1]) from None


def parse(text: str, *, check_valid: bool = True) -> TopologicalAutomaton:
    """Parse a ``.tap`` document.

    Structural problems raise :class:`ParseError` with a line and column.
    With ``check_valid`` the result is also validated and
    :class:`InvalidAutomaton` lists every violation.
    """
    blocks = {}
    block_lines = {}
    incoming = {}
    raw_refs = []   # (block, line, col) to resolve once all blocks are known
    arrows = []
    seen_header = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _WORD.finditer(body)]
        if not toks:
            continue
        head, col = toks[0]
        end_col = len(body.rstrip()) + 1
        if not seen_header:
            if [t for t, _ in toks] != ["automaton", "v1"]:
                raise ParseError(f"expected header {HEADER!r}", lineno, col)
            seen_header = True
            continue
        if head == "block":
            if len(toks) < 3:
                raise ParseError("block needs an index and a representation", lineno, end_col)
            k = _int(toks[1], lineno)
            if k in blocks:
                raise ParseError(f"block {k} defined twice (first on line {block_lines[k]})", lineno, toks[1][1])
            rep, rcol = toks[2]
            if rep == "signature":
                blocks[k] = BlockSpec.from_signature(_parse_signature(toks[3:], lineno, end_col))
            elif rep == "triangulation":
                tri = _parse_triangulation(toks[3:], lineno, end_col)
                try:
                    blocks[k] = BlockSpec.from_triangulation(tri)
                except SurfaceError as exc:
                    raise ParseError(f"block {k}: {exc}", lineno, rcol) from None
            else:
                raise ParseError(f"unknown block representation {rep!r}", lineno, rcol)
            block_lines[k] = lineno
        elif head == "incoming":
            if len(toks) != 3:
                raise ParseError("incoming takes a block and a boundary index", lineno, end_col)
            k = _int(toks[1], lineno)
            if k in incoming:
                raise ParseError(f"incoming boundary of block {k} assigned twice", lineno, toks[1][1])
            incoming[k] = _int(toks[2], lineno)
            raw_refs.append((k, lineno, toks[1][1]))
        elif head == "arrow":
            if len(toks) != 5 or toks[3][0] != "->":
                col = toks[3][1] if len(toks) > 3 else end_col
                raise ParseError("arrow syntax is: arrow <k> <boundary> -> <l>", lineno, col)
            k = _int(toks[1], lineno)
            b = _int(toks[2], lineno)
            l = _int(toks[4], lineno)
            raw_refs.append((k, lineno, toks[1][1]))
            raw_refs.append((l, lineno, toks[4][1]))
            arrows.append(Arrow(k, b, l))
        else:
            raise ParseError(f"unknown declaration {head!r}", lineno, col)

    if not seen_header:
        raise ParseError(f"missing header {HEADER!r}", 1, 1)
    for k in range(len(blocks)):
        if k not in blocks:
            raise ParseError(f"block indices must be 0..{len(blocks) - 1}; block {k} is missing", 1, 1)
    for k, lineno, col in raw_refs:
        if k not in blocks:
            raise ParseError(f"unknown block {k}", lineno, col)

    aut = TopologicalAutomaton(tuple(blocks[k] for k in range(len(blocks))), incoming, tuple(arrows))
    return check(aut) if check_valid else aut


def serialize(aut: TopologicalAutomaton) -> str:
    lines = [HEADER]
    for k, block in enumerate(aut.blocks):
        if block.triangulation is not None:
            tris = " ".join(",".join(map(str, t)) for t in block.triangulation.triangles)
            lines.append(f"block {k} triangulation {tris}")
        else:
            s = block.signature
            amount = f"genus={s.genus}" if s.orientable else f"crosscaps={s.crosscaps}"
            lines.append(
                f"block {k} signature orientable={'true' if s.orientable else 'false'} "
                f"{amount} boundaries={s.boundary_count}"
            )
    for k, b in aut.incoming.items():
        lines.append(f"incoming {k} {b}")
    for a in aut.arrows:
        lines.append(f"arrow {a.source_block} {a.source_boundary} -> {a.target_block}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------- development

@dataclass(frozen=True)
class Development:
    stage: int
    copy_counts: dict
    euler_characteristic: int
    boundary_count: int
    orientable: bool
    genus_or_crosscaps: int


def develop(aut: TopologicalAutomaton, s: int, *, max_stage: int = DEFAULT_MAX_STAGE) -> Development:
    """Aggregate invariants of the compact stage-``s`` approximation M_s.

    Only multiplicities are tracked: the frontier maps each outgoing boundary
    label (block, boundary) to the number of open circles carrying it.
    """
    if s < 0:
        raise ValueError("stage must be nonnegative")
    if s > max_stage:
        raise StageCapExceeded(f"stage {s} exceeds the cap {max_stage}")
    arrow = {(a.source_block, a.source_boundary): a.target_block for a in aut.arrows}
    frontier = Counter({(0, b): 1 for b in aut.outgoing(0)})
    copies = Counter()
    for _ in range(s):
        attached = Counter()
        for label, n in frontier.items():
            attached[arrow[label]] += n
        frontier = Counter()
        for k, n in attached.items():
            copies[k] += n
            for b in aut.outgoing(k):
                frontier[(k, b)] += n

    chi = aut.blocks[0].signature.euler_characteristic
    chi += sum(n * aut.blocks[k].signature.euler_characteristic for k, n in copies.items())
    boundary = sum(frontier.values())
    used = [0] + [k for k, n in copies.items() if n]
    orientable = all(aut.blocks[k].signature.orientable for k in used)
    amount = (2 - chi - boundary) // 2 if orientable else 2 - chi - boundary
    return Development(
        stage=s,
        copy_counts=dict(sorted((k, n) for k, n in copies.items() if n)),
        euler_characteristic=chi,
        boundary_count=boundary,
        orientable=orientable,
        genus_or_crosscaps=amount,
    )


def reachable_blocks(aut: TopologicalAutomaton) -> list[int]:
    succ = defaultdict(set)
    for a in aut.arrows:
        succ[a.source_block].add(a.target_block)
    seen = {0}
    stack = [0]
    while stack:
        for n in succ[stack.pop()]:
            if n not in seen:
                seen.add(n)
                stack.append(n)
    return sorted(seen)
