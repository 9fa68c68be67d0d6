"""Vertex type symbols for decorated graphs and trees.

Starred symbols describe a compact piece (finite genus or cross-caps, or an
infinite amount accumulated from below); loop symbols describe a block with
one loop (``O`` family) or several (``Theta`` family), each in a plain,
handle (``h``) or cross-cap (``c``) variant.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

STAR = "s"          # orientable, finite genus i >= 0
STAR_C = "sc"       # nonorientable, i >= 1 cross-caps
STAR_INF = "sinf"
STAR_INF_C = "sinfc"
LOOP_KINDS = ("o", "oh", "oc", "t", "th", "tc")

_RANK = {STAR: 0, STAR_INF: 1, STAR_C: 2, STAR_INF_C: 3,
         "o": 4, "oh": 5, "oc": 6, "t": 7, "th": 8, "tc": 9}
_VARIANT_RANK = {"plain": 0, "h": 1, "c": 2}
_TOKEN = re.compile(r"(sinfc|sinf|sc(\d+)|s(\d+)|oh|oc|o|th|tc|t)")


@total_ordering
@dataclass(frozen=True)
class TypeSymbol:
    kind: str
    index: int | None = None

    def __post_init__(self):
        if self.kind not in _RANK:
            raise ValueError(f"unknown symbol kind {self.kind!r}")
        if self.kind == STAR:
            if self.index is None or self.index < 0:
                raise ValueError("orientable star needs a genus >= 0")
        elif self.kind == STAR_C:
            if self.index is None or self.index < 1:
                raise ValueError("nonorientable star needs at least one cross-cap")
        elif self.index is not None:
            raise ValueError(f"{self.kind} takes no index")

    @property
    def starred(self) -> bool:
        return self.kind in (STAR, STAR_C, STAR_INF, STAR_INF_C)

    @property
    def loop_kind(self) -> bool:
        return not self.starred

    @property
    def family(self) -> str | None:
        """'o' or 't' for loop symbols, None for starred ones."""
        return None if self.starred else self.kind[0]

    @property
    def theta(self) -> bool:
        return self.family == "t"

    @property
    def variant(self) -> str:
        if self.kind in ("oh", "th"):
            return "h"
        if self.kind in ("oc", "tc"):
            return "c"
        return "plain"

    @property
    def orientable(self) -> bool:
        """Meaningful for starred symbols only."""
        return self.kind in (STAR, STAR_INF)

    @property
    def finite(self) -> bool:
        return self.kind in (STAR, STAR_C)

    def with_variant(self, variant: str) -> TypeSymbol:
        if self.starred:
            raise ValueError("starred symbols have no variant")
        suffix = "" if variant == "plain" else variant
        return TypeSymbol(self.kind[0] + suffix)

    @property
    def token(self) -> str:
        if self.kind == STAR:
            return f"s{self.index}"
        if self.kind == STAR_C:
            return f"sc{self.index}"
        return self.kind

    def _key(self):
        return (_RANK[self.kind], self.index or 0)

    def __lt__(self, other):
        if not isinstance(other, TypeSymbol):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self):
        return self.token


def variant_rank(variant: str) -> int:
    return _VARIANT_RANK[variant]


def star(genus: int) -> TypeSymbol:
    return TypeSymbol(STAR, genus)


def star_c(crosscaps: int) -> TypeSymbol:
    return TypeSymbol(STAR_C, crosscaps)


STAR_INF_SYM = TypeSymbol(STAR_INF)
STAR_INF_C_SYM = TypeSymbol(STAR_INF_C)
O = TypeSymbol("o")
OH = TypeSymbol("oh")
OC = TypeSymbol("oc")
THETA = TypeSymbol("t")
THETA_H = TypeSymbol("th")
THETA_C = TypeSymbol("tc")


def parse_token(text: str, pos: int = 0) -> tuple[TypeSymbol, int]:
    """Read one symbol token starting at ``pos``; return it and the end position."""
    m = _TOKEN.match(text, pos)
    if not m:
        raise ValueError(f"expected a type token at position {pos} of {text!r}")
    tok = m.group(1)
    if m.group(2) is not None:
        sym = star_c(int(m.group(2)))
    elif m.group(3) is not None:
        sym = star(int(m.group(3)))
    else:
        sym = TypeSymbol(tok)
    return sym, m.end()


def symbol(token: str) -> TypeSymbol:
    sym, end = parse_token(token)
    if end != len(token):
        raise ValueError(f"not a type token: {token!r}")
    return sym
