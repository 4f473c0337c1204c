"""Face-sequences, map types, the zero-curvature solver and the type-string parser.

A face-sequence is the cyclic list of polygon sizes met while walking once
around a vertex. Two lists that differ by rotation or reversal describe the
same vertex, so every :class:`FaceSequence` is stored in canonical form: the
lexicographically least tuple among all rotations of both directions.

Type strings follow a small grammar::

    type := '['? seq (':' seq)* ']'?
    seq  := item ('.' item)*
    item := INT ('^' INT)?

Sizes must be at least 3 and exponents at least 1. ``^{12}`` is accepted as a
synonym for ``^12``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "FaceSequence",
    "MapType",
    "TypeTable",
    "TypeSyntaxError",
    "SizeTooSmall",
    "canonical_face_sequence",
    "canonical_cyclic",
    "parse_face_sequence",
    "parse_type",
    "solve_zero_curvature",
    "map_type",
    "candidate_type_tables",
]


class TypeSyntaxError(ValueError):
    """Malformed type string; ``position`` is the 0-based offending index."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class SizeTooSmall(ValueError):
    """A polygon size below 3 was requested."""


def canonical_cyclic(values: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation over both directions of ``values``."""
    seq = tuple(values)
    n = len(seq)
    if n == 0:
        return seq
    rev = seq[::-1]
    best = seq
    for i in range(n):
        for cand in (seq[i:] + seq[:i], rev[i:] + rev[:i]):
            if cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class FaceSequence:
    """Canonical cyclic tuple of polygon sizes around a vertex."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) < 3:
            raise ValueError(f"a vertex needs at least 3 faces, got {len(sizes)}")
        for s in sizes:
            if s < 3:
                raise SizeTooSmall(f"polygon size {s} is below 3")
        object.__setattr__(self, "sizes", canonical_cyclic(sizes))

    @property
    def canonical_form(self) -> tuple[int, ...]:
        return self.sizes

    @property
    def degree(self) -> int:
        return len(self.sizes)

    @property
    def link_length(self) -> int:
        return sum(p - 2 for p in self.sizes)

    def curvature(self) -> Fraction:
        """Exact value of ``1 - d/2 + sum(1/p)``."""
        return 1 - Fraction(len(self.sizes), 2) + sum((Fraction(1, p) for p in self.sizes), Fraction(0))

    @property
    def display(self) -> str:
        runs: list[list[int]] = []
        for s in self.sizes:
            if runs and runs[-1][0] == s:
                runs[-1][1] += 1
            else:
                runs.append([s, 1])
        return ".".join(str(s) if k == 1 else f"{s}^{k}" for s, k in runs)

    def __str__(self) -> str:
        return self.display

    def __repr__(self) -> str:
        return f"FaceSequence({self.display})"


def canonical_face_sequence(sizes: Iterable[int]) -> FaceSequence:
    return FaceSequence(tuple(sizes))


@dataclass(frozen=True, order=True)
class MapType:
    """Sorted tuple of distinct face-sequences, e.g. ``[3^6:3^3.4^2]``."""

    sequences: tuple[FaceSequence, ...] = field()

    def __post_init__(self) -> None:
        seqs = tuple(sorted(self.sequences))
        if not seqs:
            raise ValueError("a map type needs at least one face-sequence")
        if len(set(seqs)) != len(seqs):
            raise ValueError("face-sequences of a map type must be distinct")
        object.__setattr__(self, "sequences", seqs)

    @property
    def k(self) -> int:
        return len(self.sequences)

    @property
    def display(self) -> str:
        return "[" + ":".join(s.display for s in self.sequences) + "]"

    def __str__(self) -> str:
        return self.display

    def __repr__(self) -> str:
        return f"MapType({self.display})"


# ---------------------------------------------------------------------------
# parser


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.peek().isspace() and self.peek():
            self.pos += 1

    def error(self, message: str) -> TypeSyntaxError:
        return TypeSyntaxError(message, self.text, self.pos)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def accept(self, ch: str) -> bool:
        self.skip_ws()
        if self.peek() == ch:
            self.pos += 1
            return True
        return False


def _parse_seq(sc: _Scanner) -> FaceSequence:
    sizes: list[int] = []
    while True:
        item_pos = sc.pos
        size = sc.integer()
        if size < 3:
            raise SizeTooSmall(f"polygon size {size} is below 3 (position {item_pos})")
        count = 1
        if sc.accept("^"):
            braced = sc.accept("{")
            exp_pos = sc.pos
            count = sc.integer()
            if braced and not sc.accept("}"):
                raise sc.error("expected '}'")
            if count < 1:
                raise TypeSyntaxError("exponent must be at least 1", sc.text, exp_pos)
        sizes.extend([size] * count)
        if not sc.accept("."):
            break
    if len(sizes) < 3:
        raise TypeSyntaxError("a face-sequence needs at least 3 faces", sc.text, sc.pos)
    return FaceSequence(tuple(sizes))


def parse_type(text: str) -> MapType:
    sc = _Scanner(text)
    bracketed = sc.accept("[")
    seqs = [_parse_seq(sc)]
    while sc.accept(":"):
        seqs.append(_parse_seq(sc))
    if bracketed and not sc.accept("]"):
        raise sc.error("expected ']'")
    sc.skip_ws()
    if sc.pos != len(text):
        raise sc.error("unexpected character")
    if len(set(seqs)) != len(seqs):
        raise TypeSyntaxError("repeated face-sequence", text, 0)
    return MapType(tuple(seqs))


def parse_face_sequence(text: str) -> FaceSequence:
    t = parse_type(text.strip().strip("()"))
    if t.k != 1:
        raise TypeSyntaxError("expected a single face-sequence", text, 0)
    return t.sequences[0]


# ---------------------------------------------------------------------------
# zero curvature


def _unit_fraction_multisets(target: Fraction, count: int, least: int) -> Iterable[tuple[int, ...]]:
    """Non-decreasing tuples ``p >= least`` of length ``count`` with sum(1/p) == target."""
    if count == 0:
        if target == 0:
            yield ()
        return
    if target <= 0:
        return
    # 1/p <= target forces p >= 1/target; count/p >= target forces p <= count/target
    lo = max(least, -(-target.denominator // target.numerator))
    hi = (count * target.denominator) // target.numerator
    for p in range(lo, hi + 1):
        for rest in _unit_fraction_multisets(target - Fraction(1, p), count - 1, p):
            yield (p,) + rest


def solve_zero_curvature() -> frozenset[FaceSequence]:
    found: set[FaceSequence] = set()
    for d in range(3, 7):
        for multiset in _unit_fraction_multisets(Fraction(d, 2) - 1, d, 3):
            for arrangement in set(permutations(multiset)):
                found.add(FaceSequence(arrangement))
    return frozenset(found)


def map_type(m) -> MapType:
    """Distinct vertex face-sequences of a built map."""
    return MapType(tuple(sorted({m.face_sequence(v) for v in range(m.n_vertices)})))


# ---------------------------------------------------------------------------
# candidate pair types

_REALIZABLE = (
    "3^6:3^4.6", "3^6:3^3.4^2", "3^6:3^2.4.3.4", "3^6:3^2.4.12",
    "3^6:3^2.6^2", "3^4.6:3.6.3.6", "3^3.4^2:3^2.4.3.4", "3^3.4^2:3.4.6.4",
    "3^3.4^2:4^4", "3^2.4.3.4:3.4.6.4", "3^2.6^2:3^4.6", "3^2.6^2:3.6.3.6",
    "3.4^2.6:3.4.6.4", "3.4^2.6:3.6.3.6", "3.4.6.4:4.6.12", "3.12^2:3.4.3.12",
)

# Transcribed as listed, including [3.12^2:3.4.3.12], which also appears in
# the realizable table. set_A drops it so the two tables stay disjoint.
_UNREALIZABLE = (
    "3^3.4^2:3^2.6^2", "3^3.4^2:3.4^2.6", "3^3.4^2:3^4.6", "3^3.4^2:3^2.4.12",
    "3^3.4^2:4.8^2", "3^3.4^2:4.5.20", "3^3.4^2:4.6.12", "3^3.4^2:3.4.3.12",
    "3.4^2.6:3^2.6^2", "3.4^2.6:3^4.6", "3.4^2.6:3^2.4.3.4", "3.4^2.6:4^4",
    "3.4^2.6:3^2.4.12", "3.4^2.6:4.8^2", "3.4^2.6:6^3", "3.4^2.6:4.5.20",
    "3.4^2.6:4.6.12", "3.4^2.6:3.4.3.12",
    "3^2.6^2:3^2.4.3.4", "3^2.6^2:3^2.4.12", "3^2.6^2:6^3",
    "3^4.6:3^2.4.3.4", "3^4.6:3^2.4.12", "3^4.6:6^3", "3^4.6:4.6.12",
    "3^2.4.3.4:4^4", "3^2.4.3.4:3^2.4.12", "3^2.4.3.4:3.4.3.12", "3^2.4.3.4:4.8^2",
    "3.6.3.6:4.6.12", "3.6.3.6:6^3",
    "4^4:3.4.6.4", "4^4:3^2.4.12", "4^4:4.8^2", "4^4:4.5.20", "4^4:4.6.12", "4^4:3.4.3.12",
    "3.4.6.4:3^2.4.12", "3.4.6.4:6^3", "3.4.6.4:4.8^2", "3.4.6.4:4.5.20", "3.4.6.4:3.4.3.12",
    "3^2.4.12:3.12^2", "3^2.4.12:3.4.3.12", "3^2.4.12:4.5.20", "3^2.4.12:4.6.12", "3^2.4.12:4.8^2",
    "4.8^2:4.5.20", "4.8^2:4.6.12", "4.8^2:3.4.3.12",
    "3.12^2:3.4.3.12", "6^3:4.6.12", "5^2.10:4.5.20",
)


@dataclass(frozen=True)
class TypeTable:
    set_S: frozenset[FaceSequence]
    set_A: frozenset[MapType]
    set_B: frozenset[MapType]
    listed_A: tuple[MapType, ...]  # raw transcription, 53 entries


def candidate_type_tables() -> TypeTable:
    listed_a = tuple(parse_type(t) for t in _UNREALIZABLE)
    set_b = frozenset(parse_type(t) for t in _REALIZABLE)
    return TypeTable(
        set_S=solve_zero_curvature(),
        set_A=frozenset(listed_a) - set_b,
        set_B=set_b,
        listed_A=listed_a,
    )
