"""Synchronous games and their *-algebra ideals.

A synchronous game on n inputs and m outputs is a verification table
lam(v, w, a, b) in {0, 1}; answering (a, b) to the question pair (v, w)
loses exactly when the table reads 0.  Synchronicity means equal questions
force equal answers: lam(v, v, a, b) = 0 whenever a != b.

Each game yields an ideal in the free algebra on generators x[v,a]: the
generators are projector relations, one resolution of the identity per
input, and one monomial relation per denied answer pair.  The locally
commuting variant also makes generators commute across any two inputs
that constrain each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .freealg import Alphabet, Poly, generator

__all__ = [
    "SynchronousGame",
    "IdealSpec",
    "validate_synchronous",
    "symmetrize",
    "input_adjacency",
    "game_ideal",
    "lc_ideal",
    "game_to_text",
    "game_from_text",
]


@dataclass(frozen=True)
class SynchronousGame:
    """Dense verification table for a two-player game with equal question sets."""

    inputs: int
    outputs: int
    table: tuple[bool, ...]

    def __post_init__(self) -> None:
        if self.inputs < 1 or self.outputs < 1:
            raise ValueError("a game needs at least one input and one output")
        if len(self.table) != (self.inputs * self.outputs) ** 2:
            raise ValueError("table length does not match inputs and outputs")

    def _idx(self, v: int, w: int, a: int, b: int) -> int:
        return ((v * self.inputs + w) * self.outputs + a) * self.outputs + b

    def allows(self, v: int, w: int, a: int, b: int) -> bool:
        n, m = self.inputs, self.outputs
        if not (0 <= v < n and 0 <= w < n):
            raise ValueError(f"input out of range: ({v}, {w})")
        if not (0 <= a < m and 0 <= b < m):
            raise ValueError(f"output out of range: ({a}, {b})")
        return self.table[self._idx(v, w, a, b)]

    @classmethod
    def from_predicate(
        cls, inputs: int, outputs: int, allow: Callable[[int, int, int, int], bool]
    ) -> "SynchronousGame":
        table = tuple(
            bool(allow(v, w, a, b))
            for v in range(inputs)
            for w in range(inputs)
            for a in range(outputs)
            for b in range(outputs)
        )
        return cls(inputs, outputs, table)

    @classmethod
    def from_denials(
        cls, inputs: int, outputs: int, denials: Iterable[tuple[int, int, int, int]]
    ) -> "SynchronousGame":
        """All answers allowed except the listed quadruples and the synchronous
        diagonal lam(v, v, a, b) = 0 for a != b."""
        denied = set(denials)
        for v, w, a, b in denied:
            if v == w and a == b:
                raise ValueError(
                    f"denial ({v}, {w}, {a}, {b}) would break synchronicity"
                )
        return cls.from_predicate(
            inputs,
            outputs,
            lambda v, w, a, b: (a == b if v == w else True) and (v, w, a, b) not in denied,
        )

    def denials(self) -> list[tuple[int, int, int, int]]:
        """All denied quadruples, sorted."""
        out = []
        for v in range(self.inputs):
            for w in range(self.inputs):
                for a in range(self.outputs):
                    for b in range(self.outputs):
                        if not self.table[self._idx(v, w, a, b)]:
                            out.append((v, w, a, b))
        return out

    def is_symmetric(self) -> bool:
        """Whether swapping the players leaves the table unchanged."""
        return all(
            self.allows(v, w, a, b) == self.allows(w, v, b, a)
            for v in range(self.inputs)
            for w in range(self.inputs)
            for a in range(self.outputs)
            for b in range(self.outputs)
        )

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.inputs, self.outputs)


def validate_synchronous(game: SynchronousGame) -> list[tuple[int, int, int]]:
    """Synchronicity violations as triples (v, a, b): either a != b and the
    table allows (a, b) on the doubled question (v, v), or a == b and the
    table denies it."""
    bad = []
    for v in range(game.inputs):
        for a in range(game.outputs):
            for b in range(game.outputs):
                if game.allows(v, v, a, b) != (a == b):
                    bad.append((v, a, b))
    return bad


def symmetrize(game: SynchronousGame) -> SynchronousGame:
    """Intersect the table with its player swap; a fixed point of itself."""
    return SynchronousGame.from_predicate(
        game.inputs,
        game.outputs,
        lambda v, w, a, b: game.allows(v, w, a, b) and game.allows(w, v, b, a),
    )


def input_adjacency(game: SynchronousGame) -> frozenset[tuple[int, int]]:
    """Ordered pairs of distinct inputs that constrain each other.

    (v, w) is present iff some answer pair on (v, w) is denied; for a
    symmetric game the relation is itself symmetric.
    """
    pairs = set()
    for v in range(game.inputs):
        for w in range(game.inputs):
            if v == w:
                continue
            for a in range(game.outputs):
                for b in range(game.outputs):
                    if not game.allows(v, w, a, b):
                        pairs.add((v, w))
                        break
                else:
                    continue
                break
    return frozenset(pairs)


@dataclass(frozen=True)
class IdealSpec:
    """A generating set for a game ideal, in a fixed deterministic order."""

    inputs: int
    outputs: int
    flavor: str  # "plain" | "locally-commuting"
    generators: tuple[Poly, ...]

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.inputs, self.outputs)


def _plain_generators(game: SynchronousGame) -> list[Poly]:
    a = game.alphabet
    gens: list[Poly] = []
    for v in range(game.inputs):
        for c in range(game.outputs):
            x = generator(a, v, c)
            gens.append(x * x - x)
    for v in range(game.inputs):
        s = Poly.one()
        for c in range(game.outputs):
            s = s - generator(a, v, c)
        gens.append(s)
    for v, w, c, d in game.denials():
        gens.append(generator(a, v, c) * generator(a, w, d))
    return gens


def game_ideal(game: SynchronousGame) -> IdealSpec:
    """Generators of the game ideal: idempotents, resolutions of the
    identity, and one quadratic monomial per denied answer pair."""
    if not game.is_symmetric():
        raise ValueError(
            "game table is not symmetric under player swap; apply symmetrize first"
        )
    return IdealSpec(game.inputs, game.outputs, "plain", tuple(_plain_generators(game)))


def lc_ideal(game: SynchronousGame) -> IdealSpec:
    """Locally commuting variant: the plain generators plus commutators
    [x[v,a], x[w,b]] for every pair of inputs that constrain each other."""
    if not game.is_symmetric():
        raise ValueError(
            "game table is not symmetric under player swap; apply symmetrize first"
        )
    alpha = game.alphabet
    gens = _plain_generators(game)
    adj = input_adjacency(game)
    for v in range(game.inputs):
        for w in range(v + 1, game.inputs):
            if (v, w) not in adj:
                continue
            for a in range(game.outputs):
                for b in range(game.outputs):
                    xv = generator(alpha, v, a)
                    xw = generator(alpha, w, b)
                    gens.append(xv * xw - xw * xv)
    return IdealSpec(game.inputs, game.outputs, "locally-commuting", tuple(gens))


# --- text format ---------------------------------------------------------------


def game_to_text(game: SynchronousGame) -> str:
    """Serialize as a header plus the off-diagonal denial list.

    The format fixes the diagonal to the synchronous one, so tables with a
    nonstandard diagonal are rejected rather than silently altered.
    """
    for v in range(game.inputs):
        for a in range(game.outputs):
            for b in range(game.outputs):
                if game.allows(v, v, a, b) != (a == b):
                    raise ValueError(
                        "text format requires the standard synchronous diagonal"
                    )
    lines = [f"game {game.inputs} {game.outputs}"]
    for v, w, a, b in game.denials():
        if v != w:
            lines.append(f"deny {v} {w} {a} {b}")
    return "\n".join(lines) + "\n"


def game_from_text(text: str) -> SynchronousGame:
    header: tuple[int, int] | None = None
    denials: list[tuple[int, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "game":
            if header is not None:
                raise ValueError(f"line {lineno}: duplicate game header")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: game header needs two integers")
            header = (int(parts[1]), int(parts[2]))
        elif parts[0] == "deny":
            if header is None:
                raise ValueError(f"line {lineno}: deny before game header")
            if len(parts) != 5:
                raise ValueError(f"line {lineno}: deny needs four integers")
            v, w, a, b = (int(t) for t in parts[1:])
            n, m = header
            if not (0 <= v < n and 0 <= w < n and 0 <= a < m and 0 <= b < m):
                raise ValueError(f"line {lineno}: deny entry out of range")
            if v == w:
                raise ValueError(f"line {lineno}: diagonal denials are implied")
            denials.append((v, w, a, b))
        else:
            raise ValueError(f"line {lineno}: unrecognized directive {parts[0]!r}")
    if header is None:
        raise ValueError("missing game header")
    return SynchronousGame.from_denials(header[0], header[1], denials)
