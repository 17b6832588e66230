"""Braid words and the moves used to test invariance of their closures."""

from __future__ import annotations

import json
import random
from typing import Iterable

from .errors import IndexOutOfRange

__all__ = [
    "BraidWord",
    "parse",
    "writhe",
    "closure_permutation",
    "is_knot",
    "embed_union_trivial",
    "markov_conjugate",
    "markov_stabilize",
    "mirror",
    "random_braid",
    "random_knot_braid",
    "standard_knots",
]


class BraidWord:
    """A word in the Artin generators of B_n.

    Letter ``g > 0`` stands for sigma_g and ``g < 0`` for its inverse.  Words
    are never reduced; ``1 -1`` and the empty word are different objects.
    """

    __slots__ = ("strands", "letters")

    def __init__(self, strands: int, letters: Iterable[int] = ()):
        strands = int(strands)
        if strands < 1:
            raise IndexOutOfRange(f"a braid needs at least one strand, got {strands}")
        letters = tuple(int(g) for g in letters)
        for g in letters:
            if g == 0 or abs(g) > strands - 1:
                raise IndexOutOfRange(f"letter {g} is not a generator of B_{strands}")
        self.strands = strands
        self.letters = letters

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BraidWord)
            and self.strands == other.strands
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.strands, self.letters))

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {list(self.letters)})"

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise IndexOutOfRange("cannot compose braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, [-g for g in reversed(self.letters)])

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict | str) -> BraidWord:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["strands"], data["letters"])


def parse(text: str, strands: int) -> BraidWord:
    """Read a whitespace (or comma) separated list of signed generator indices."""
    tokens = text.replace(",", " ").split()
    try:
        letters = [int(t) for t in tokens]
    except ValueError as exc:
        raise IndexOutOfRange(f"not a braid word: {text!r}") from exc
    return BraidWord(strands, letters)


def writhe(b: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in b.letters)


def closure_permutation(b: BraidWord) -> tuple[int, ...]:
    """Where each strand ends up: entry ``i`` is the 1-based end position of
    the strand starting at position ``i + 1``."""
    pos = list(range(b.strands))  # pos[strand] = current position
    at = list(range(b.strands))  # at[position] = strand
    for g in b.letters:
        i = abs(g) - 1
        s, t = at[i], at[i + 1]
        at[i], at[i + 1] = t, s
        pos[s], pos[t] = i + 1, i
    return tuple(p + 1 for p in pos)


def is_knot(b: BraidWord) -> bool:
    perm = closure_permutation(b)
    seen, cur = 1, perm[0]
    while cur != 1:
        cur = perm[cur - 1]
        seen += 1
    return seen == b.strands


def embed_union_trivial(b: BraidWord) -> BraidWord:
    """The braid beta placed next to n straight strands, in B_2n."""
    return BraidWord(2 * b.strands, b.letters)


def markov_conjugate(b: BraidWord, g: int) -> BraidWord:
    return BraidWord(b.strands, (g,) + b.letters + (-g,))


def markov_stabilize(b: BraidWord, sign: int) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError("stabilisation sign must be +1 or -1")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


def mirror(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, [-g for g in b.letters])


def random_braid(n: int, length: int, seed: int) -> BraidWord:
    """A braid with uniformly chosen signed letters, reproducible from ``seed``."""
    rng = random.Random(seed)
    if n < 2:
        return BraidWord(n, [])
    letters = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]
    return BraidWord(n, letters)


def random_knot_braid(n: int, length: int, seed: int, max_tries: int = 10_000) -> BraidWord:
    """Like :func:`random_braid` but retries until the closure is a knot."""
    if n == 1:
        return BraidWord(1, [])
    rng = random.Random(seed)
    for _ in range(max_tries):
        b = random_braid(n, length, rng.randrange(2**32))
        if is_knot(b):
            return b
    raise ValueError(f"no knot braid found for n={n}, length={length}")


def standard_knots() -> dict[str, BraidWord]:
    """A few named knots used as fixed test and demonstration inputs."""
    return {
        "unknot": BraidWord(1, []),
        "trefoil": BraidWord(2, [1, 1, 1]),
        "figure-eight": BraidWord(3, [1, -2, 1, -2]),
        "cinquefoil": BraidWord(2, [1, 1, 1, 1, 1]),
        "5_2": BraidWord(3, [1, 1, 1, 2, -1, 2]),
    }

