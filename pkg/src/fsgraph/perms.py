"""Permutations of [n] in one-line notation.

A permutation is stored as the raw bytes of its one-line word (values
1..n), which makes instances compact, hashable, and ordered exactly by
the lexicographic order on one-line words.  That order is the canonical
order used for component representatives everywhere downstream.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import InvalidArgumentError

MAX_N = 20


class Permutation:
    """A bijection of [n], immutable and hashable."""

    __slots__ = ("word",)

    word: bytes

    def __init__(self, images: Iterable[int]):
        word = bytes(images)
        n = len(word)
        if n == 0 or n > MAX_N:
            raise InvalidArgumentError(f"permutation length must be in 1..{MAX_N}, got {n}")
        if sorted(word) != list(range(1, n + 1)):
            raise InvalidArgumentError(f"not a bijection of [{n}]: {list(word)}")
        self.word = word

    @classmethod
    def _from_word(cls, word: bytes) -> "Permutation":
        # Trusted fast path: callers guarantee `word` is a valid one-line word.
        p = object.__new__(cls)
        p.word = word
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1 or n > MAX_N:
            raise InvalidArgumentError(f"n must be in 1..{MAX_N}, got {n}")
        return cls._from_word(bytes(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse a one-line word like "53142" (n <= 9) or "5,3,1,4,2"."""
        text = text.strip()
        if "," in text:
            parts = text.split(",")
        else:
            if not text.isdigit():
                raise InvalidArgumentError(f"cannot parse permutation {text!r}")
            parts = list(text)
        try:
            images = [int(p) for p in parts]
        except ValueError as exc:
            raise InvalidArgumentError(f"cannot parse permutation {text!r}") from exc
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self.word)

    def __call__(self, i: int) -> int:
        """Value at position i (1-indexed)."""
        if not 1 <= i <= len(self.word):
            raise InvalidArgumentError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __lt__(self, other: "Permutation") -> bool:
        return self.word < other.word

    def __le__(self, other: "Permutation") -> bool:
        return self.word <= other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        if len(self.word) <= 9:
            return "".join(str(v) for v in self.word)
        return ",".join(str(v) for v in self.word)

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self after other: result(i) = self(other(i))."""
        if len(self.word) != len(other.word):
            raise InvalidArgumentError("cannot compose permutations of different lengths")
        w, o = self.word, other.word
        return Permutation._from_word(bytes(w[v - 1] for v in o))

    def inverse(self) -> "Permutation":
        out = bytearray(len(self.word))
        for pos, value in enumerate(self.word, start=1):
            out[value - 1] = pos
        return Permutation._from_word(bytes(out))

    def apply_transposition(self, i: int, j: int) -> "Permutation":
        """Swap the entries at positions i < j; equals compose with (i j)."""
        n = len(self.word)
        if not (1 <= i < j <= n):
            raise InvalidArgumentError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
        out = bytearray(self.word)
        out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
        return Permutation._from_word(bytes(out))

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd, by cycle counting."""
        n = len(self.word)
        seen = bytearray(n)
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            v = start
            while not seen[v]:
                seen[v] = 1
                v = self.word[v] - 1
        return 1 if (n - cycles) % 2 == 0 else -1

    def cyclic_shift(self) -> "Permutation":
        """Precompose with i -> i+1 (mod n): the word rotates left by one."""
        w = self.word
        return Permutation._from_word(w[1:] + w[:1])
