from __future__ import annotations

"""Binary chromosome: one candidate feature subset.

bit i is True  -> feature i is kept
bit i is False -> feature i is dropped

Bits are stored packed (8 per byte, MSB first, zero padded) because the
problem dimension reaches tens of thousands and pairwise Hamming distance over
a whole population is computed every generation. Popcount and XOR work on the
packed bytes directly.

A Genome never changes after construction; variation operators return new ones."""

from typing import Iterable, Sequence

import numpy as np

from featsel.core.utils.errors import DimensionError


class Genome:
    """
    Immutable fixed-length bit vector.

    Equality and hashing use the packed bytes, so genomes can be used as
    dictionary keys (fitness cache) and in sets (duplicate elimination).
    """

    __slots__ = ("_packed", "_length", "_hash")

    def __init__(self, packed: np.ndarray, length: int) -> None:
        if length < 0:
            raise DimensionError("Genome length must be non-negative.")
        packed = np.ascontiguousarray(packed, dtype=np.uint8)
        if packed.ndim != 1 or packed.size != (length + 7) // 8:
            raise DimensionError(
                f"Packed buffer of {packed.size} bytes does not hold {length} bits."
            )
        packed = packed.copy()
        packed.setflags(write=False)
        self._packed = packed
        self._length = length
        self._hash: int | None = None

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_bits(cls, bits: Sequence[bool] | np.ndarray) -> "Genome":
        arr = np.asarray(bits, dtype=bool)
        if arr.ndim != 1:
            raise DimensionError("Genome bits must be one-dimensional.")
        return cls(np.packbits(arr), arr.size)

    @classmethod
    def from_string(cls, text: str) -> "Genome":
        """Build from a '0'/'1' string, e.g. Genome.from_string("10110")."""
        if any(ch not in "01" for ch in text):
            raise ValueError(f"Not a bit string: {text!r}")
        return cls.from_bits([ch == "1" for ch in text])

    @classmethod
    def from_indices(cls, indices: Iterable[int], length: int) -> "Genome":
        bits = np.zeros(length, dtype=bool)
        idx = np.fromiter(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= length):
            raise DimensionError(f"Feature index out of range for length {length}.")
        bits[idx] = True
        return cls.from_bits(bits)

    @classmethod
    def from_hex(cls, text: str, length: int) -> "Genome":
        return cls(np.frombuffer(bytes.fromhex(text), dtype=np.uint8), length)

    @classmethod
    def zeros(cls, length: int) -> "Genome":
        return cls.from_bits(np.zeros(length, dtype=bool))

    @classmethod
    def ones(cls, length: int) -> "Genome":
        return cls.from_bits(np.ones(length, dtype=bool))

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @property
    def packed(self) -> np.ndarray:
        """Read-only packed bytes."""
        return self._packed

    @property
    def bits(self) -> np.ndarray:
        """Unpacked boolean mask of length d (a fresh array)."""
        return np.unpackbits(self._packed, count=self._length).astype(bool)

    @property
    def key(self) -> bytes:
        return self._packed.tobytes()

    def selected_indices(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def popcount(self) -> int:
        # padding bits are always zero, so whole-byte counting is exact
        return int(np.bitwise_count(self._packed).sum())

    def to_hex(self) -> str:
        return self._packed.tobytes().hex()

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    # ------------------------------------------------------------------
    # Bit algebra
    # ------------------------------------------------------------------

    def xor(self, other: "Genome") -> "Genome":
        _check_same_length(self, other)
        return Genome(np.bitwise_xor(self._packed, other._packed), self._length)

    def complement(self) -> "Genome":
        return Genome.from_bits(~self.bits)

    def __xor__(self, other: "Genome") -> "Genome":
        return self.xor(other)

    def __invert__(self) -> "Genome":
        return self.complement()

    def __len__(self) -> int:
        return self._length

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Genome):
            return NotImplemented
        return self._length == other._length and self.key == other.key

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._length, self.key))
        return self._hash

    def __repr__(self) -> str:
        if self._length <= 64:
            return f"Genome('{self.to_string()}')"
        return f"Genome(d={self._length}, popcount={self.popcount()})"


def _check_same_length(a: Genome, b: Genome) -> None:
    if len(a) != len(b):
        raise DimensionError(f"Genome lengths differ: {len(a)} != {len(b)}.")


def popcount(g: Genome) -> int:
    """Number of selected features."""
    return g.popcount()


def hamming_distance(a: Genome, b: Genome) -> int:
    """
    Number of positions where a and b differ.

    Raises:
        DimensionError: if the genomes have different lengths.
    """
    _check_same_length(a, b)
    return int(np.bitwise_count(np.bitwise_xor(a.packed, b.packed)).sum())


def stack_packed(genomes: Sequence[Genome]) -> np.ndarray:
    """
    Stack the packed bytes of same-length genomes into a (n, ceil(d/8)) uint8 matrix.
    """
    if not genomes:
        return np.zeros((0, 0), dtype=np.uint8)
    d = len(genomes[0])
    for g in genomes:
        if len(g) != d:
            raise DimensionError(f"Genome lengths differ: {len(g)} != {d}.")
    return np.vstack([g.packed for g in genomes])


def popcounts(genomes: Sequence[Genome]) -> np.ndarray:
    """Popcount of every genome as an int64 array."""
    if not genomes:
        return np.zeros(0, dtype=np.int64)
    return np.bitwise_count(stack_packed(genomes)).sum(axis=1).astype(np.int64)
