from typing import Iterable, List, Tuple

import numpy as np

from primal.common.errors import InvalidParameterError


def mask_to_bits(mask: np.ndarray) -> int:
    if not mask.size:
        return 0

    return int.from_bytes(np.packbits(mask.astype(bool), bitorder='little').tobytes(), 'little')


def bits_to_mask(bits: int, size: int) -> np.ndarray:
    if size == 0:
        return np.zeros(0, dtype=bool)

    raw = np.frombuffer(bits.to_bytes((size + 7) // 8, 'little'), dtype=np.uint8)
    return np.unpackbits(raw, bitorder='little')[:size].astype(bool)


def popcount(bits: int) -> int:
    return bin(bits).count('1')


class SubSet:
    """
    Set of element indices of a ring or a module, stored as a fixed-width bit vector.
    """

    __slots__ = ('size', 'bits', '_indices')

    def __init__(self, size: int, bits: int = 0):
        if size < 0:
            raise InvalidParameterError(f'Invalid universe size: {size}')

        if bits < 0 or bits >> size:
            raise InvalidParameterError(f'Bit vector wider than the universe ({size})')

        self.size = size
        self.bits = bits
        self._indices = None

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> "SubSet":
        bits = 0
        for i in indices:
            i = int(i)
            if i < 0 or i >= size:
                raise InvalidParameterError(f'Element {i} out of range [0, {size})')

            bits |= 1 << i

        return cls(size, bits)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "SubSet":
        return cls(int(mask.shape[0]), mask_to_bits(mask))

    @classmethod
    def from_array(cls, size: int, values: np.ndarray) -> "SubSet":
        mask = np.zeros(size, dtype=bool)
        mask[np.asarray(values, dtype=np.intp).ravel()] = True
        return cls(size, mask_to_bits(mask))

    @classmethod
    def full(cls, size: int) -> "SubSet":
        return cls(size, (1 << size) - 1)

    @classmethod
    def empty(cls, size: int) -> "SubSet":
        return cls(size, 0)

    def mask(self) -> np.ndarray:
        return bits_to_mask(self.bits, self.size)

    def indices(self) -> np.ndarray:
        if self._indices is None:
            self._indices = np.flatnonzero(self.mask())

        return self._indices

    def to_list(self) -> List[int]:
        return [int(i) for i in self.indices()]

    def is_full(self) -> bool:
        return self.bits == (1 << self.size) - 1

    def issubset(self, other: "SubSet") -> bool:
        self._check_universe(other)
        return self.bits & ~other.bits == 0

    def union(self, other: "SubSet") -> "SubSet":
        self._check_universe(other)
        return SubSet(self.size, self.bits | other.bits)

    def intersection(self, other: "SubSet") -> "SubSet":
        self._check_universe(other)
        return SubSet(self.size, self.bits & other.bits)

    def difference(self, other: "SubSet") -> "SubSet":
        self._check_universe(other)
        return SubSet(self.size, self.bits & ~other.bits)

    def first(self) -> int:
        """
        :return: the smallest member, or -1 for the empty set
        """
        return (self.bits & -self.bits).bit_length() - 1

    def sort_key(self) -> Tuple[int, int]:
        return popcount(self.bits), self.bits

    def _check_universe(self, other: "SubSet"):
        if self.size != other.size:
            raise InvalidParameterError(f'Universe mismatch: {self.size} != {other.size}')

    def to_dict(self) -> List[int]:
        return self.to_list()

    def __contains__(self, item: int) -> bool:
        return 0 <= item < self.size and bool(self.bits >> item & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self):
        return iter(self.to_list())

    def __eq__(self, other):
        return isinstance(other, SubSet) and self.size == other.size and self.bits == other.bits

    def __hash__(self):
        return hash((self.size, self.bits))

    def __getstate__(self):
        return self.size, self.bits

    def __setstate__(self, state):
        self.size, self.bits = state
        self._indices = None

    def __repr__(self):
        return '{' + ','.join(str(i) for i in self.to_list()) + '}'
