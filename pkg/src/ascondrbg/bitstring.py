"""Exact bit strings with a big-endian unsigned-integer view.

Every DRBG algorithm in this package moves data around as ordered bit
sequences whose lengths are not always byte multiples (seed state is 440
bits, callers may request any number of output bits). BitString stores the
bits MSB-first and keeps the length explicit, so truncation, concatenation
and fixed-width modular arithmetic are exact.
"""

from __future__ import annotations


class BitString:
    """Immutable MSB-first bit sequence of explicit length.

    The integer view reads the bits MSB-first as an unsigned big-endian
    integer; encoding that integer back at the same width is the identity.
    The empty string (length 0) is the identity for concatenation.
    """

    __slots__ = ("_value", "_length")

    def __init__(self, value: int, length: int):
        if length < 0:
            raise ValueError("bit length must be non-negative")
        if value < 0:
            raise ValueError("value must be non-negative")
        if value >> length:
            raise ValueError(f"value does not fit in {length} bits")
        self._value = value
        self._length = length

    # --- constructors ---

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        return cls(int.from_bytes(data, "big"), 8 * len(data))

    @classmethod
    def from_hex(cls, text: str) -> "BitString":
        return cls.from_bytes(bytes.fromhex(text))

    @classmethod
    def zeros(cls, length: int) -> "BitString":
        return cls(0, length)

    # --- views ---

    def to_int(self) -> int:
        return self._value

    def to_bytes(self) -> bytes:
        if self._length % 8:
            raise ValueError(f"{self._length}-bit string is not whole bytes")
        return self._value.to_bytes(self._length // 8, "big")

    def to_hex(self) -> str:
        """Canonical lowercase hex; defined for whole-byte strings only."""
        return self.to_bytes().hex()

    def to_bits(self) -> str:
        return format(self._value, f"0{self._length}b") if self._length else ""

    def __len__(self) -> int:
        return self._length

    # --- bit-level operations ---

    def leftmost(self, n: int) -> "BitString":
        """The first (most significant) n bits."""
        if not 0 <= n <= self._length:
            raise ValueError(f"cannot take {n} leftmost bits of {self._length}")
        return BitString(self._value >> (self._length - n), n)

    def rightmost(self, n: int) -> "BitString":
        """The last (least significant) n bits."""
        if not 0 <= n <= self._length:
            raise ValueError(f"cannot take {n} rightmost bits of {self._length}")
        return BitString(self._value & ((1 << n) - 1), n)

    def __add__(self, other: "BitString") -> "BitString":
        """Concatenation; self supplies the most significant bits."""
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString((self._value << other._length) | other._value,
                         self._length + other._length)

    def __xor__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        if self._length != other._length:
            raise ValueError("XOR requires equal lengths "
                             f"({self._length} vs {other._length})")
        return BitString(self._value ^ other._value, self._length)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self._value == other._value and self._length == other._length

    def __hash__(self) -> int:
        return hash((self._value, self._length))

    def __repr__(self) -> str:
        if self._length % 8 == 0:
            return f"BitString.from_hex('{self.to_hex()}')"
        return f"BitString(0b{self.to_bits()}, {self._length})"


EMPTY = BitString(0, 0)


def int_encode(value: int, width: int) -> BitString:
    """Fixed-width big-endian encoding of a non-negative integer."""
    if value < 0:
        raise ValueError("value must be non-negative")
    if value >> width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return BitString(value, width)


def int_decode(s: BitString) -> int:
    return s.to_int()


def add_mod_pow2(a: BitString | int, b: BitString | int, width: int) -> BitString:
    """(a + b) mod 2**width, encoded in exactly `width` bits.

    Operands shorter than `width` are zero-extended; integer operands are
    accepted for counters mixed into wide sums.
    """
    av = a if isinstance(a, int) else a.to_int()
    bv = b if isinstance(b, int) else b.to_int()
    return BitString((av + bv) & ((1 << width) - 1), width)
