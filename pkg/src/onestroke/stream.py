"""Seekable full-period pseudorandom streams over Z/2^w.

A stream repeatedly applies a single-cycle polynomial, so the first 2^w
outputs visit every w-bit value exactly once.  seek() moves by any
number of steps in polynomial time via the ladder instead of stepping.

Caveat for consumers of raw outputs: bit b of the state cycles with
period 2^(b+1), so low bits alternate quickly; take high bits, or hash
outputs, where that matters.
"""

from __future__ import annotations

import struct

from .classify import is_one_stroke
from .errors import NotOneStrokeError, StreamFormatError
from .ladder import build_ladder, jump
from .poly import Polynomial, check_width, eval_mod

_MAGIC = b"OSPS"
_VERSION = 1
_HEADER = struct.Struct("<4sHHI")
_COEFF_HEAD = struct.Struct("<IB")


class StreamState:
    """Mutable generator state: polynomial, width, current value, count.

    `current` is the last emitted value (the seed before any next());
    `emitted` counts outputs mod 2^w.  The ladder is built lazily on the
    first seek and never serialized.
    """

    def __init__(self, poly: Polynomial, seed: int, w: int):
        if not is_one_stroke(poly):
            raise NotOneStrokeError(
                f"polynomial {list(poly.coeffs)} does not drive a single "
                "cycle; stream would not have full period"
            )
        check_width(w)
        self.poly = poly
        self.width = w
        self.current = seed & ((1 << w) - 1)
        self.emitted = 0
        self._ladder = None

    @property
    def period(self) -> int:
        return 1 << self.width

    def next(self) -> int:
        self.current = eval_mod(self.poly, self.current, self.width)
        self.emitted = (self.emitted + 1) % self.period
        return self.current

    def __iter__(self):
        return self

    def __next__(self) -> int:
        return self.next()

    def seek(self, n: int) -> "StreamState":
        """Advance by n steps (n >= 0) without stepping n times."""
        if n < 0:
            raise ValueError(f"seek distance must be >= 0, got {n}")
        steps = n % self.period
        if steps:
            if self._ladder is None:
                self._ladder = build_ladder(self.poly, self.width)
            self.current = jump(self._ladder, self.current, steps)
        self.emitted = (self.emitted + n) % self.period
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, StreamState):
            return NotImplemented
        return (
            self.poly == other.poly
            and self.width == other.width
            and self.current == other.current
            and self.emitted == other.emitted
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"StreamState(poly={list(self.poly.coeffs)!r}, w={self.width}, "
            f"current={self.current}, emitted={self.emitted})"
        )

    def to_bytes(self) -> bytes:
        """Serialize: magic, version, width, then exact coefficients and
        the two w-bit counters, all little-endian."""
        out = [_HEADER.pack(_MAGIC, _VERSION, self.width, len(self.poly.coeffs))]
        for c in self.poly.coeffs:
            mag = abs(c)
            nbytes = (mag.bit_length() + 7) // 8
            out.append(_COEFF_HEAD.pack(nbytes, 1 if c < 0 else 0))
            out.append(mag.to_bytes(nbytes, "little"))
        value_len = (self.width + 7) // 8
        out.append(self.current.to_bytes(value_len, "little"))
        out.append(self.emitted.to_bytes(value_len, "little"))
        return b"".join(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "StreamState":
        """Rebuild a stream, re-validating the single-cycle conditions.

        Raises StreamFormatError for malformed or tampered bytes and
        NotOneStrokeError when the record parses but its polynomial no
        longer drives a single cycle.
        """
        data = bytes(data)
        if len(data) < _HEADER.size:
            raise StreamFormatError("record truncated before header ends")
        magic, version, w, ncoeffs = _HEADER.unpack_from(data, 0)
        if magic != _MAGIC:
            raise StreamFormatError(f"bad magic {magic!r}")
        if version != _VERSION:
            raise StreamFormatError(f"unsupported format version {version}")
        try:
            check_width(w)
        except ValueError as e:
            raise StreamFormatError(str(e)) from None
        if ncoeffs == 0:
            raise StreamFormatError("coefficient count must be >= 1")
        pos = _HEADER.size
        coeffs = []
        for _ in range(ncoeffs):
            if pos + _COEFF_HEAD.size > len(data):
                raise StreamFormatError("record truncated inside coefficient list")
            nbytes, sign = _COEFF_HEAD.unpack_from(data, pos)
            pos += _COEFF_HEAD.size
            if sign not in (0, 1):
                raise StreamFormatError(f"bad sign byte {sign}")
            if pos + nbytes > len(data):
                raise StreamFormatError("record truncated inside coefficient bytes")
            mag = int.from_bytes(data[pos : pos + nbytes], "little")
            pos += nbytes
            coeffs.append(-mag if sign else mag)
        value_len = (w + 7) // 8
        if pos + 2 * value_len != len(data):
            raise StreamFormatError("record length does not match header")
        current = int.from_bytes(data[pos : pos + value_len], "little")
        emitted = int.from_bytes(data[pos + value_len :], "little")
        if current >= 1 << w or emitted >= 1 << w:
            raise StreamFormatError("state value out of range for width")
        poly = Polynomial(coeffs)
        s = cls(poly, current, w)
        s.emitted = emitted
        return s
