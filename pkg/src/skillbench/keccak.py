"""Keccak-256: the original-padding variant used on EVM chains.

This is NOT the same function as hashlib's sha3_256: NIST SHA-3 changed the
domain-separation padding byte (0x06) after Keccak was already deployed
on-chain (0x01), so the two produce different digests for every input.
No suitable third-party implementation is assumed; the sponge below is
self-contained and verified against published Keccak-256 test vectors.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_RATE_BYTES = 136  # 1088-bit rate / 512-bit capacity

_ROUND_CONSTANTS = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)

# Rho rotation offsets for the flat lane index x + 5*y.
_ROTATIONS = (
    0, 1, 62, 28, 27,
    36, 44, 6, 55, 20,
    3, 10, 43, 25, 39,
    41, 45, 15, 21, 8,
    18, 2, 61, 56, 14,
)

# Pi step destination for the flat lane index i = x + 5*y: (x, y) -> (y, 2x + 3y).
_PI_DEST = tuple((i // 5) + 5 * ((2 * (i % 5) + 3 * (i // 5)) % 5) for i in range(25))


def _keccak_f(lanes: list[int]) -> None:
    """Apply the 24-round Keccak-f[1600] permutation in place."""
    rot = _ROTATIONS
    dest = _PI_DEST
    for rc in _ROUND_CONSTANTS:
        # Theta: column parities, then diffuse into every lane.
        c0 = lanes[0] ^ lanes[5] ^ lanes[10] ^ lanes[15] ^ lanes[20]
        c1 = lanes[1] ^ lanes[6] ^ lanes[11] ^ lanes[16] ^ lanes[21]
        c2 = lanes[2] ^ lanes[7] ^ lanes[12] ^ lanes[17] ^ lanes[22]
        c3 = lanes[3] ^ lanes[8] ^ lanes[13] ^ lanes[18] ^ lanes[23]
        c4 = lanes[4] ^ lanes[9] ^ lanes[14] ^ lanes[19] ^ lanes[24]
        d0 = c4 ^ (((c1 << 1) | (c1 >> 63)) & _MASK64)
        d1 = c0 ^ (((c2 << 1) | (c2 >> 63)) & _MASK64)
        d2 = c1 ^ (((c3 << 1) | (c3 >> 63)) & _MASK64)
        d3 = c2 ^ (((c4 << 1) | (c4 >> 63)) & _MASK64)
        d4 = c3 ^ (((c0 << 1) | (c0 >> 63)) & _MASK64)
        for y in range(0, 25, 5):
            lanes[y] ^= d0
            lanes[y + 1] ^= d1
            lanes[y + 2] ^= d2
            lanes[y + 3] ^= d3
            lanes[y + 4] ^= d4

        # Rho + Pi: rotate each lane and move it to its permuted slot.
        b = [0] * 25
        for i in range(25):
            r = rot[i]
            t = lanes[i]
            b[dest[i]] = ((t << r) | (t >> (64 - r))) & _MASK64 if r else t

        # Chi: nonlinear row mixing.
        for y in range(0, 25, 5):
            b0, b1, b2, b3, b4 = b[y:y + 5]
            lanes[y] = b0 ^ (~b1 & b2)
            lanes[y + 1] = b1 ^ (~b2 & b3)
            lanes[y + 2] = b2 ^ (~b3 & b4)
            lanes[y + 3] = b3 ^ (~b4 & b0)
            lanes[y + 4] = b4 ^ (~b0 & b1)

        # Iota.
        lanes[0] ^= rc


def keccak256(data: bytes) -> bytes:
    """Return the 32-byte Keccak-256 digest of ``data``."""
    lanes = [0] * 25
    pos = 0
    n = len(data)
    while n - pos >= _RATE_BYTES:
        for i in range(17):
            lanes[i] ^= int.from_bytes(data[pos + 8 * i:pos + 8 * i + 8], "little")
        _keccak_f(lanes)
        pos += _RATE_BYTES

    # Multirate padding: 0x01 start marker, zeros, 0x80 end marker
    # (collapsing to a single 0x81 when one byte of space remains).
    block = bytearray(data[pos:])
    block.append(0x01)
    block.extend(b"\x00" * (_RATE_BYTES - len(block)))
    block[-1] ^= 0x80
    for i in range(17):
        lanes[i] ^= int.from_bytes(block[8 * i:8 * i + 8], "little")
    _keccak_f(lanes)

    return b"".join(lanes[i].to_bytes(8, "little") for i in range(4))
