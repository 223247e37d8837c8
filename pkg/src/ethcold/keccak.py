"""Keccak-256 as used by Ethereum: original 0x01 domain padding, not SHA-3.

Sponge over Keccak-f[1600]: rate 1088 bits (136 bytes), capacity 512 bits,
24 rounds. State is 25 lanes of 64 bits, loaded little-endian, indexed
[x][y] with lane i at (i % 5, i // 5).
"""

_MASK = 0xffffffffffffffff

_ROUND_CONSTANTS = [
    0x0000000000000001, 0x0000000000008082, 0x800000000000808a, 0x8000000080008000,
    0x000000000000808b, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008a, 0x0000000000000088, 0x0000000080008009, 0x000000008000000a,
    0x000000008000808b, 0x800000000000008b, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800a, 0x800000008000000a,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
]

# rho rotation offsets, [x][y]
_ROTATION = [
    [0, 36, 3, 41, 18],
    [1, 44, 10, 45, 2],
    [62, 6, 43, 15, 61],
    [28, 55, 25, 21, 56],
    [27, 20, 39, 8, 14],
]

RATE_BYTES = 136


def _rol(v, n):
    return ((v << n) | (v >> (64 - n))) & _MASK


def keccak_f1600(a):
    """24-round permutation over a 5x5 lane matrix, in place."""
    for rc in _ROUND_CONSTANTS:
        # theta
        c = [a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rol(c[(x + 1) % 5], 1) for x in range(5)]
        for x in range(5):
            ax, dx = a[x], d[x]
            for y in range(5):
                ax[y] ^= dx
        # rho + pi
        b = [[0] * 5 for _ in range(5)]
        for x in range(5):
            for y in range(5):
                b[y][(2 * x + 3 * y) % 5] = _rol(a[x][y], _ROTATION[x][y])
        # chi
        for x in range(5):
            b0, b1, b2 = b[x], b[(x + 1) % 5], b[(x + 2) % 5]
            ax = a[x]
            for y in range(5):
                ax[y] = b0[y] ^ (~b1[y] & b2[y])
        # iota
        a[0][0] ^= rc
    return a


class Keccak256:
    """Incremental Keccak-256 sponge (absorb via update, squeeze via digest)."""

    digest_size = 32

    def __init__(self, data: bytes = b""):
        self._lanes = [[0] * 5 for _ in range(5)]
        self._buf = b""
        if data:
            self.update(data)

    def _absorb_block(self, block):
        lanes = self._lanes
        for i in range(RATE_BYTES // 8):
            lanes[i % 5][i // 5] ^= int.from_bytes(block[8 * i:8 * i + 8], "little")
        keccak_f1600(lanes)

    def update(self, data: bytes):
        buf = self._buf + data
        end = len(buf) - len(buf) % RATE_BYTES
        for off in range(0, end, RATE_BYTES):
            self._absorb_block(buf[off:off + RATE_BYTES])
        self._buf = buf[end:]
        return self

    def copy(self):
        c = Keccak256.__new__(Keccak256)
        c._lanes = [row[:] for row in self._lanes]
        c._buf = self._buf
        return c

    def digest(self) -> bytes:
        # pad10*1 with the legacy 0x01 domain byte (SHA-3 would use 0x06)
        final = self.copy()
        pad_len = RATE_BYTES - len(final._buf)
        if pad_len == 1:
            block = final._buf + b"\x81"
        else:
            block = final._buf + b"\x01" + b"\x00" * (pad_len - 2) + b"\x80"
        final._absorb_block(block)
        out = b"".join(
            final._lanes[i % 5][i // 5].to_bytes(8, "little")
            for i in range(RATE_BYTES // 8))
        return out[:32]

    def hexdigest(self) -> str:
        return self.digest().hex()


def keccak256(msg: bytes) -> bytes:
    return Keccak256(msg).digest()
