"""HMAC (RFC 2104) over the in-package hash cores, and PBKDF2 (RFC 8018).

Pad bytes follow RFC 2104: inner pad 0x36, outer pad 0x5c. Keys longer than
the block size are hashed first; shorter keys are zero-padded to the block.
"""

from .sha2 import Sha256, Sha512

_IPAD = 0x36
_OPAD = 0x5C


def _hmac(hash_cls, key: bytes, msg: bytes) -> bytes:
    block = hash_cls._block_size
    if len(key) > block:
        key = hash_cls(key).digest()
    key = key + b"\x00" * (block - len(key))
    inner = hash_cls(bytes(b ^ _IPAD for b in key))
    inner.update(msg)
    outer = hash_cls(bytes(b ^ _OPAD for b in key))
    outer.update(inner.digest())
    return outer.digest()


def hmac_sha512(key: bytes, msg: bytes) -> bytes:
    return _hmac(Sha512, key, msg)


def hmac_sha256(key: bytes, msg: bytes) -> bytes:
    return _hmac(Sha256, key, msg)


def pbkdf2_hmac_sha512(password: bytes, salt: bytes, iterations: int,
                       dk_len: int) -> bytes:
    """PBKDF2 with HMAC-SHA512 as the PRF.

    Block i chains `iterations` HMAC applications, seeded with
    salt || big-endian-32(i), XOR-accumulating every digest; blocks are
    concatenated and truncated to dk_len.
    """
    if iterations < 1:
        raise ValueError("iteration count must be >= 1")
    if dk_len < 1:
        raise ValueError("derived key length must be >= 1")

    # Half-done contexts with the padded key block already absorbed; each
    # HMAC in the loop is then two compressions instead of four.
    if len(password) > 128:
        password = Sha512(password).digest()
    key = password + b"\x00" * (128 - len(password))
    inner_base = Sha512(bytes(b ^ _IPAD for b in key))
    outer_base = Sha512(bytes(b ^ _OPAD for b in key))

    def prf(data):
        inner = inner_base.copy()
        inner.update(data)
        outer = outer_base.copy()
        outer.update(inner.digest())
        return outer.digest()

    blocks = []
    n_blocks = -(-dk_len // 64)
    for i in range(1, n_blocks + 1):
        u = prf(salt + i.to_bytes(4, "big"))
        acc = int.from_bytes(u, "big")
        for _ in range(iterations - 1):
            u = prf(u)
            acc ^= int.from_bytes(u, "big")
        blocks.append(acc.to_bytes(64, "big"))
    return b"".join(blocks)[:dk_len]
