"""Hierarchical key derivation: master key, CKD, and BIP-44 paths.

The master node is HMAC-SHA512("Bitcoin seed", seed): the left 256 bits
are the private key, the right 256 the chain code. Child derivation keys
HMAC with the parent chain code over either 0x00 || parent key (hardened,
index >= 2^31) or the compressed parent public key (normal), concatenated
with the 4-byte index; the child key is (left_half + parent_key) mod n.

Paths print as m/44'/60'/0'/0/i with an apostrophe marking hardened
indices. A PathCache stores derived prefix nodes so sibling address
indices cost exactly one derivation after the first.
"""

from dataclasses import dataclass

from .curve import AffinePoint, scalar_mul_ladder, SECP256K1
from .errors import DerivationError, InvalidKeyError, ValidationError
from .field import SECP256K1_N
from .kdf import hmac_sha512
from .u256 import to_bytes32

HARDENED = 1 << 31

MASTER_HMAC_KEY = b"Bitcoin seed"


@dataclass(frozen=True)
class ExtendedKey:
    key: int
    chain_code: bytes
    depth: int = 0
    child_index: int = 0

    def __post_init__(self):
        if not 1 <= self.key < SECP256K1_N:
            raise InvalidKeyError("private key outside [1, n-1]")
        if len(self.chain_code) != 32:
            raise ValueError("chain code must be 32 bytes")


def master_from_seed(seed: bytes) -> ExtendedKey:
    digest = hmac_sha512(MASTER_HMAC_KEY, seed)
    key = int.from_bytes(digest[:32], "big")
    if key == 0 or key >= SECP256K1_N:
        raise DerivationError("seed produces an out-of-range master key")
    return ExtendedKey(key=key, chain_code=digest[32:], depth=0, child_index=0)


def public_point(key: int) -> AffinePoint:
    """key*G via the balanced ladder."""
    return scalar_mul_ladder(key, SECP256K1)


def serialize_pubkey(pt: AffinePoint) -> bytes:
    """33-byte compressed form: 02/03 parity prefix plus big-endian x."""
    if pt.infinity:
        raise InvalidKeyError("cannot serialize the point at infinity")
    prefix = b"\x03" if pt.y & 1 else b"\x02"
    return prefix + to_bytes32(pt.x)


def ckd_priv(parent: ExtendedKey, index: int) -> ExtendedKey:
    """One child derivation step."""
    if not 0 <= index < 1 << 32:
        raise ValueError("child index must fit in 32 bits")
    if index >= HARDENED:
        data = b"\x00" + to_bytes32(parent.key)
    else:
        data = serialize_pubkey(public_point(parent.key))
    digest = hmac_sha512(parent.chain_code, data + index.to_bytes(4, "big"))
    left = int.from_bytes(digest[:32], "big")
    if left >= SECP256K1_N:
        raise DerivationError("derivation left half >= n; skip this index")
    child = (left + parent.key) % SECP256K1_N
    if child == 0:
        raise DerivationError("derived key is zero; skip this index")
    return ExtendedKey(key=child, chain_code=digest[32:],
                       depth=parent.depth + 1, child_index=index)


def parse_path(path: str) -> tuple:
    """Parse m/44'/60'/0'/0/i into a tuple of 32-bit indices."""
    parts = path.strip().split("/")
    if not parts or parts[0] != "m":
        raise ValidationError("derivation path must start with 'm'")
    out = []
    for part in parts[1:]:
        hardened = part.endswith("'") or part.endswith("h")
        digits = part[:-1] if hardened else part
        if not digits.isdigit():
            raise ValidationError("bad path element %r" % part)
        value = int(digits)
        if value >= HARDENED:
            raise ValidationError("path index %d out of range" % value)
        out.append(value + HARDENED if hardened else value)
    return tuple(out)


def format_path(path) -> str:
    parts = ["m"]
    for idx in path:
        if idx >= HARDENED:
            parts.append("%d'" % (idx - HARDENED))
        else:
            parts.append("%d" % idx)
    return "/".join(parts)


# m / purpose' / coin_type' / account' / change for Ethereum
ETH_BASE_PATH = parse_path("m/44'/60'/0'/0")


class PathCache:
    """Caches every derived prefix node; counts CKD invocations.

    Single-writer: derive_path mutates the cache, so interleave one
    derivation at a time per cache instance.
    """

    def __init__(self):
        self._nodes = {}
        self.ckd_calls = 0

    def lookup(self, path: tuple):
        """Deepest cached ancestor of ``path``: (node, depth covered)."""
        for end in range(len(path), 0, -1):
            node = self._nodes.get(path[:end])
            if node is not None:
                return node, end
        return None, 0

    def store(self, path: tuple, node: ExtendedKey):
        self._nodes[path] = node


def derive_path(master: ExtendedKey, path, cache: PathCache = None
                ) -> ExtendedKey:
    """Fold ckd_priv along a path, reusing cached prefix nodes."""
    path = tuple(path)
    node, done = (None, 0)
    if cache is not None:
        node, done = cache.lookup(path)
    if node is None:
        node = master
    for end in range(done + 1, len(path) + 1):
        node = ckd_priv(node, path[end - 1])
        if cache is not None:
            cache.ckd_calls += 1
            cache.store(path[:end], node)
    return node
