"""Ethereum addresses: Keccak-256 of the public key, EIP-55 mixed case.

The raw address is the last 20 bytes of keccak256(x || y). The checksum
rendering hashes the 40-character lowercase hex (no 0x) and uppercases
hex letter i exactly when nibble i of that digest is greater than 7;
uppercasing is the fixed ASCII offset (lowercase letter - 0x20).
"""

from .curve import AffinePoint
from .errors import InvalidKeyError
from .keccak import keccak256
from .u256 import to_bytes32

_HEX_LETTERS = frozenset("abcdef")


def pubkey_to_address(pt: AffinePoint) -> bytes:
    """20-byte address from an uncompressed public key point."""
    if pt.infinity:
        raise InvalidKeyError("the point at infinity has no address")
    return keccak256(to_bytes32(pt.x) + to_bytes32(pt.y))[-20:]


def to_checksum_address(address: bytes) -> str:
    """EIP-55 mixed-case rendering, 0x-prefixed."""
    if len(address) != 20:
        raise ValueError("address must be 20 bytes")
    hexaddr = address.hex()
    digest = keccak256(hexaddr.encode("ascii")).hex()
    chars = []
    for c, d in zip(hexaddr, digest):
        if c in _HEX_LETTERS and int(d, 16) > 7:
            c = chr(ord(c) - 0x20)
        chars.append(c)
    return "0x" + "".join(chars)


def address_from_checksummed(text: str) -> bytes:
    """Parse a 0x address string back to 20 bytes (case-insensitive)."""
    s = text[2:] if text[:2] in ("0x", "0X") else text
    if len(s) != 40:
        raise ValueError("address must be 40 hex characters")
    return bytes.fromhex(s.lower())
