"""HMAC-SHA512 and PBKDF2 tests against RFC 4231 and published vectors."""

import hashlib
import hmac as hmac_stdlib
import random

import pytest

from ethcold.kdf import hmac_sha256, hmac_sha512, pbkdf2_hmac_sha512

import vectors


def test_rfc4231_cases_1_through_7():
    for case in vectors.RFC4231:
        key = bytes.fromhex(case["key"])
        msg = bytes.fromhex(case["msg"])
        assert hmac_sha512(key, msg).hex() == case["mac"]


def test_exact_block_size_key():
    key = bytes(128)
    assert hmac_sha512(key, b"") == hmac_stdlib.new(key, b"", hashlib.sha512).digest()


def test_key_longer_than_block_is_prehashed():
    key = b"\xaa" * 200
    assert hmac_sha512(key, b"x") == hmac_stdlib.new(key, b"x", hashlib.sha512).digest()
    assert hmac_sha512(key, b"x") == hmac_sha512(hashlib.sha512(key).digest(), b"x")


def test_hmac_matches_stdlib_on_random_inputs():
    rng = random.Random(31)
    for _ in range(50):
        key = rng.randbytes(rng.randrange(0, 200))
        msg = rng.randbytes(rng.randrange(0, 300))
        assert hmac_sha512(key, msg) == hmac_stdlib.new(key, msg, hashlib.sha512).digest()
        assert hmac_sha256(key, msg) == hmac_stdlib.new(key, msg, hashlib.sha256).digest()


def test_pbkdf2_published_vectors():
    for case in vectors.PBKDF2:
        got = pbkdf2_hmac_sha512(bytes.fromhex(case["password"]),
                                 bytes.fromhex(case["salt"]),
                                 case["c"], case["dk_len"])
        assert got.hex() == case["dk"]


def test_pbkdf2_c1_is_single_hmac():
    dk = pbkdf2_hmac_sha512(b"password", b"salt", 1, 64)
    assert dk == hmac_sha512(b"password", b"salt" + b"\x00\x00\x00\x01")


def test_pbkdf2_dk32_is_prefix_of_dk64():
    full = pbkdf2_hmac_sha512(b"pw", b"na", 3, 64)
    assert pbkdf2_hmac_sha512(b"pw", b"na", 3, 32) == full[:32]


def test_pbkdf2_single_block_for_dk64():
    # dk_len 64 == PRF output size, so only block i=1 is computed
    dk = pbkdf2_hmac_sha512(b"p", b"s", 2, 64)
    assert len(dk) == 64
    u1 = hmac_sha512(b"p", b"s" + b"\x00\x00\x00\x01")
    u2 = hmac_sha512(b"p", u1)
    assert dk == bytes(a ^ b for a, b in zip(u1, u2))


def test_pbkdf2_multiblock():
    got = pbkdf2_hmac_sha512(b"pw", b"salt", 5, 100)
    assert got == hashlib.pbkdf2_hmac("sha512", b"pw", b"salt", 5, 100)


def test_pbkdf2_zero_iterations_rejected():
    with pytest.raises(ValueError):
        pbkdf2_hmac_sha512(b"p", b"s", 0, 64)
    with pytest.raises(ValueError):
        pbkdf2_hmac_sha512(b"p", b"s", 1, 0)


def test_pbkdf2_long_password_prehash():
    pw = b"q" * 200
    assert pbkdf2_hmac_sha512(pw, b"s", 2, 64) == \
        hashlib.pbkdf2_hmac("sha512", pw, b"s", 2, 64)
