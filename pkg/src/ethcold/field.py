"""Modular arithmetic mod the secp256k1 field prime and group order.

Multiplication is bit-serial: shift the accumulator, reduce, conditionally
add the multiplicand, reduce again. The loop always runs ``Modulus.width``
iterations (256 for the secp256k1 moduli) no matter what the operands look
like, so the multiplier's operation count is independent of its inputs.
Reduction after every step is a single conditional subtract, so values
never grow past one extra bit.

Inversion is the binary extended-Euclid method: only shifts, compares and
subtractions. Its trip count IS data-dependent; the wallet runs it once per
scalar multiplication, after the ladder, never per key bit.
"""

from dataclasses import dataclass

# SEC2 secp256k1 parameters: field prime and group order.
SECP256K1_P = 0xfffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f
SECP256K1_N = 0xfffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141

# When set (a list), every multiplication appends its loop trip count.
# Installed by tests via count_mul_iterations(); None in normal operation.
_mul_iteration_sink = None


class count_mul_iterations:
    """Context manager collecting shift-and-add loop trip counts.

    with count_mul_iterations() as counts:
        m.mul(a, b)
    assert counts == [m.width]
    """

    def __enter__(self):
        global _mul_iteration_sink
        self._prev = _mul_iteration_sink
        _mul_iteration_sink = []
        return _mul_iteration_sink

    def __exit__(self, *exc):
        global _mul_iteration_sink
        _mul_iteration_sink = self._prev
        return False


class Modulus:
    """An odd modulus > 2 together with its fixed multiplier width.

    ``width`` is the number of shift-and-add iterations used for every
    multiplication under this modulus. It is a property of the datapath
    (256 bits for the secp256k1 moduli), never of operand values.
    """

    __slots__ = ("value", "width", "_fmt")

    def __init__(self, value: int, width: int = 256):
        if value <= 2:
            raise ValueError("modulus must be > 2")
        if value % 2 == 0:
            raise ValueError("modulus must be odd")
        if value.bit_length() > width:
            raise ValueError("modulus does not fit the multiplier width")
        self.value = value
        self.width = width
        self._fmt = "0%db" % width

    def __repr__(self):
        return "Modulus(0x%x, width=%d)" % (self.value, self.width)

    def __eq__(self, other):
        return (isinstance(other, Modulus)
                and self.value == other.value and self.width == other.width)

    def __hash__(self):
        return hash((self.value, self.width))

    def reduce(self, x: int) -> int:
        return x % self.value

    def add(self, a: int, b: int) -> int:
        s = a + b
        return s - self.value if s >= self.value else s

    def sub(self, a: int, b: int) -> int:
        d = a - b
        return d + self.value if d < 0 else d

    def mul(self, a: int, b: int) -> int:
        """Shift-and-add product, MSB first, reducing after every step.

        Inputs must already be canonical residues in [0, m).
        """
        m = self.value
        acc = 0
        steps = 0
        for bit in format(b, self._fmt):
            steps += 1
            acc += acc
            if acc >= m:
                acc -= m
            if bit == "1":
                acc += a
                if acc >= m:
                    acc -= m
        if _mul_iteration_sink is not None:
            _mul_iteration_sink.append(steps)
        return acc

    def inv(self, z: int) -> int:
        """Multiplicative inverse by the binary extended-Euclid method.

        Maintains x*z = u (mod m) and y*z = v (mod m); when the gcd lands
        in v (u hits zero) the inverse is y. The final one-line select
        keeps the classical u==1 early-exit form of the algorithm.
        """
        if z == 0:
            raise ZeroDivisionError("0 has no modular inverse")
        p = self.value
        u, v, x, y = z, p, 1, 0
        while u != 0:
            while u & 1 == 0:
                u >>= 1
                x = x >> 1 if x & 1 == 0 else (x + p) >> 1
            while v & 1 == 0:
                v >>= 1
                y = y >> 1 if y & 1 == 0 else (y + p) >> 1
            if u >= v:
                u -= v
                x = x - y if x > y else x + p - y
            else:
                v -= u
                y = y - x if y > x else y + p - x
        return x % p if u == 1 else y % p


# Shared modulus instances for the whole wallet.
FIELD_P = Modulus(SECP256K1_P)
ORDER_N = Modulus(SECP256K1_N)


@dataclass(frozen=True)
class Residue:
    """A canonical residue: 0 <= value < modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise ValueError("residue out of range: %r" % self.value)


def _require_same_modulus(a: Residue, b: Residue) -> Modulus:
    if a.modulus != b.modulus:
        raise ValueError("mixed moduli: %r vs %r" % (a.modulus, b.modulus))
    return a.modulus


def add_mod(a: Residue, b: Residue) -> Residue:
    m = _require_same_modulus(a, b)
    return Residue(m.add(a.value, b.value), m)


def sub_mod(a: Residue, b: Residue) -> Residue:
    m = _require_same_modulus(a, b)
    return Residue(m.sub(a.value, b.value), m)


def mul_mod(a: Residue, b: Residue) -> Residue:
    m = _require_same_modulus(a, b)
    return Residue(m.mul(a.value, b.value), m)


def inv_mod(z: Residue) -> Residue:
    return Residue(z.modulus.inv(z.value), z.modulus)
