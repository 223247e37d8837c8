"""secp256k1 group arithmetic on projective points with complete addition.

Point addition is a single branch-free schedule of 33 field operations
(valid for every input pair, including doubling, inverses and the
identity); doubling is the same schedule applied to (P, P). Scalar
multiplication is a fixed-length Montgomery ladder: every iteration
performs one addition and two doublings, the second doubling landing in a
temporary register so both key-bit branches exercise the same operation
set. The classic two-operation ladder is kept as a side-channel baseline.

The identity is (0 : 1 : 0). One binary inversion at the very end maps
(X : Y : Z) to affine (X/Z, Y/Z).
"""

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import InvalidScalarError
from .field import FIELD_P, Modulus, ORDER_N


class ProjectivePoint(NamedTuple):
    x: int
    y: int
    z: int


class AffinePoint(NamedTuple):
    x: int
    y: int
    infinity: bool = False


IDENTITY = ProjectivePoint(0, 1, 0)


@dataclass(frozen=True)
class CurveParams:
    """Short Weierstrass curve y^2 = x^3 + b over GF(p), group order n."""

    p: Modulus
    n: Modulus
    b: int
    gx: int
    gy: int
    b3: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "b3", 3 * self.b % self.p.value)
        if (self.gy * self.gy - self.gx ** 3 - self.b) % self.p.value != 0:
            raise ValueError("generator is not on the curve")

    @property
    def generator(self) -> ProjectivePoint:
        return ProjectivePoint(self.gx, self.gy, 1)

    @property
    def scalar_bits(self) -> int:
        """Fixed ladder width: every accepted scalar is padded to this."""
        return self.n.value.bit_length()


SECP256K1 = CurveParams(
    p=FIELD_P,
    n=ORDER_N,
    b=7,
    gx=0x79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798,
    gy=0x483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8,
)


def point_add_complete(P: ProjectivePoint, Q: ProjectivePoint,
                       curve: CurveParams = SECP256K1,
                       field_ops: Optional[list] = None) -> ProjectivePoint:
    """Complete projective addition for y^2 = x^3 + b curves.

    The schedule below is executed verbatim for every input pair; there is
    no branching on operand values. When ``field_ops`` is a list, the kind
    of each field operation is appended in execution order.
    """
    mod = curve.p
    if field_ops is None:
        madd, msub, mmul = mod.add, mod.sub, mod.mul
    else:
        def madd(a, b):
            field_ops.append("field-add")
            return mod.add(a, b)

        def msub(a, b):
            field_ops.append("field-sub")
            return mod.sub(a, b)

        def mmul(a, b):
            field_ops.append("field-mul")
            return mod.mul(a, b)

    x1, y1, z1 = P
    x2, y2, z2 = Q
    b3 = curve.b3

    t0 = mmul(x1, x2)
    t1 = mmul(y1, y2)
    t2 = mmul(z1, z2)
    t3 = madd(x1, y1)
    t4 = madd(x2, y2)
    t3 = mmul(t3, t4)
    t4 = madd(t0, t1)
    t3 = msub(t3, t4)
    t4 = madd(y1, z1)
    x3 = madd(y2, z2)
    t4 = mmul(t4, x3)
    x3 = madd(t1, t2)
    t4 = msub(t4, x3)
    x3 = madd(x1, z1)
    y3 = madd(x2, z2)
    x3 = mmul(x3, y3)
    y3 = madd(t0, t2)
    y3 = msub(x3, y3)
    x3 = madd(t0, t0)
    t0 = madd(x3, t0)
    t2 = mmul(b3, t2)
    z3 = madd(t1, t2)
    t1 = msub(t1, t2)
    y3 = mmul(b3, y3)
    x3 = mmul(t4, y3)
    t2 = mmul(t3, t1)
    x3 = msub(t2, x3)
    y3 = mmul(y3, t0)
    t1 = mmul(t1, z3)
    y3 = madd(t1, y3)
    t0 = mmul(t0, t3)
    z3 = mmul(z3, t4)
    z3 = madd(z3, t0)

    return ProjectivePoint(x3, y3, z3)


def point_double(P: ProjectivePoint, curve: CurveParams = SECP256K1,
                 field_ops: Optional[list] = None) -> ProjectivePoint:
    """Doubling via self-addition through the same complete schedule."""
    return point_add_complete(P, P, curve, field_ops)


def to_affine(P: ProjectivePoint,
              curve: CurveParams = SECP256K1) -> AffinePoint:
    """Leave projective coordinates with one binary inversion of Z."""
    if P.z == 0:
        return AffinePoint(0, 0, True)
    mod = curve.p
    zi = mod.inv(P.z)
    return AffinePoint(mod.mul(P.x, zi), mod.mul(P.y, zi))


def negate(pt: AffinePoint, curve: CurveParams = SECP256K1) -> AffinePoint:
    if pt.infinity:
        return pt
    return AffinePoint(pt.x, (curve.p.value - pt.y) % curve.p.value)


def is_on_curve(pt: AffinePoint, curve: CurveParams = SECP256K1) -> bool:
    if pt.infinity:
        return True
    p = curve.p.value
    return (pt.y * pt.y - pt.x ** 3 - curve.b) % p == 0


def _point_weight(pt: ProjectivePoint) -> int:
    return pt.x.bit_count() + pt.y.bit_count() + pt.z.bit_count()


def _normalize_scalar(k: int, curve: CurveParams) -> str:
    """Reduce mod n, reject zero, left-pad to the fixed ladder width."""
    kk = k % curve.n.value
    if kk == 0:
        raise InvalidScalarError(
            "scalar is 0 mod the group order; multiplication would produce "
            "the point at infinity")
    return format(kk, "0%db" % curve.scalar_bits)


def scalar_mul_ladder(k: int, curve: CurveParams = SECP256K1,
                      recorder=None) -> AffinePoint:
    """k*G by the balanced Montgomery ladder with a temporary register.

    The scalar is processed at fixed length: the top bit is absorbed by
    the initialisation (complete formulas make the identity a safe ladder
    operand when it is 0) and the loop always runs scalar_bits-1
    iterations. Each iteration performs one point addition and two point
    doublings; the second doubling is the dummy write into Rt that keeps
    both branches' operation sets identical. Trace events carry the
    architectural write ports (PA0 -> R0, PA1 -> R1, second pass -> Rt);
    the key bit only steers internal multiplexers.
    """
    bits = _normalize_scalar(k, curve)
    g = curve.generator
    g2 = point_add_complete(g, g, curve)
    if bits[0] == "1":
        r0, r1 = g, g2
    else:
        r0, r1 = IDENTITY, g
    rt = IDENTITY
    for i, bit in enumerate(bits[1:]):
        if bit == "1":
            r0 = point_add_complete(r0, r1, curve)
            r1 = point_add_complete(r1, r1, curve)
            rt = point_add_complete(r0, r0, curve)
            added, doubled = r0, r1
        else:
            r1 = point_add_complete(r0, r1, curve)
            r0 = point_add_complete(r0, r0, curve)
            rt = point_add_complete(r1, r1, curve)
            added, doubled = r1, r0
        if recorder is not None:
            recorder.record(i, "PA0", "point-add", "R0", _point_weight(added))
            recorder.record(i, "PA1", "point-double", "R1", _point_weight(doubled))
            recorder.record(i, "PA0", "point-double", "Rt", _point_weight(rt))
            if getattr(recorder, "keep_states", False):
                recorder.capture_state(i, r0, r1, rt)
    result = to_affine(r0, curve)
    if recorder is not None:
        last = curve.scalar_bits - 1
        recorder.record(last, "BIA", "field-mul", "R0", result.x.bit_count())
        recorder.record(last, "BIA", "field-mul", "R0", result.y.bit_count())
    return result


def scalar_mul_classic(k: int, curve: CurveParams = SECP256K1,
                       recorder=None) -> AffinePoint:
    """The conventional two-operation ladder, kept as the leaky baseline.

    Each branch adds into one register and doubles the other, so the
    written-register sequence follows the key bits; the recorder logs the
    writes in program order, which is exactly the leak.
    """
    bits = _normalize_scalar(k, curve)
    g = curve.generator
    g2 = point_add_complete(g, g, curve)
    if bits[0] == "1":
        r0, r1 = g, g2
    else:
        r0, r1 = IDENTITY, g
    for i, bit in enumerate(bits[1:]):
        if bit == "1":
            r0 = point_add_complete(r0, r1, curve)
            r1 = point_add_complete(r1, r1, curve)
            if recorder is not None:
                recorder.record(i, "PA0", "point-add", "R0", _point_weight(r0))
                recorder.record(i, "PA0", "point-double", "R1", _point_weight(r1))
        else:
            r1 = point_add_complete(r0, r1, curve)
            r0 = point_add_complete(r0, r0, curve)
            if recorder is not None:
                recorder.record(i, "PA0", "point-add", "R1", _point_weight(r1))
                recorder.record(i, "PA0", "point-double", "R0", _point_weight(r0))
    result = to_affine(r0, curve)
    if recorder is not None:
        last = curve.scalar_bits - 1
        recorder.record(last, "BIA", "field-mul", "R0", result.x.bit_count())
        recorder.record(last, "BIA", "field-mul", "R0", result.y.bit_count())
    return result
