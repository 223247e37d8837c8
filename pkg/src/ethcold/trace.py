"""Abstract side-channel model for the scalar-multiplication ladders.

A recorder attached to a ladder collects one event per point operation:
(iteration, slot, op kind, destination register, Hamming weight of the
written value). The shape of a trace is the event sequence with weights
erased; for the balanced ladder it depends only on the fixed bit-length
policy, never on key bits, which is the testable core of the design's
leakage claim. The classic ladder's shape follows the key and serves as
the baseline.

Traces can be compared with a synthetic-power MSE under three sample
models: op-count (1.0 per event), hamming-weight (weight/256), and
op-register (op and destination ids as features, which is what separates
the classic baseline's traces).
"""

import os
import random
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from . import curve as _curve

SLOTS = ("PA0", "PA1", "BIA")
OP_KINDS = ("point-add", "point-double", "field-mul", "field-add", "field-sub")
REGISTERS = ("R0", "R1", "Rt")

MSE_MODELS = ("op-count", "hamming-weight", "op-register")


class TraceEvent(NamedTuple):
    iteration: int
    slot: str
    op_kind: str
    dest_register: Optional[str]
    weight: int


class TraceRecorder:
    """Collects events from one scalar multiplication. Single-owner.

    With keep_states=True the ladder also hands over its register contents
    after every iteration (verification hook; heavy on the real curve).
    """

    def __init__(self, keep_states: bool = False):
        self.events = []
        self.keep_states = keep_states
        self.states = []

    def record(self, iteration, slot, op_kind, dest_register, weight):
        self.events.append(
            TraceEvent(iteration, slot, op_kind, dest_register, weight))

    def capture_state(self, iteration, r0, r1, rt):
        self.states.append((iteration, r0, r1, rt))

    def trace(self) -> "OperationTrace":
        return OperationTrace(tuple(self.events))


@dataclass(frozen=True)
class OperationTrace:
    events: tuple

    @property
    def shape(self) -> tuple:
        """The event sequence with weights erased."""
        return tuple(e[:4] for e in self.events)

    def __len__(self):
        return len(self.events)

    def iterations(self) -> int:
        """Number of distinct ladder iterations (BIA tail excluded)."""
        return len({e.iteration for e in self.events if e.slot != "BIA"})

    def export_lines(self):
        """Line-delimited records for external analysis."""
        for e in self.events:
            yield "%d %s %s %s %d" % (e.iteration, e.slot, e.op_kind,
                                      e.dest_register, e.weight)


def record_ladder_trace(k: int, variant: str = "hardened",
                        curve=None) -> OperationTrace:
    """Run a scalar multiplication with a recorder attached."""
    curve = curve if curve is not None else _curve.SECP256K1
    rec = TraceRecorder()
    if variant == "hardened":
        _curve.scalar_mul_ladder(k, curve, recorder=rec)
    elif variant == "classic":
        _curve.scalar_mul_classic(k, curve, recorder=rec)
    else:
        raise ValueError("variant must be 'hardened' or 'classic'")
    return rec.trace()


def _samples(trace: OperationTrace, model: str):
    if model == "op-count":
        return [1.0] * len(trace.events)
    if model == "hamming-weight":
        return [e.weight / 256.0 for e in trace.events]
    if model == "op-register":
        # one feature per event: operation id and written-register id
        return [float(OP_KINDS.index(e.op_kind) * 8
                      + (REGISTERS.index(e.dest_register) + 1
                         if e.dest_register in REGISTERS else 0))
                for e in trace.events]
    raise ValueError("unknown model %r (one of %s)" % (model, MSE_MODELS))


def trace_mse(t1: OperationTrace, t2: OperationTrace,
              model: str = "op-count") -> float:
    """Mean square error between per-event synthetic power samples.

    A length mismatch is an attacker alignment failure and reports as
    maximal distinguishability (infinity) rather than raising.
    """
    s1 = _samples(t1, model)
    s2 = _samples(t2, model)
    if len(s1) != len(s2):
        return float("inf")
    if not s1:
        return 0.0
    return sum((a - b) ** 2 for a, b in zip(s1, s2)) / len(s1)


@dataclass
class VariantStats:
    variant: str
    samples: int
    shapes_equal: bool
    distinct_shapes: int
    mse_op_count_max: float
    mse_hamming_mean: float
    mse_hamming_max: float
    mse_op_register_max: float


@dataclass
class UniformityReport:
    sample_count: int
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        hardened = self.stats.get("hardened")
        return hardened is None or hardened.shapes_equal

    def to_text(self) -> str:
        lines = ["ladder trace uniformity report (%d scalars)"
                 % self.sample_count]
        for s in self.stats.values():
            lines.append("  %s:" % s.variant)
            lines.append("    shapes pairwise equal : %s"
                         % ("yes" if s.shapes_equal else "NO (%d distinct)"
                            % s.distinct_shapes))
            lines.append("    MSE op-count    (max) : %.6f" % s.mse_op_count_max)
            lines.append("    MSE op-register (max) : %.6f" % s.mse_op_register_max)
            lines.append("    MSE hamming mean/max  : %.6f / %.6f"
                         % (s.mse_hamming_mean, s.mse_hamming_max))
        lines.append("result: %s" % ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def __str__(self):
        return self.to_text()


def uniformity_report(sample_count: int, variants=("hardened", "classic"),
                      curve=None, rng: Optional[random.Random] = None
                      ) -> UniformityReport:
    """Draw random scalars and compare the trace shapes per variant."""
    if sample_count < 2:
        raise ValueError("need at least 2 samples to compare traces")
    curve = curve if curve is not None else _curve.SECP256K1
    if rng is None:
        rng = random.Random(int.from_bytes(os.urandom(16), "big"))
    n = curve.n.value
    scalars = [rng.randrange(1, n) for _ in range(sample_count)]
    report = UniformityReport(sample_count)
    for variant in variants:
        traces = [record_ladder_trace(k, variant, curve) for k in scalars]
        shapes = {t.shape for t in traces}
        base = traces[0]
        mse_oc = [trace_mse(base, t, "op-count") for t in traces[1:]]
        mse_hw = [trace_mse(base, t, "hamming-weight") for t in traces[1:]]
        mse_or = [trace_mse(base, t, "op-register") for t in traces[1:]]
        report.stats[variant] = VariantStats(
            variant=variant,
            samples=sample_count,
            shapes_equal=len(shapes) == 1,
            distinct_shapes=len(shapes),
            mse_op_count_max=max(mse_oc),
            mse_hamming_mean=sum(mse_hw) / len(mse_hw),
            mse_hamming_max=max(mse_hw),
            mse_op_register_max=max(mse_or),
        )
    return report
