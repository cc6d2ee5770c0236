"""Exact verification of registry identities.

Both sides of an identity are expanded to order ``N`` and compared
coefficient by coefficient with zero tolerance.  Failures and evaluator
errors are returned as data, never raised.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .identities import REGISTRY, IdentitySpec, complete_binding, get_identity
from .numerics import format_rational
from .qcore import QBase
from .series import TruncatedSeries, series_equal_to_order

DEFAULT_ORDER = 16
DEFAULT_SEED = 42
DEFAULT_TRIALS = 5
MODES = ("free", "consistent")

P_CHOICES = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(5, 8), Fraction(7, 10))
ODD_Z = (1, 3, 5, 7)


@dataclass
class VerificationReport:
    id: str
    binding: dict[str, Fraction]
    order: int
    mode: str
    status: str
    first_mismatch: tuple | None = None
    message: str | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "order": self.order,
            "mode": self.mode,
            "binding": {k: format_rational(v) for k, v in self.binding.items()},
            "first_mismatch": None,
        }
        if self.first_mismatch is not None:
            power, lhs, rhs = self.first_mismatch
            out["first_mismatch"] = {"power": power, "lhs": format_rational(lhs),
                                     "rhs": format_rational(rhs)}
        if self.message is not None:
            out["message"] = self.message
        # kept last: the only field outside the determinism contract
        out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


@dataclass
class Summary:
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.reports)

    @property
    def passed(self) -> int:
        return sum(r.status == "pass" for r in self.reports)

    @property
    def failed(self) -> int:
        return sum(r.status == "fail" for r in self.reports)

    @property
    def errors(self) -> int:
        return sum(r.status == "error" for r in self.reports)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.errors == 0

    def per_identity(self) -> dict[str, tuple[int, int]]:
        """``id -> (passed, total)`` in registry order."""
        counts: dict[str, list[int]] = {}
        for r in self.reports:
            c = counts.setdefault(r.id, [0, 0])
            c[0] += r.passed
            c[1] += 1
        return {k: (v[0], v[1]) for k, v in counts.items()}

    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    def to_json(self) -> dict:
        return {"total": self.total, "passed": self.passed, "failed": self.failed,
                "errors": self.errors, "reports": [r.to_json() for r in self.reports]}


# -- sampling --------------------------------------------------------------------

def _draw_p(rng: random.Random) -> Fraction:
    if rng.random() < 0.6:
        return rng.choice(P_CHOICES)
    den = rng.randint(2, 9)
    return Fraction(rng.randint(1, den - 1), den)


def _draw_rational(rng: random.Random, allow_one: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.choice((-1, 1)) * rng.randint(1, 16), rng.randint(1, 16))
        if allow_one or x != 1:
            return x


def _negative_q_power(x: Fraction, q: Fraction) -> bool:
    for _ in range(65):
        if x == 1:
            return True
        if x < 1:
            return False
        x *= q
    return False


def sample_binding(identity_id: str, seed: int, mode: str) -> dict[str, Fraction]:
    """Deterministic schema-valid binding for ``(identity, seed, mode)``.

    Free mode draws every q-exponential as an independent rational.
    Consistent mode draws the integer exponents (odd ``z``, ``m``,
    ``lam``) and derives the q-exponentials from them as powers of ``p``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    spec = _spec(identity_id)
    rng = random.Random(f"{identity_id}|{seed}|{mode}")
    binding: dict[str, Fraction] = {}
    names = spec.param_names
    if "p" in names:
        binding["p"] = _draw_p(rng)
    q = binding["p"] ** 2 if "p" in binding else None

    if mode == "consistent":
        from .identities import DERIVATIONS
        sources = []
        for name in spec.consistent:
            sources.extend(s for s in DERIVATIONS[name][0] if s not in sources)
        for s in sources:
            if s not in names:
                binding[s] = _draw_consistent(rng, s)

    for param in spec.params:
        if param.name in binding:
            continue
        if mode == "consistent" and param.name in spec.consistent:
            continue
        if param.kind == "integer":
            binding[param.name] = Fraction(rng.randint(param.low, param.high))
        elif mode == "consistent" and param.name in ("z", "lam"):
            binding[param.name] = _draw_consistent(rng, param.name)
        else:
            while True:
                x = _draw_rational(rng)
                if param.denominator and q is not None and _negative_q_power(x, q):
                    continue
                break
            binding[param.name] = x
    return complete_binding(spec, binding)


def _draw_consistent(rng: random.Random, name: str) -> Fraction:
    if name == "z":
        return Fraction(rng.choice(ODD_Z))
    return Fraction(rng.randint(0, 6))


# -- verification ----------------------------------------------------------------

def _spec(identity_id: str) -> IdentitySpec:
    spec = get_identity(identity_id)
    if spec is None:
        raise KeyError(f"unknown identity {identity_id!r}")
    return spec


def perturbed(series: TruncatedSeries, power: int) -> TruncatedSeries:
    """``series`` with 1 added to its ``t^power`` coefficient."""
    coeffs = list(series.coeffs)
    coeffs[power] += 1
    return TruncatedSeries(coeffs)


def verify_identity(identity_id: str, binding: Mapping[str, Fraction], order: int = DEFAULT_ORDER,
                    mode: str = "given", perturb_power: int | None = None) -> VerificationReport:
    """Build both sides and compare through ``t^order``.

    ``perturb_power`` adds 1 to one right-hand coefficient; it exists to
    check that the comparison actually detects a wrong coefficient.
    """
    start = time.perf_counter()
    shown = {k: Fraction(v) for k, v in binding.items()}
    report = VerificationReport(identity_id, shown, order, mode, "error")
    try:
        spec = _spec(identity_id)
        full = complete_binding(spec, binding)
        report.binding = full
        lhs = spec.lhs_builder(full, order)
        rhs = spec.rhs_builder(full, order)
        if perturb_power is not None:
            rhs = perturbed(rhs, perturb_power)
        equal, mismatch = series_equal_to_order(lhs, rhs, order)
        report.status = "pass" if equal else "fail"
        if mismatch is not None:
            report.first_mismatch = tuple(mismatch)
    except Exception as exc:  # reported, never raised
        report.status = "error"
        report.message = f"{type(exc).__name__}: {exc}"
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_all(seed: int = DEFAULT_SEED, trials: int = DEFAULT_TRIALS, order: int = DEFAULT_ORDER,
               mode: str = "both", ids: Iterable[str] | None = None,
               perturb: Mapping[str, int] | None = None) -> Summary:
    """Run every (selected) identity at ``trials`` sampled bindings per mode.

    Trial ``i`` uses seed ``seed + i``.  ``perturb`` maps identity ids to a
    right-hand power to corrupt.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    modes = MODES if mode == "both" else (mode,)
    selected = list(REGISTRY) if ids is None else list(ids)
    perturb = perturb or {}
    summary = Summary()
    for identity_id in selected:
        for m in modes:
            for i in range(trials):
                try:
                    binding = sample_binding(identity_id, seed + i, m)
                except Exception as exc:
                    summary.reports.append(VerificationReport(
                        identity_id, {}, order, m, "error", message=f"{type(exc).__name__}: {exc}"))
                    continue
                summary.reports.append(verify_identity(
                    identity_id, binding, order, m, perturb.get(identity_id)))
    return summary


def base_of(binding: Mapping[str, Fraction]) -> QBase | None:
    return QBase(binding["p"]) if "p" in binding else None
