"""Threshold temperature of pairwise thermal entanglement on isotropic rings.

Above some T_c the nearest-neighbour concurrence of an antiferromagnetic
isotropic ring is exactly zero; T_c solves U(T_c)/(-N J) = 1.  The root is
found by bisecting f(T) = -U(T)/(N J) - 1, which is a clean sign change
(monotone, because U is non-decreasing in T), rather than the clamped
concurrence whose one-sided zero stalls bisection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .entanglement import CLAMP_TOL, concurrence_wootters, concurrence_xxx_energy
from .model import ModelSpec
from .spectral import SpectralDecomposition, decompose
from .thermo import thermo_point
from .twoqubit import pair_rdm_thermal

STATUS_FOUND = "found"
STATUS_NEVER = "never_entangled"
STATUS_EVERYWHERE = "entangled_everywhere_in_range"

_T_FLOOR = 1e-6
_T_CEILING = 1e6


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of the threshold search."""

    status: str
    t_c: float | None
    bracket: tuple[float, float]
    iterations: int
    u_of_n: float | None


def _require_afm_xxx(spec: ModelSpec) -> None:
    if not spec.is_uniform or spec.coupling.delta != 1.0 or spec.field_b != 0.0:
        raise ValueError(
            "threshold search is defined for the isotropic zero-field model "
            "(uniform coupling, delta = 1, B = 0)"
        )
    if spec.coupling.j <= 0.0:
        raise ValueError(
            "ferromagnetic rings (j <= 0) are never pairwise entangled; "
            "no threshold exists"
        )


def find_threshold(spec: ModelSpec, sd: SpectralDecomposition) -> ThresholdResult:
    """Bisect for the temperature where the concurrence vanishes.

    Returns never_entangled when the T -> 0 concurrence is already zero
    (e.g. three-site rings).  A found root is cross-checked: the Wootters
    concurrence must be positive just below t_c and exactly zero just above
    (skipped when the decomposition carries no eigenvectors).
    """
    _require_afm_xxx(spec)
    n, j = spec.n_sites, spec.coupling.j

    def f(t: float) -> float:
        return -thermo_point(sd, spec, t).u / (n * j) - 1.0

    if concurrence_xxx_energy(thermo_point(sd, spec, _T_FLOOR).u_per_site, j) <= CLAMP_TOL:
        return ThresholdResult(STATUS_NEVER, None, (_T_FLOOR, _T_FLOOR), 0, None)

    lo, hi = _T_FLOOR, 1.0
    while f(hi) > 0.0:
        lo = hi
        hi *= 2.0
        if hi > _T_CEILING:
            return ThresholdResult(STATUS_EVERYWHERE, None, (lo, hi), 0, None)
    bracket = (lo, hi)

    iterations = 0
    while hi - lo > 1e-8 * max(1.0, 0.5 * (lo + hi)):
        mid = 0.5 * (lo + hi)
        iterations += 1
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    t_c = 0.5 * (lo + hi)
    u_of_n = thermo_point(sd, spec, t_c).u / (-n * j)

    if sd.eigenvectors is not None:
        step = 1e-4 if t_c > 2e-4 else 0.5 * t_c
        below = concurrence_wootters(pair_rdm_thermal(sd, t_c - step, 1, 2)).wootters
        above = concurrence_wootters(pair_rdm_thermal(sd, t_c + step, 1, 2)).wootters
        if below <= 0.0 or above != 0.0:
            raise RuntimeError(
                f"threshold cross-check failed at t_c={t_c!r}: "
                f"C(t_c - {step:g}) = {below!r}, C(t_c + {step:g}) = {above!r}"
            )

    return ThresholdResult(STATUS_FOUND, float(t_c), bracket, iterations, float(u_of_n))


def u_of_n_scan(n_list: list[int], j: float, t: float) -> dict[int, float]:
    """u(N) = U(T)/(-N j) for each ring size; at T = 0 this is -E0/(N j).

    Probes the even/odd monotonicity conjecture numerically.  The N = 2
    value reflects the twice-counted bond (u(2) = 3 at T = 0), so even-branch
    monotonicity comparisons should start at N = 4.
    """
    if j <= 0.0:
        raise ValueError("u(N) scan is defined for antiferromagnetic j > 0")
    out: dict[int, float] = {}
    for n in n_list:
        spec = ModelSpec.uniform(n, j)
        sd = decompose(spec, vectors=False)
        u = thermo_point(sd, spec, t).u
        out[n] = float(u / (-n * j))
    return out
