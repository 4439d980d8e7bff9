"""Deterministic nested grid extremization over the objective regions.

The extrema of the reduced objectives sit on region boundaries (the p = 2
edge of the rectangle, the (1, 0) corner of the parabolic region), so the
search combines a full 2-D grid with explicit 1-D sampling of every boundary
segment, then shrinks the window by a factor of 10 around the incumbent for
a fixed number of refinement rounds.  For fixed (resolution, refine_iters)
the result is deterministic, and the incumbent value is monotone in the
number of rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .objectives import OBJECTIVES, DomainKind, DomainSpec, Objective, ObjectiveId

__all__ = ["OptResult", "grid_extremize"]


@dataclass(frozen=True)
class OptResult:
    objective_id: ObjectiveId
    mode: str
    value: float
    argpoint: tuple[float, float]
    grid_resolution: int
    refine_iterations: int
    paper_value: Fraction | None
    gap: float | None


def _boundary_segments(domain: DomainSpec, win: tuple[float, float, float, float],
                       n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Points along each domain boundary segment, clipped to the window."""
    u0, u1, v0, v1 = win
    segs: list[tuple[np.ndarray, np.ndarray]] = []
    if domain.kind is DomainKind.BOX:
        for u_edge in (0.0, 2.0):
            if u0 <= u_edge <= u1:
                vv = np.linspace(v0, v1, n)
                segs.append((np.full(n, u_edge), vv))
        for v_edge in (0.0, 1.0):
            if v0 <= v_edge <= v1:
                uu = np.linspace(u0, u1, n)
                segs.append((uu, np.full(n, v_edge)))
    else:
        if u0 <= 0.0 <= u1:
            vv = np.linspace(v0, min(v1, 1.0), n)
            segs.append((np.full(n, 0.0), vv))
        if v0 <= 0.0 <= v1:
            uu = np.linspace(u0, min(u1, 1.0), n)
            segs.append((uu, np.full(n, 0.0)))
        # the curve v = 1 - u^2, kept where it crosses the window
        uu = np.linspace(u0, min(u1, 1.0), n)
        vv = 1.0 - uu * uu
        keep = (vv >= v0) & (vv <= v1)
        if np.any(keep):
            segs.append((uu[keep], vv[keep]))
    return segs


def grid_extremize(objective_id: ObjectiveId, mode: str | None = None,
                   resolution: int = 2000, refine_iters: int = 3) -> OptResult:
    """Extremize one objective by nested grid search.

    ``mode`` defaults to the objective's proven direction; the known
    extremum and the gap to it are only reported for that direction.
    """
    obj: Objective = OBJECTIVES[objective_id]
    if mode is None:
        mode = obj.mode
    if mode not in ("max", "min"):
        raise ValueError(f"mode must be 'max' or 'min', got {mode!r}")
    if resolution < 100:
        raise ValueError("resolution must be >= 100")
    if refine_iters < 0:
        raise ValueError("refine_iters must be >= 0")

    (u_lo, u_hi), (v_lo, v_hi) = obj.domain.bounds()
    sign = 1.0 if mode == "max" else -1.0
    best = -np.inf
    best_pt = (u_lo, v_lo)
    win = (u_lo, u_hi, v_lo, v_hi)

    for round_idx in range(refine_iters + 1):
        u0, u1, v0, v1 = win
        uu = np.linspace(u0, u1, resolution)[:, None]
        vv = np.linspace(v0, v1, resolution)[None, :]
        vals = sign * obj.fn(uu, vv)
        inside = obj.domain.contains(uu, vv)
        vals = np.where(inside, vals, -np.inf)
        flat = int(np.argmax(vals))
        i, j = divmod(flat, resolution)
        if vals[i, j] > best:
            best = float(vals[i, j])
            best_pt = (float(uu[i, 0]), float(vv[0, j]))
        for su, sv in _boundary_segments(obj.domain, win, resolution):
            bvals = sign * obj.fn(su, sv)
            k = int(np.argmax(bvals))
            if bvals[k] > best:
                best = float(bvals[k])
                best_pt = (float(su[k]), float(sv[k]))
        # shrink by 10x around the incumbent, staying inside the bounds
        half_u = (u_hi - u_lo) / 10.0 ** (round_idx + 1) / 2.0
        half_v = (v_hi - v_lo) / 10.0 ** (round_idx + 1) / 2.0
        win = (max(u_lo, best_pt[0] - half_u), min(u_hi, best_pt[0] + half_u),
               max(v_lo, best_pt[1] - half_v), min(v_hi, best_pt[1] + half_v))

    value = sign * best
    if mode == obj.mode:
        paper_value: Fraction | None = obj.target
        gap: float | None = abs(value - float(obj.target))
    else:
        paper_value, gap = None, None
    return OptResult(objective_id=objective_id, mode=mode, value=value,
                     argpoint=best_pt, grid_resolution=resolution,
                     refine_iterations=refine_iters,
                     paper_value=paper_value, gap=gap)
