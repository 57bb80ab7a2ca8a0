"""Thin stepping loop around scipy's DOP853 with dense output retained.

scipy's ``solve_ivp`` hides the step loop, which makes it awkward to
enforce a step budget, run per-step guards (blow-up, region checks), or
stop on a state-dependent condition.  This wrapper drives the solver
class directly and keeps every local interpolant so solutions can be
evaluated anywhere afterwards.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
from scipy.integrate import DOP853

from .errors import MaxStepsExceeded, StepUnderflow

# interpolation order of DOP853's local interpolant
DENSE_ORDER = 7


class DenseSolution:
    """Piecewise dense output of a completed integration."""

    def __init__(self, segments: Sequence, t0: float, y0: np.ndarray):
        self._segments = list(segments)
        self.t0 = float(t0)
        self.y0 = np.asarray(y0, dtype=float)
        if self._segments:
            self.t_end = float(self._segments[-1].t)
        else:
            self.t_end = self.t0

    def __call__(self, ts) -> np.ndarray:
        """Evaluate the solution; returns shape (n_states,) or (n_states, m)."""
        scalar = np.isscalar(ts)
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        out = np.empty((self.y0.size, ts.size))
        ends = np.array([seg.t for seg in self._segments])
        idx = np.searchsorted(ends, ts, side="left")
        idx = np.clip(idx, 0, len(self._segments) - 1)
        for i in range(len(self._segments)):
            hit = idx == i
            if np.any(hit):
                vals = self._segments[i](ts[hit])
                out[:, hit] = vals if vals.ndim == 2 else vals[:, None]
        if not self._segments:
            out[:, :] = self.y0[:, None]
        return out[:, 0] if scalar else out

    @property
    def last_segment(self):
        return self._segments[-1] if self._segments else None


def solve_dense(
    rhs: Callable,
    t0: float,
    y0: Sequence[float],
    t_bound: float,
    *,
    rtol: float,
    atol: float,
    max_steps: int,
    on_step: Callable[[float, np.ndarray], None] | None = None,
    stop: Callable[[float, np.ndarray], bool] | None = None,
) -> tuple[DenseSolution, float, np.ndarray]:
    """Integrate to ``t_bound`` (may be ``np.inf`` when ``stop`` is given).

    ``on_step`` runs after every accepted step and may raise to abort;
    ``stop`` ends the integration once it returns True.  Returns the dense
    solution together with the final time and state.
    """
    solver = DOP853(rhs, t0, np.asarray(y0, dtype=float), t_bound, rtol=rtol, atol=atol)
    segments = []
    steps = 0
    while solver.status == "running":
        steps += 1
        if steps > max_steps:
            raise MaxStepsExceeded(f"exceeded {max_steps} steps at t={solver.t:.6g}")
        message = solver.step()
        if solver.status == "failed":
            raise StepUnderflow(f"integrator failed at t={solver.t:.6g}: {message}")
        segments.append(solver.dense_output())
        if on_step is not None:
            on_step(solver.t, solver.y)
        if stop is not None and stop(solver.t, solver.y):
            break
    return DenseSolution(segments, t0, np.asarray(y0, dtype=float)), solver.t, solver.y.copy()
