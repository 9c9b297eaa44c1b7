"""Shell tables b_j and mollified pairings against atomic measures.

For a radial f with declared exponent p, the table entry at scale eps
and octave j is

    b = (2**-j * eps)**(dim - alpha) * integral of |f|^2 over the shell
        2**j <= |eps x| <= 2**(j+1)

and the companion bound comes from Holder on the same quadrature nodes,
so the inequality b <= (2**-j eps)**(dim-alpha) * vol**(1-2/p) * mass**(2/p)
holds exactly in the discrete sense, not merely up to quadrature error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..errors import DomainError, SizeError
from ..geometry.density import WeightedMeasure
from ..numeric import quadrature_nodes, sphere_surface_area
from .bump import BumpFunction, DyadicProfile, bump_profile

SHELL_PANEL_WIDTH = 0.5
MIN_GRID_SPACING_FACTOR = 1e-4
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class RadialProfile:
    """A radial function on R^dim with a declared integrability exponent."""

    func: Callable
    dim: int
    p: float
    support_radius: Optional[float] = None
    label: str = ""

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dim must be >= 1")
        if self.p < 2:
            raise DomainError("declared p must be >= 2 for the shell bounds")
        if self.support_radius is not None and not self.support_radius > 0:
            raise DomainError("support_radius must be positive")

    def __call__(self, r) -> np.ndarray:
        return np.asarray(self.func(np.asarray(r, dtype=float)), dtype=float)


def bessel_tail_profile(dim: int = 2, p: float = 4.0, truncate_at: Optional[float] = 1.0) -> RadialProfile:
    """sqrt(2/(pi r)) * cos(r - pi/4), optionally zeroed for r >= truncate_at.

    The oscillating square-root tail is the classical borderline decay
    profile in the plane; truncating it to a ball keeps every L^p norm
    finite while preserving the near-origin singularity.
    """

    def func(r):
        r = np.asarray(r, dtype=float)
        out = np.zeros_like(r)
        pos = r > 0
        rp = r[pos]
        vals = np.sqrt(2.0 / (math.pi * rp)) * np.cos(rp - math.pi / 4)
        if truncate_at is not None:
            vals = np.where(rp < truncate_at, vals, 0.0)
        out[pos] = vals
        return out

    label = "bessel-tail" + ("" if truncate_at is None else f"-trunc{truncate_at:g}")
    return RadialProfile(func, dim, p, truncate_at, label)


@dataclass(frozen=True)
class MollifierRow:
    """One octave j of the sweep, tabulated across the eps schedule."""

    j: int
    a: float
    b: tuple
    holder_bounds: tuple
    shell_volumes: tuple
    shell_lp_masses: tuple
    peak_index: int
    tail_nonincreasing: bool
    final_over_peak: float


@dataclass(frozen=True)
class MollifierSweep:
    dim: int
    alpha: float
    p: float
    eps: tuple
    profile: DyadicProfile
    rows: tuple
    sums: tuple  # per eps: sum over j of a_j * b_j
    holder_constant: float
    f_lp_sq: Optional[float]
    uniform_bound_ok: bool
    tails_nonincreasing: bool
    notes: tuple

    @property
    def final_over_initial(self) -> float:
        if self.sums[0] == 0:
            return 0.0 if self.sums[-1] == 0 else math.inf
        return self.sums[-1] / self.sums[0]

    def sums_nonincreasing(self) -> bool:
        return all(b <= a * (1 + BOUND_SLACK) for a, b in zip(self.sums, self.sums[1:]))


def _shell_integrals(f: RadialProfile, lo: float, hi: float) -> tuple[float, float, float]:
    """(integral of |f|^2, shell volume, integral of |f|^p), one node set.

    All three are sums against the identical discrete measure
    W_i = surface * w_i * r_i**(dim-1), which is what makes the Holder
    comparison exact at the discrete level.
    """
    if f.support_radius is not None:
        hi = min(hi, f.support_radius)
    if hi <= lo:
        return 0.0, 0.0, 0.0
    r, w = quadrature_nodes(lo, hi, panel_width=SHELL_PANEL_WIDTH)
    big_w = sphere_surface_area(f.dim) * w * r ** (f.dim - 1)
    vals = np.abs(f(r))
    sq = float(np.sum(big_w * vals**2))
    vol = float(np.sum(big_w))
    lp = float(np.sum(big_w * vals**f.p))
    return sq, vol, lp


def mollifier_sum(
    f: RadialProfile,
    chi: BumpFunction,
    alpha: float,
    eps_schedule: Sequence,
    j_lo: int = -20,
    j_hi: int = 4,
) -> MollifierSweep:
    """Tabulate b over (j, eps), weight by the bump's a_j, and sum per eps.

    The schedule is used in the order given (decreasing eps is the
    intended direction).  Missing L^2 mass on the sampled range is a
    note, never an error: the machinery only consumes shell integrals.
    """
    if chi.dim != f.dim:
        raise DomainError("bump and profile dimensions disagree")
    if not (0 < alpha < f.dim):
        raise DomainError(f"alpha must lie in (0, {f.dim})")
    eps = [float(e) for e in eps_schedule]
    if not eps or any(not e > 0 for e in eps):
        raise DomainError("eps schedule must be positive")
    profile = bump_profile(chi, alpha, j_lo, j_hi)
    notes = []
    n = f.dim
    exponent = n - alpha
    rows = []
    table = np.zeros((j_hi - j_lo + 1, len(eps)))
    for ji, j in enumerate(range(j_lo, j_hi + 1)):
        b_vals, bounds, vols, masses = [], [], [], []
        for e in eps:
            lo, hi = 2.0**j / e, 2.0 ** (j + 1) / e
            sq, vol, lp = _shell_integrals(f, lo, hi)
            scale = (2.0**-j * e) ** exponent
            b = scale * sq
            if lp > 0 and vol > 0:
                bound = scale * vol ** (1 - 2 / f.p) * lp ** (2 / f.p)
            else:
                bound = 0.0
            b_vals.append(b)
            bounds.append(bound)
            vols.append(vol)
            masses.append(lp)
        table[ji] = b_vals
        peak = int(np.argmax(b_vals))
        tail = b_vals[peak:]
        nonincreasing = all(
            later <= earlier * (1 + BOUND_SLACK) for earlier, later in zip(tail, tail[1:])
        )
        final_over_peak = 0.0 if b_vals[peak] == 0 else b_vals[-1] / b_vals[peak]
        rows.append(
            MollifierRow(
                j=j,
                a=profile.a_at(j),
                b=tuple(b_vals),
                holder_bounds=tuple(bounds),
                shell_volumes=tuple(vols),
                shell_lp_masses=tuple(masses),
                peak_index=peak,
                tail_nonincreasing=nonincreasing,
                final_over_peak=final_over_peak,
            )
        )
        if not all(math.isfinite(v) for v in b_vals):
            notes.append(f"non-finite shell integral at j = {j}")
    a_vec = np.asarray(profile.a)
    sums = tuple(float(s) for s in a_vec @ table)
    holder_constant = 0.0
    for row in rows:
        for e_idx in range(len(eps)):
            if row.shell_lp_masses[e_idx] > 0:
                scale = (2.0 ** -row.j * eps[e_idx]) ** exponent
                holder_constant = max(
                    holder_constant, scale * row.shell_volumes[e_idx] ** (1 - 2 / f.p)
                )
    f_lp_sq = None
    if f.support_radius is not None:
        _, _, total_lp = _shell_integrals(f, 0.0, f.support_radius)
        f_lp_sq = total_lp ** (2 / f.p)
    else:
        notes.append("unbounded support: L^p mass reported per shell only")
    uniform_ok = all(
        b <= bound * (1 + BOUND_SLACK) + 1e-300
        for row in rows
        for b, bound in zip(row.b, row.holder_bounds)
    )
    tails_ok = all(row.tail_nonincreasing for row in rows)
    return MollifierSweep(
        dim=n,
        alpha=alpha,
        p=f.p,
        eps=tuple(eps),
        profile=profile,
        rows=tuple(rows),
        sums=sums,
        holder_constant=holder_constant,
        f_lp_sq=f_lp_sq,
        uniform_bound_ok=uniform_ok,
        tails_nonincreasing=tails_ok,
        notes=tuple(notes),
    )


def _simpson_axis(lo: float, hi: float, spacing: float) -> tuple[np.ndarray, np.ndarray]:
    if hi <= lo:
        raise DomainError("support interval must have lo < hi")
    count = max(2, math.ceil((hi - lo) / spacing))
    if count % 2:
        count += 1
    x = np.linspace(lo, hi, count + 1)
    h = (hi - lo) / count
    w = np.full(count + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    return x, w * (h / 3.0)


@dataclass(frozen=True)
class PairingResult:
    value: float
    bound: float
    u_l2: float
    psi_l2_on_support: float
    atom_pairing: float
    grid_points: int


def mollified_pairing(
    u: WeightedMeasure,
    psi: Callable,
    chi: BumpFunction,
    eps: float,
    support: Sequence,
    spacing: float,
) -> PairingResult:
    """<u mollified at scale eps, psi> on a Simpson grid over psi's support.

    Also returns the Cauchy-Schwarz bound ||u_eps||_2 * ||psi||_2 with
    psi restricted to the eps-fattened atom support; since u_eps
    vanishes off that fattening pointwise, the bound dominates the
    pairing exactly on the shared grid.
    """
    if not eps > 0:
        raise DomainError("eps must be positive")
    if spacing < MIN_GRID_SPACING_FACTOR * eps:
        raise SizeError(
            f"grid spacing {spacing:g} finer than {MIN_GRID_SPACING_FACTOR:g} * eps"
        )
    if chi.dim != u.n:
        raise DomainError("bump dimension must match the measure's")
    if u.n == 1:
        lo, hi = support
        pts_1d, w = _simpson_axis(float(lo), float(hi), spacing)
        pts = pts_1d[:, None]
        weights = w
    elif u.n == 2:
        (lo0, hi0), (lo1, hi1) = support
        x0, w0 = _simpson_axis(float(lo0), float(hi0), spacing)
        x1, w1 = _simpson_axis(float(lo1), float(hi1), spacing)
        g0, g1 = np.meshgrid(x0, x1, indexing="ij")
        pts = np.stack([g0.ravel(), g1.ravel()], axis=1)
        weights = np.outer(w0, w1).ravel()
    else:
        raise DomainError("pairing grids support dim 1 and 2 only")

    kernel = chi.mollifier(eps)
    atoms = u.atom_array()
    wts = u.weight_array()
    u_eps = np.zeros(len(pts))
    d2min = np.full(len(pts), np.inf)
    for start in range(0, len(atoms), 128):
        block = atoms[start : start + 128]
        bw = wts[start : start + 128]
        d2 = ((pts[:, None, :] - block[None, :, :]) ** 2).sum(axis=2)
        u_eps += (kernel(np.sqrt(d2)) * bw[None, :]).sum(axis=1)
        np.minimum(d2min, d2.min(axis=1), out=d2min)
    psi_vals = np.asarray(psi(pts if u.n > 1 else pts[:, 0]), dtype=float)
    on_support = d2min <= eps * eps
    value = float(np.sum(weights * u_eps * psi_vals))
    u_l2 = math.sqrt(float(np.sum(weights * u_eps**2)))
    psi_l2 = math.sqrt(float(np.sum(weights * np.where(on_support, psi_vals, 0.0) ** 2)))
    atom_pairing = float(
        np.sum(wts * np.asarray(psi(atoms if u.n > 1 else atoms[:, 0]), dtype=float))
    )
    return PairingResult(
        value=value,
        bound=u_l2 * psi_l2,
        u_l2=u_l2,
        psi_l2_on_support=psi_l2,
        atom_pairing=atom_pairing,
        grid_points=len(pts),
    )
