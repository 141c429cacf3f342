"""Experiment drivers: single runs, convergence studies, the CFL table, and the
Burgers shock demo with a first-order Roe reference."""

import math
from dataclasses import dataclass

import numpy as np

from .basis import build_basis
from .method_a import build_fd, method_a_run
from .method_b import method_b_run
from .quadrature import space_rule
from .scheme_core import advection, burgers
from .stability import cfl_max
from .state import Mesh, project_initial, reconstruct_all, l1_error_points, total_mass
from .kernels import cell_poly_eval_grid


def gaussian_profile(x, offset=0.8, center=0.5, width=0.05):
    """The convergence-test profile: offset plus a narrow Gaussian bump."""
    return offset + math.exp(-((x - center) / width) ** 2)


@dataclass
class RunConfig:
    degree: int = 3
    method: str = "b"
    flux: str = "advection"
    speed: float = 1.0
    cells: int = 100
    cfl: float = 0.5
    t_end: float = 0.1
    limiter: bool = False
    out: str = None
    x_left: float = 0.0
    x_right: float = 1.0
    q0: callable = None

    def __post_init__(self):
        if self.cells < 3:
            raise ValueError("need at least 3 cells")
        if self.cfl <= 0:
            raise ValueError("CFL must be positive")
        if self.t_end < 0:
            raise ValueError("t_end must be non-negative")
        if self.method not in ("a", "b"):
            raise ValueError("method must be 'a' or 'b'")


def _make_flux(config):
    if config.flux == "advection":
        return advection(config.speed)
    if config.flux == "burgers":
        return burgers()
    raise ValueError(f"unknown flux {config.flux!r}")


def write_csv(path, state, basis, meta):
    """Interface points and cell-center reconstruction values, sorted by x.

    One metadata header line, then ``x,q`` rows with 17 significant digits.
    """
    mesh = state.mesh
    centers = mesh.centers()
    qc = cell_poly_eval_grid(reconstruct_all(state, basis), np.array([0.0]))[:, 0]
    xs = np.concatenate([centers, mesh.interfaces()])
    qs = np.concatenate([qc, state.pt])
    order = np.argsort(xs)
    meta = dict(meta, mass=total_mass(state))
    header = ",".join(f"{k}={v:.17g}" if isinstance(v, float) else f"{k}={v}"
                      for k, v in meta.items())
    with open(path, "w", newline="\n") as fh:
        fh.write(f"# {header}\n")
        fh.write("x,q\n")
        for j in order:
            fh.write(f"{xs[j]:.17g},{qs[j]:.17g}\n")


def read_csv(path):
    """Parse a solver CSV back into (metadata dict, x array, q array)."""
    meta = {}
    xs, qs = [], []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line.startswith("#"):
                for item in line[1:].strip().split(","):
                    key, val = item.split("=", 1)
                    try:
                        meta[key] = float(val)
                    except ValueError:
                        meta[key] = val
            elif line and not line.startswith("x,"):
                x, q = line.split(",")
                xs.append(float(x))
                qs.append(float(q))
    return meta, np.array(xs), np.array(qs)


def run(config):
    """Project, march to t_end, optionally write the CSV; returns the final state."""
    basis = build_basis(config.degree)
    mesh = Mesh(config.x_left, config.x_right, config.cells)
    q0 = config.q0 if config.q0 is not None else gaussian_profile
    state = project_initial(q0, mesh, basis)
    flux = _make_flux(config)
    if config.t_end > 0:
        if config.method == "a":
            stencil = build_fd(basis)
            state = method_a_run(state, basis, space_rule(basis.N), stencil, flux,
                                 config.cfl, config.t_end)
        else:
            state = method_b_run(state, basis, flux, config.cfl, config.t_end,
                                 limiter=config.limiter)
    if config.out:
        meta = {"N": config.degree, "method": config.method, "cfl": float(config.cfl),
                "t": float(state.t)}
        write_csv(config.out, state, basis, meta)
    return state


@dataclass
class ConvergenceRow:
    M: int
    dx: float
    error: float
    eoc: float = None


def convergence_study(N, method, grids, cfl=None, t_end=0.1, speed=1.0):
    """Advection of the Gaussian profile on [0, 1] periodic; errors vs the shifted
    exact solution, with the experimental order between successive grids."""
    if cfl is None:
        cfl = 1e-4 if method == "a" else 0.5
    period = 1.0

    def exact(x):
        return gaussian_profile((x - speed * t_end) % period)

    rows = []
    for M in grids:
        config = RunConfig(degree=N, method=method, cells=M, cfl=cfl, t_end=t_end,
                           flux="advection", speed=speed)
        state = run(config)
        err = l1_error_points(state, exact)
        eoc = None
        if rows and rows[-1].error > 0 and err > 0:
            eoc = math.log2(rows[-1].error / err) / math.log2(M / rows[-1].M)
        rows.append(ConvergenceRow(M=M, dx=1.0 / M, error=err, eoc=eoc))
    return rows


def roe_burgers_reference(q0, M, t_end, x_left=0.0, x_right=1.0, cfl=0.9):
    """First-order finite volume Roe reference with a transonic entropy fix.

    Returns (cell centers, cell averages at t_end).
    """
    dx = (x_right - x_left) / M
    centers = x_left + (np.arange(M) + 0.5) * dx
    q = np.array([q0(x) for x in centers], dtype=float)
    t = 0.0
    while t < t_end - 1e-14:
        speed = np.max(np.abs(q))
        dt = cfl * dx / speed if speed > 0 else cfl * dx
        dt = min(dt, t_end - t)
        qL = q
        qR = np.roll(q, -1)
        fL, fR = 0.5 * qL * qL, 0.5 * qR * qR
        with np.errstate(divide="ignore", invalid="ignore"):
            a = np.where(qL != qR, (fL - fR) / (qL - qR), qL)
        flux = np.where(a > 0, fL, fR)
        flux = np.where((qL < 0) & (qR > 0), 0.0, flux)   # transonic rarefaction
        q = q - dt / dx * (flux - np.roll(flux, 1))
        t += dt
    return centers, q


def transonic_gaussian(x):
    """Gaussian bump shifted below zero: a transonic Burgers initial datum."""
    return gaussian_profile(x, offset=-0.2)


def shock_location(x, q):
    """Midpoint of the steepest decreasing jump of a sampled profile."""
    x = np.asarray(x)
    q = np.asarray(q)
    d = np.diff(q)
    i = int(np.argmin(d))
    return 0.5 * (x[i] + x[i + 1])


def burgers_demo(out_dir=None, N=6, grids=(15, 50), t_end=0.12, cfl=0.4,
                 q0=transonic_gaussian, ref_cells=4000):
    """Shock formation from transonic Gaussian data: high-order runs on coarse
    grids plus the fine-grid Roe reference. Returns {label: (x, q)}."""
    results = {}
    basis = build_basis(N)
    for M in grids:
        out = f"{out_dir}/burgers_N{N}_M{M}.csv" if out_dir else None
        config = RunConfig(degree=N, method="b", flux="burgers", cells=M, cfl=cfl,
                           t_end=t_end, limiter=True, q0=q0, out=out)
        state = run(config)
        results[f"M{M}"] = (state.mesh.interfaces(), state.pt.copy())
    xr, qr = roe_burgers_reference(q0, ref_cells, t_end)
    results["reference"] = (xr, qr)
    if out_dir:
        with open(f"{out_dir}/burgers_reference.csv", "w", newline="\n") as fh:
            fh.write(f"# roe,cells={ref_cells},t={t_end:.17g}\n")
            fh.write("x,q\n")
            for x, q in zip(xr, qr):
                fh.write(f"{x:.17g},{q:.17g}\n")
    return results


def cfl_table(degrees=(2, 3, 4, 5, 6)):
    """Maximum CFL numbers for both methods, as CSV text."""
    lines = ["N,method_a,method_b"]
    for N in degrees:
        lines.append(f"{N},{cfl_max(N, 'a'):.3f},{cfl_max(N, 'b'):.3f}")
    return "\n".join(lines) + "\n"
