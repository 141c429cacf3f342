"""Hybrid finite-element/finite-volume solver for 1D scalar conservation laws.

Degrees of freedom are shared interface point values plus in-cell moments;
the point values are advanced either semi-discretely with upwind finite
differences and SSP-RK3 (method A) or fully discretely along characteristics
(method B).
"""

from .basis import BasisSet, build_basis, moment_functional, poly_deriv, poly_eval, reconstruct
from .errors import CflViolationError, SolverError, StepFailureError
from .kernels import BACKEND
from .method_a import build_fd, method_a_run, point_rhs, ssp_rk3_step
from .method_b import method_b_run, method_b_step, trace_advection, trace_burgers
from .quadrature import QuadratureRule, gauss_lobatto, integrate, space_rule, time_rule
from .scheme_core import Flux, advection, burgers, moment_rhs, moment_rhs_linear_fast
from .stability import assemble_A, assemble_B, cfl_max
from .state import Mesh, State, eval_global, l1_error_points, project_initial, total_mass

__version__ = "0.1.0"
