"""Planar spirals with monotone curvature.

Fair-curve families (pseudospirals, log-aesthetic curves, GLACs,
superspirals), discrete and algebraic spiral catalogs, curvature-graph
diagnostics and line-to-circle transition fitting.
"""
from .algebraic import PolarSpiral, SpiralKind, polar_rho, polar_sample
from .analysis import (Direction, LcgFit, LcgPoint, MonotonicityReport, check_monotone_curvature,
                       compute_lcg, fit_lcg_line, lcg_from_samples)
from .core import (ArcLength, CurveSamples, IntrinsicCurve, Pose, TangentAngle, arc_length_at,
                   curvature_at, position_at, sample, tangent_angle_at)
from .discrete import ArcChain, PolylineSpiral, golden_spiral, spirangle, theodorus
from .errors import *  # noqa: F401,F403
from .fairfam import (GlacParams, LacParams, PseudospiralParams, ShiftKind, SuperspiralParams,
                      make_glac, make_lac, make_pseudospiral, make_superspiral,
                      pseudospiral_closed_form)
from .hyperfun import SeriesResult, hyp1f2, hyp2f1, pochhammer, validate_superspiral_params
from .quadrature import QuadratureResult, integrate
from .transition import TransitionResult, TransitionSpec, fit_line_to_circle, verify_g2

__version__ = "0.1.0"
