"""Certified verification of double-bubble area inequalities in S3 and H3.

The package evaluates rigorous lower bounds on the concave part and upper
bounds on the double-bubble part of the Hutchings function, runs the
subdivision and sweep procedures over the required volume domains, and emits
machine-checkable certificates plus plot data.
"""

from .backend import backend_name, force_python_backend
from .bounds import (Rect, VolumePair, critical_ratio, g_lower_rect,
                     h_upper_rect, hutchings_point, limit_along_ray)
from .certificate import (certificate_bytes, load_certificate,
                          verify_certificate, write_certificate)
from .enclosure import Enclosure, SlackConfig, enclose_eval, pad_lower, pad_upper
from .engine import (CLAIMS, RegionClaim, Triangle, classify_coverage,
                     prove_theorem, sweep_band_h3, verify_rectangle_s3,
                     verify_triangle_s3)
from .errors import (BubbleProofError, CertificateError, CurvatureUnderflow,
                     DegenerateConfig, DepthExceeded, DomainError,
                     InfeasibleBand, InfeasibleTarget, NoConvergence,
                     RegionViolation, StepFailure, Uncovered)
from .geometry import (CapSpec, DiskCapSpec, S3_TOTAL_VOLUME, SpaceTag,
                       cap_area, cap_volume, cap_volume_diskform,
                       flat_sphere_area, mean_curvature, sphere_area,
                       sphere_volume)
from .solvers import (BandTarget, SdbRadiiS3, StepperState, StepWindow,
                      curvature_from_volume, curvature_pair_step,
                      curvatures_for_sdb_h3, radii_equal_volumes_s3,
                      radii_for_sdb_s3, radius_from_volume)

__version__ = "0.1.0"
