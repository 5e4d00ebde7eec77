from .ansatz import AnsatzSolution, linear_ansatz_solve, nullspace
from .membership import (CertificateTerm, MembershipVerdict, homogeneous_gradings, ideal_membership,
                         verify_certificate)
from .overlaps import Ambiguity, is_confluent, overlap_report
from .rewrite import (Caps, CapExceeded, MonomialOrder, OrientationError, RewriteRule,
                      RewriteSystem, interreduce, normal_form, orient)

__all__ = [
    "Ambiguity",
    "AnsatzSolution",
    "Caps",
    "CapExceeded",
    "CertificateTerm",
    "MembershipVerdict",
    "MonomialOrder",
    "OrientationError",
    "RewriteRule",
    "RewriteSystem",
    "homogeneous_gradings",
    "ideal_membership",
    "interreduce",
    "is_confluent",
    "linear_ansatz_solve",
    "normal_form",
    "nullspace",
    "orient",
    "overlap_report",
    "verify_certificate",
]
