"""Caps that guard exhaustive audits against combinatorial blow-up.

Two independent limits exist: a representational one (ground sets never
exceed 30 elements, so subset masks fit one machine word) and the audit
caps below, which bound what the exhaustive operations are willing to
enumerate.  The environment variable ZONOFORGE_AUDIT_CAP overrides the
audit caps with a new maximal ground-set size.
"""
import os
from math import comb

from .errors import AuditTooLarge

ENV_VAR = "ZONOFORGE_AUDIT_CAP"

DEFAULT_AUDIT_CAP = 7
DEFAULT_TYPE_CAP = 20
COUNT_CAP = 10**6


def audit_cap() -> int:
    """Largest ground-set size exhaustive audits accept."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_AUDIT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise AuditTooLarge(f"{ENV_VAR}={raw!r} is not an integer") from None
    if value < 1:
        raise AuditTooLarge(f"{ENV_VAR} must be positive, got {value}")
    return value


def type_cap() -> int:
    """Largest cube count (number of d-subsets) tiling enumeration accepts."""
    if os.environ.get(ENV_VAR) is None:
        return DEFAULT_TYPE_CAP
    cap = audit_cap()
    return max(DEFAULT_TYPE_CAP, comb(cap, cap // 2))


def count_cap() -> int:
    """Hard ceiling on the number of tilings one enumeration may stream."""
    return COUNT_CAP


def require_audit(n: int, what: str = "audit") -> None:
    cap = audit_cap()
    if n > cap:
        raise AuditTooLarge(
            f"{what} over a ground set of size {n} exceeds the cap {cap}; "
            f"set {ENV_VAR} to raise it"
        )
