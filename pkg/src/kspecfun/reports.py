"""Report record shared by the verification registry and the inequality checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, eq=True)
class IdentityReport:
    """Verdict for one identity at one grid point.

    ``lhs``/``rhs`` and the diffs are None for SKIP verdicts (pole or
    domain exclusions).  Instances are not hashable (params is a dict).
    """

    identity_id: str
    params: dict
    lhs: float | None
    rhs: float | None
    abs_diff: float | None
    rel_diff: float | None
    verdict: str  # PASS | FAIL | SKIP
    note: str = ""

    __hash__ = None
