from typing import Any, Dict, List, Sequence

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self
from dataclasses import dataclass, asdict

import numpy as np


@dataclass(kw_only=True)
class VerificationReport:
    """The outcome of one seeded verification suite.

    Violations are dimensionless (relative unless the suite states otherwise), and a trial fails
    when its violation exceeds the suite tolerance, so failures == 0 iff max_violation <= tolerance.
    """

    suite: str
    """Name of the suite."""
    trials: int
    """Number of randomized trials run."""
    failures: int
    """Trials (and fixed checks) whose violation exceeded the tolerance."""
    max_violation: float
    """Largest violation seen."""
    tolerance: float
    """Largest admissible violation."""
    seed: int
    """Master seed the per-trial generators derive from."""
    dim: int
    """Module dimension used by the suite."""
    elapsed_ms: float
    """Wall time; the only field allowed to differ between reruns."""

    @classmethod
    def from_violations(
        cls,
        *,
        suite: str,
        violations: Sequence[float],
        tolerance: float,
        seed: int,
        dim: int,
        elapsed_ms: float,
        trials: int,
    ) -> Self:
        """Summarizes per-trial violations (fixed checks included) into a report."""
        violations = np.asarray(violations, dtype=np.float64)
        # a NaN violation is a failure, not a silent pass
        violations = np.where(np.isnan(violations), np.inf, violations)
        return cls(
            suite=suite,
            trials=trials,
            failures=int(np.count_nonzero(violations > tolerance)),
            max_violation=float(np.max(violations, initial=0.0)),
            tolerance=tolerance,
            seed=seed,
            dim=dim,
            elapsed_ms=elapsed_ms,
        )

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def summarize(reports: List[VerificationReport]) -> Dict[str, Any]:
    """The JSON document printed by `verify`: one report, or every report plus a total."""
    if len(reports) == 1:
        return reports[0].to_dict()
    return {
        "reports": [report.to_dict() for report in reports],
        "failures": sum(report.failures for report in reports),
    }
