from typing import List, Optional
from concurrent.futures import ThreadPoolExecutor
import logging
import sys
import time

import tqdm

from config import ConfigManager
from core import UnknownSuite
from .sampling import SamplingParams, check_seed, trial_rng
from .stats import VerificationReport
from .suites import ALL, SUITES, Suite, TrialContext

log = logging.getLogger(__name__)


def rescale(violation: float, own_tolerance: float, suite_tolerance: float) -> float:
    """Expresses a fixed check's violation in units of the suite tolerance.

    A fixed check passes iff violation <= own_tolerance, and after rescaling iff the result is
    <= suite_tolerance, so one count of failures covers both.
    """
    if own_tolerance == 0 or suite_tolerance == 0:
        return 0.0 if violation <= own_tolerance else float("inf")
    return violation * suite_tolerance / own_tolerance


class VerificationRunner:
    """Runs seeded property suites.

    Every trial draws from its own generator, derived from (seed, suite, trial index) alone, so
    the reports do not depend on the number of workers or on the order in which trials finish.
    """

    def __init__(
        self,
        config: Optional[ConfigManager] = None,
        show_progress: bool = True,
        workers: int = 1,
    ):
        self.config = config or ConfigManager.default()
        self.params = SamplingParams.from_config(self.config.get_section("sampling"))
        self.show_progress = show_progress
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers

    def suites(self, name: str) -> List[Suite]:
        if name == ALL:
            return list(SUITES.values())
        if name not in SUITES:
            raise UnknownSuite(name)
        return [SUITES[name]]

    def run(self, name: str, trials: int, seed: int, dim: int) -> List[VerificationReport]:
        """Runs one suite, or every suite for "all", in registry order."""
        check_seed(seed)
        if trials < 0:
            raise ValueError(f"trials must be non-negative, got {trials}")
        if dim < 1:
            raise ValueError(f"dim must be positive, got {dim}")
        return [self.run_suite(suite, trials, seed, dim) for suite in self.suites(name)]

    def run_suite(self, suite: Suite, trials: int, seed: int, dim: int) -> VerificationReport:
        tolerance = self.config.tolerance(suite.name)
        start = time.perf_counter()

        def trial(index: int) -> float:
            ctx = TrialContext(trial_rng(seed, suite.name, index), dim, self.params, seed, index)
            return float(suite.trial(ctx))

        violations: List[float] = []
        with tqdm.tqdm(
            total=trials,
            desc=suite.name,
            file=sys.stderr,
            disable=not self.show_progress,
            leave=False,
        ) as progress:
            if self.workers == 1:
                for index in range(trials):
                    violations.append(trial(index))
                    progress.update()
            else:
                with ThreadPoolExecutor(max_workers=self.workers) as pool:
                    # map yields in submission order, whatever the completion order
                    for violation in pool.map(trial, range(trials)):
                        violations.append(violation)
                        progress.update()

        for check in suite.fixed_checks:
            own = self.config.tolerance(check.tolerance_key)
            violation = check.check(dim)
            log.debug("%s: fixed check %r gave %g (tolerance %g)", suite.name, check.name, violation, own)
            violations.append(rescale(violation, own, tolerance))

        report = VerificationReport.from_violations(
            suite=suite.name,
            violations=violations,
            tolerance=tolerance,
            seed=seed,
            dim=dim,
            elapsed_ms=(time.perf_counter() - start) * 1000,
            trials=trials,
        )
        log.info(
            "%s: %d trials, %d failures, max violation %.3g (tolerance %.3g)",
            report.suite,
            report.trials,
            report.failures,
            report.max_violation,
            report.tolerance,
        )
        return report
