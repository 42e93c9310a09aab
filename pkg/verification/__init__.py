from .sampling import (
    SamplingParams,
    trial_rng,
    check_seed,
    random_bicomplex,
    random_ket,
    random_space,
    random_basis,
    random_null_cone_scalar,
    sampling_summary,
    MAX_SEED,
)
from .stats import VerificationReport, summarize
from .suites import ALL, SUITES, Suite, FixedCheck, TrialContext, suite_names
from .runner import VerificationRunner, rescale
