# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .functions import (FUNCTION_KINDS, PointFunction, TestFunction, mcshane_extend, window, clamped_identity,
                        letter_indicator, free_boundary_harmonic, constant, product, build_functions)
from .transfer import (transfer_on_group, transfer_on_action, transfer_function, action_transfer_function,
                       restrict_to_orbit, harmonic_residual_action, harmonic_residual_group,
                       harmonic_transfer_check, transfer_identities_check, restriction_law_check)
from .pi import PiResult, iter_pi, iterate_pi, poisson_product, monotone_square_check
from .liouville import LiouvilleScan, liouville_scan
from .montecarlo import (WalkConfig, MCEstimate, StepSampler, trial_rng, sample_walk, sample_action_walk, run_trials,
                         empirical_transfer, empirical_action_transfer, empirical_action_profile)
