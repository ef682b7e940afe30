# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from dualnorm import build_metric
from .schedule import TAU_KINDS, CHAIN_KINDS, KVSchedule, geometric_taus, compute_nm, ball_chain, build_schedule
from .oracle import ORACLES, BoxOracle, HaarOracle, mixing_weight, base_target, build_oracle
from .builder import KVLevel, KVResult, product_set, kv_build, verify_conditions, verify_claims, build_kv


def build_kv_measure(config, group):
    """The truncated mixture as a step measure, for MEASURE.recipe = kv."""
    result = build_kv(config, group, build_metric(config.METRIC, group), config.NUMERIC.num_workers)
    return result.mu, {'kv_depth': result.schedule.depth, 'kv_tail': str(result.tail)}
