# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .metrics import (METRIC_KINDS, DEFAULT_BASE_POINTS, MetricSpec, WordMetric, DisplacementMetric, DiscreteMetric,
                      TableMetric, build_metric)
from .simplex import SimplexTableau, simplex_max
from .flat_norm import (BACKENDS, FlatNormResult, flat_norm, flat_norm_value, witness_value, merged_support,
                        choose_backend, result_tolerance, set_flat_norm_defaults, get_flat_norm_defaults)
from .oracle import flat_norm_oracle, prufer_edges
from .deficiency import (DeficiencyProfile, deficiency, deficiency_result, deficiencies, deficiency_profile,
                         iter_deficiency_profile, contraction_check, right_invariance_check)
