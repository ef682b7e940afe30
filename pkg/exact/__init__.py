from .dyadic import (Dyadic, dyadic_add, dyadic_sub, dyadic_mul, dyadic_scale_pow2,
                     dyadic_parse, dyadic_format, pow2)
from .weights import (get_weight_mode, set_weight_mode, weight_mode, is_exact, as_weight,
                      format_weight, parse_weight, weight_tolerance)
