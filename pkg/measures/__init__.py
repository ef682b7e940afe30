# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
from .measure import (FinMeasure, SignedFinMeasure, dirac, uniform, mixture, support_mix, tv_distance, sub,
                      pushforward, weights_close)
from .convolution import (PowerStep, convolve, signed_convolve, iter_convolution_powers, convolution_power,
                          cesaro_average, pushforward_inverse, translate, right_translate, nondegeneracy_probe)
from .io import write_measure, read_measure, measure_lines
from .walks import WALKS, RECIPES, simple_walk, lazy_walk, atoms_measure, build_measure
