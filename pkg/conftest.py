# ------------------------------------------------------------------------
# walkbench: random walks on groups and their actions
# ------------------------------------------------------------------------
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from dualnorm.flat_norm import set_flat_norm_defaults  # noqa: E402
from exact.weights import set_weight_mode  # noqa: E402


@pytest.fixture(autouse=True)
def exact_mode():
    set_weight_mode('exact')
    set_flat_norm_defaults('auto', 24, 2000)
    yield
    set_weight_mode('exact')
    set_flat_norm_defaults('auto', 24, 2000)
