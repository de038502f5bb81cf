import math

import numpy as np


def linear_grid(start, stop, step):
    """Inclusive grid ``start + i*step`` with ``floor((stop-start)/step) + 1`` points.

    A relative slack of 1e-9 keeps a stop value that is an exact multiple of
    the step from being dropped by floating-point division.
    """
    start, stop, step = float(start), float(stop), float(step)
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step:g}")
    if not start < stop:
        raise ValueError(f"start must be < stop, got {start:g} >= {stop:g}")
    n = math.floor((stop - start) / step + 1e-9) + 1
    grid = start + step * np.arange(n, dtype=float)
    # strip representation noise such as 28.000000000000004
    return np.round(grid, 9)
