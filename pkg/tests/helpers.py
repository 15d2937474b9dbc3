"""Shared construction helpers and closed-form oracles for the test suite."""

import functools
import math

import numpy as np

from heisenring import ModelSpec, decompose

SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0)
SINGLET_RHO = np.outer(SINGLET, SINGLET).astype(complex)


@functools.lru_cache(maxsize=None)
def cached_decompose(n, j, delta=1.0, b=0.0):
    spec = ModelSpec.uniform(n, j, delta, b)
    return spec, decompose(spec)


# --- independent closed forms for the two- and three-site isotropic rings ---
# (log Z written in shifted form so beta up to ~100 stays finite)

def log_z_two_site(beta, j=1.0):
    """log(3 exp(-2 beta j) + exp(6 beta j)), evaluated stably."""
    return 6.0 * beta * j + math.log1p(3.0 * math.exp(-8.0 * beta * j))


def u_two_site(beta, j=1.0):
    """6 j (exp(-2 beta j) - exp(6 beta j)) / (3 exp(-2 beta j) + exp(6 beta j))."""
    r = 3.0 * math.exp(-8.0 * beta * j)
    return 6.0 * j * (r / 3.0 - 1.0) / (r + 1.0)


def c_two_site(beta, j=1.0):
    """max{0, (exp(8 beta j) - 3) / (exp(8 beta j) + 3)}."""
    r = 3.0 * math.exp(-8.0 * beta * j)
    return max(0.0, (1.0 - r) / (1.0 + r))


def u_three_site(beta, j=1.0):
    return -3.0 * j * math.tanh(3.0 * beta * j)
