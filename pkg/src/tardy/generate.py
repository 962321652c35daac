"""Random instances with an exact number of distinct due dates,
processing times and weights.

Randomness comes from NumPy's PCG64 bit generator (``RNG_ALGORITHM``),
whose stream is fixed across platforms for a given seed.
"""

from __future__ import annotations

import numpy as np

from .core import Instance

RNG_ALGORITHM = "numpy.random.PCG64"

DEFAULT_P_RANGE = (1, 10)
DEFAULT_W_RANGE = (1, 10)


def default_d_range(n: int, nu_d: int) -> tuple[int, int]:
    return 1, max(4 * n, nu_d)


def make_rng(*seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(list(seed))))


def distinct_values(rng: np.random.Generator, lo: int, hi: int, count: int) -> list[int]:
    width = hi - lo + 1
    if count > width:
        raise ValueError(f"range [{lo}, {hi}] holds fewer than {count} distinct values")
    picks = rng.choice(width, size=count, replace=False) if count else []
    return sorted(lo + int(v) for v in picks)


def assign_values(rng: np.random.Generator, n: int, values: list[int]) -> list[int]:
    """Each value at least once, the remaining jobs uniformly."""
    nu = len(values)
    out = [0] * n
    order = rng.permutation(n)
    extra = rng.integers(0, nu, size=n - nu)
    for slot, job in enumerate(order):
        out[int(job)] = values[slot] if slot < nu else values[int(extra[slot - nu])]
    return out


def generate_instance(
    n: int,
    nu_d: int,
    nu_p: int,
    nu_w: int,
    seed: int | tuple[int, ...] = 0,
    p_range: tuple[int, int] = DEFAULT_P_RANGE,
    d_range: tuple[int, int] | None = None,
    w_range: tuple[int, int] = DEFAULT_W_RANGE,
    name: str | None = None,
) -> Instance:
    if n < 0:
        raise ValueError("n must be non-negative")
    for label, nu in (("nu_d", nu_d), ("nu_p", nu_p), ("nu_w", nu_w)):
        if n == 0 and nu != 0:
            raise ValueError(f"{label} must be 0 for an empty instance")
        if n > 0 and not 1 <= nu <= n:
            raise ValueError(f"{label}={nu} must lie in [1, n={n}]")
    for lo, _ in (p_range, w_range) + ((d_range,) if d_range else ()):
        if lo < 0:
            raise ValueError("value ranges must be non-negative")
    d_range = d_range or default_d_range(n, nu_d)
    seeds = seed if isinstance(seed, tuple) else (seed,)
    rng = make_rng(*seeds)
    ps = assign_values(rng, n, distinct_values(rng, *p_range, nu_p))
    ds = assign_values(rng, n, distinct_values(rng, *d_range, nu_d))
    ws = assign_values(rng, n, distinct_values(rng, *w_range, nu_w))
    return Instance.from_tuples(zip(ps, ds, ws), name)
