"""Numerical thresholds used by the classification and rank decisions.

The values are read at call time, so the :func:`tolerances` context manager
(or the CLI flags) can override them for a block of work.
"""

from contextlib import contextmanager
from dataclasses import dataclass, fields


@dataclass
class Tolerances:
    #: sign decisions on determinants of unit-normalized vectors
    tau_class: float = 1e-8
    #: rank and singularity decisions
    tau_rank: float = 1e-10
    #: relative on-quadric test, |(X|X)| <= tau_proper * |X|^2
    tau_proper: float = 1e-9


TOL = Tolerances()


@contextmanager
def tolerances(**overrides):
    """Temporarily override fields of :data:`TOL`.

    >>> with tolerances(tau_class=1e-6):
    ...     TOL.tau_class
    1e-06
    """
    names = {f.name for f in fields(Tolerances)}
    unknown = set(overrides) - names
    if unknown:
        raise TypeError(f"unknown tolerance(s): {sorted(unknown)}")
    saved = {k: getattr(TOL, k) for k in overrides}
    for k, v in overrides.items():
        setattr(TOL, k, float(v))
    try:
        yield TOL
    finally:
        for k, v in saved.items():
            setattr(TOL, k, v)
