"""Residue symbols, Gauss sums and Hecke characters over Z[i], with
one-level density experiments for the quadratic and quartic families."""

from . import _kernel

__version__ = "0.1.0"

KERNEL_LANE = _kernel.active_lane()
