"""isodist: partial orders and pseudo-metrics from isomorphism invariants
on finite data."""

__version__ = "0.1.0"
