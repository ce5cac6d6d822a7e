"""qcv: machine-checkable certificates for the Gegenbauer-polynomial
bounds, closed-form sum identities, and induction inequalities behind a
six-sphere uniqueness argument."""

__version__ = "0.1.0"
