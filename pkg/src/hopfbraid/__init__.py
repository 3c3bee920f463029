"""Braided Hopf algebras of Suzuki type and their ribbon invariants."""

__version__ = "0.1.0"
