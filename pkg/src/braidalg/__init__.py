"""Free braided associative algebras with diagonal braidings, in exact arithmetic."""

__version__ = "0.1.0"
