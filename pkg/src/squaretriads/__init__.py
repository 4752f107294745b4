"""Exact construction, composition and certification of triads of positive
integers whose sum, pairwise-product sum and product are all perfect squares."""

__version__ = "0.1.0"
