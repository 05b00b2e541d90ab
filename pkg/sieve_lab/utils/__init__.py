"""Helpers shared by the sieve laboratory modules."""
