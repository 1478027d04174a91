"""Exact computations with root systems and Chevalley groups."""
