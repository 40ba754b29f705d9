"""Murmuration-binned features for low-degree L-functions, small neural
networks trained on them, and analytic rank/root-number estimators."""

__version__ = "0.1.0"
