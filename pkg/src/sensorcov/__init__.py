"""Phenomenological sensor-coverage simulator for automated vehicles."""

__version__ = "0.1.0"
