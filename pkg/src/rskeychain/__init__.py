"""Chunked XOR cipher whose keys are refreshed from Reed-Solomon parity."""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
