"""Positive-definite kernel toolkit: RKHS projections and ridge
regression, Kaczmarz iteration with effectiveness certificates and dual
Parseval frames, Karhunen-Loeve / PCA compression, frame bounds, and
Gaussian process realizations of kernels.
"""

from rkhskit._core import BACKEND as core_backend

__version__ = "0.1.0"
__all__ = ["core_backend", "__version__"]
