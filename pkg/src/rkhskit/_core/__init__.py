"""Core loop backend selection.

The compiled extension is preferred; set RKHSKIT_FORCE_PYTHON=1 to force
the pure-Python core (used by the backend benchmark and tests).
"""

import os

if os.environ.get("RKHSKIT_FORCE_PYTHON") == "1":
    from rkhskit._core._pycore import jacobi_eigen, kaczmarz_run

    BACKEND = "python"
else:
    try:
        from rkhskit._core._fastcore import jacobi_eigen, kaczmarz_run

        BACKEND = "compiled"
    except ImportError:
        from rkhskit._core._pycore import jacobi_eigen, kaczmarz_run

        BACKEND = "python"

__all__ = ["BACKEND", "jacobi_eigen", "kaczmarz_run"]
