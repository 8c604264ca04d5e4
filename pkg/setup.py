"""Build script: compiles the optional fast core.

The extension is best-effort; if Cython or a C compiler is missing the
package falls back to the pure-Python core at import time.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "rkhskit._core._fastcore",
                ["src/rkhskit/_core/_fastcore.pyx"],
                include_dirs=[np.get_include()],
                # -ffp-contract=off keeps the compiled core bit-identical
                # to the pure-Python core (no FMA fusion).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
