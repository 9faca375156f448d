"""Build script: compile the arithmetic kernel extension when possible.

The package is fully functional without the extension (a pure-Python twin of
the kernel is selected at import time), so any failure here downgrades to a
pure build instead of aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/dualtoeplitz/_core.pyx"],
        language_level=3,
    )
except ImportError:
    print(
        "Cython not available; installing with the pure-Python kernel only",
        file=sys.stderr,
    )

setup(ext_modules=ext_modules)
