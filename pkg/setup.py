"""Build script.

The Monte Carlo trial loop has a compiled core. When Cython is available the
extension is built and `petersburg.simulation` picks it up at import time;
without Cython the package installs pure Python and the interpreted kernel
(bit-identical results, slower) is used instead.

Compile in place for development:

    python setup.py build_ext --inplace
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/petersburg/_mc_core.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
