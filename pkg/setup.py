"""Builds the optional Cython kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("GANZ_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/ganz/_kernels.pyx"],
            compiler_directives={"language_level": "3", "boundscheck": False},
        )

setup(ext_modules=ext_modules)
