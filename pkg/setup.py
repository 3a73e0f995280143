"""Build script: compiles the optional Cython kernels when Cython and a C
compiler are available, and silently falls back to the pure-Python paths
otherwise (the package is fully functional uncompiled, just slower for the
large multi-start searches)."""

import os

from setuptools import Extension, setup

PYX = "src/cpseq/kernels/_ckernels.pyx"

ext_modules = []
if os.environ.get("CPSEQ_NO_EXT") != "1" and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "cpseq.kernels._ckernels",
                    sources=[PYX],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
