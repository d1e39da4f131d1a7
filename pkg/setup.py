"""Build script: compiles the optional fast-path kernel extension.

The compiled extension is strictly optional. If Cython or a C compiler is
unavailable (or QARS_PURE_PYTHON=1 is set), the package installs without it
and falls back to the pure-Python kernels at import time.

No -ffast-math: both backends must produce bit-identical IEEE-754 results.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("QARS_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "qars._kernels._fast",
                    ["src/qars/_kernels/_fast.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
