"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure numpy
fallback is selected at import time), so any failure to cythonize or
compile downgrades to a pure-Python install instead of aborting.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "eucliff._speedups",
                sources=["src/eucliff/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
