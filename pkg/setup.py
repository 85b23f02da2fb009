"""Build hook for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time); building it just makes the counting kernels much faster.
Build in place with:

    python setup.py build_ext --inplace
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("equiseq._kernels", ["src/equiseq/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
