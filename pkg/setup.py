"""Builds the optional compiled loop-search kernel.

The package is fully functional without the extension; `hopfloop._backend`
falls back to the pure-Python kernel when the build is skipped.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hopfloop._ipsearch", ["src/hopfloop/_ipsearch.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
