"""Build script: compiles the optional integer-kernel extension when Cython is present.

The package is fully functional without the extension; frobtope.kernels falls
back to pure-Python implementations at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [Extension("frobtope._core", ["src/frobtope/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
