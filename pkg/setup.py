"""Build script: compiles the optional Cython kernel extension.

The package works without the extension; lexseg.kernels falls back to the
pure-Python implementation when the compiled module is absent.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lexseg/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
