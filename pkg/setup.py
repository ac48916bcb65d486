"""Build the optional compiled sweep kernels.

The package works without the extension (a pure-Python fallback is selected at
import time), so a missing C compiler or Cython only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "hyperfact.kernels.csweeps",
                ["src/hyperfact/kernels/csweeps.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
