"""Build script for the optional compiled kernel.

The package works without the extension: zonoforge.kernels falls back to
the pure-Python implementation when zonoforge._kernel cannot be imported.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "zonoforge._kernel",
                ["src/zonoforge/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)
