"""Build script: compiles the optional Cython kernel when possible.

The package is fully functional without the extension (the pure-Python
kernels are always installed); ``optional=True`` keeps installs working on
machines without a C++ toolchain.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "coverdepth._kernels._speedups",
                ["src/coverdepth/_kernels/_speedups.pyx"],
                language="c++",
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
