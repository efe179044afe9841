"""Build the optional Cython kernels; the package falls back to pure Python without them."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HYPERPOINCARE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "hyperpoincare._ckernels",
                    ["src/hyperpoincare/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
