"""Build script: compiles the optional Cython kernel.

The package works without the extension (qcharsum._kernel falls back to the
pure-Python twin), so any build failure here should be treated as "skip the
extension", not as a fatal error.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qcharsum._kernel_cy",
                ["src/qcharsum/_kernel_cy.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
