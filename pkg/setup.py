"""Build script: compiles the optional congruence-closure kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing Cython or C compiler is not fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("multifrac._closure_cy", ["src/multifrac/_closure_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
