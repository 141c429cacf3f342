"""Builds the optional compiled kernel extension.

The package works without it (a numpy fallback is selected at import); the
extension is skipped when Cython or a C compiler is unavailable.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("activeflux._kernels_cy",
                   ["src/activeflux/_kernels_cy.pyx"],
                   include_dirs=[numpy.get_include()],
                   define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
