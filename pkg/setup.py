"""Build script for the optional compiled kernel extension.

The package works without the extension; ``ryprep._kernels`` falls back to
the NumPy implementation when the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ryprep._kernels._core", ["src/ryprep/_kernels/_core.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
