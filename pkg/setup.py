from setuptools import Extension, setup

# The compiled scan kernel is optional: the package falls back to a numpy
# implementation at import time if the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("asphere._scan", ["src/asphere/_scan.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
