from setuptools import Extension, setup

# The compiled convolution kernel is optional: without Cython (or a working
# compiler) the package falls back to the pure-Python twin at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("quadguess._convolve_c",
                   ["src/quadguess/_convolve_c.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
