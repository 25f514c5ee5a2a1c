import os

from setuptools import setup

ext_modules = []
if os.environ.get("EXACTPOLY_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:  # fall back to the pure-Python kernel
        pass
    else:
        ext_modules = cythonize(["src/exactpoly/_ckernel.pyx"], language_level=3, quiet=True)

setup(ext_modules=ext_modules)
