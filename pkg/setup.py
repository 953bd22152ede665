import os

from setuptools import Extension, setup

# The compiled kernels are optional; without Cython (or with
# ARROWCAT_NO_EXT=1) the package installs with the pure-Python kernels only.
ext_modules = []
if not os.environ.get("ARROWCAT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("arrowcat.exactmat._ckernels", ["src/arrowcat/exactmat/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
