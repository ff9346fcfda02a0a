import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# twins in shotgunwsd._pykernels when the extension is absent.
ext_modules = []
if os.environ.get("SHOTGUNWSD_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("shotgunwsd._ckernels", ["src/shotgunwsd/_ckernels.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
