"""Build script for the optional compiled enumeration kernel.

The package is pure Python except for one hot loop (brute-force subset
enumeration).  If Cython or a C compiler is unavailable, or SEPSETS_NO_EXT
is set, the extension is skipped and the pure-Python kernel is used at
runtime instead.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SEPSETS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sepsets._fastcount",
                    ["src/sepsets/_fastcount.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
