"""Build script: compiles the optional Cython kernel module.

The package is fully functional without the compiled extension (a pure
Python fallback is selected at import time), so any failure to build it
is downgraded to a warning.  Set FINITOP_PURE=1 to skip the extension
entirely.
"""

import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"skipping compiled kernels: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


ext_modules = []
if not os.environ.get("FINITOP_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("finitop._core", ["src/finitop/_core.pyx"])],
            language_level=3,
        )
    except ImportError:
        warnings.warn("Cython not available; installing pure Python only")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
