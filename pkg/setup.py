"""Build script: compiles the optional fast-symbol extension when Cython and a
C compiler are available.  The package works without it (pure-Python kernels
are selected at import time), so any build failure here downgrades to a
warning instead of aborting the install."""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            print(f"warning: compiled kernel skipped ({exc}); "
                  "falling back to pure Python", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure Python", file=sys.stderr)


ext_modules = []
if os.environ.get("GAUSSDENSITY_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gaussdensity/_kernel/_fast.pyx"],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available; compiled kernel skipped",
              file=sys.stderr)

setup(
    ext_modules=ext_modules,
    cmdclass={"build_ext": optional_build_ext},
)
