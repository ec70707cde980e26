"""Build script: compiles the optional row-reduction speedup when possible.

The package is pure Python; the Cython extension only accelerates the hot
elimination kernel. Set LEIBNIZALG_NO_EXT=1 to skip compilation entirely.
A failed compile falls back to the pure kernel instead of failing the install.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing: keep the pure kernel
            print(f"warning: speedup extension not built ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: speedup extension not built ({exc}); using pure-Python kernel")


ext_modules = []
if not os.environ.get("LEIBNIZALG_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/leibnizalg/_rref_c.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; using pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
