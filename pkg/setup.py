"""Build the optional compiled kernel.

Prefers cythonizing src/orcov/_fastcore.pyx when Cython is available;
otherwise compiles the pregenerated _fastcore.c; if neither works the
package installs without the extension and the pure-Python kernel is
selected at import.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

PYX = "src/orcov/_fastcore.pyx"
C = "src/orcov/_fastcore.c"


def make_extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None and os.path.exists(PYX):
        return cythonize(
            [Extension("orcov._fastcore", [PYX])],
            compiler_directives={"language_level": 3},
        )
    if os.path.exists(C):
        return [Extension("orcov._fastcore", [C])]
    return []


class OptionalBuildExt(build_ext):
    """Skip the extension (pure fallback) if compilation fails."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernel skipped ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled kernel skipped ({exc}); using pure-Python fallback")


setup(
    ext_modules=make_extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
