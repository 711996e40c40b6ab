"""Build script for the optional compiled kernel extension.

The package works without the extension: renalchain.kernels falls back to
the numpy implementations when renalchain._core is absent. Any failure
while compiling therefore downgrades to a warning instead of aborting the
install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or linker missing
            print(f"warning: compiled kernels skipped: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed: {exc}", file=sys.stderr)


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        print(f"warning: compiled kernels skipped: {exc}", file=sys.stderr)
        return []
    ext = Extension(
        "renalchain._core",
        sources=["src/renalchain/_core.pyx"],
        include_dirs=[numpy.get_include()],
        libraries=["crypto"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
