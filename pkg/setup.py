"""Build script: compiles the optional scan kernel.

The package works without the compiled extension (a NumPy fallback is
selected at import time), so a failing C build degrades gracefully
instead of aborting the install.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken toolchain
            print(f"warning: skipping compiled scan kernel ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not compile {ext.name} ({exc}); "
                  "the pure-Python scan fallback will be used")


try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("delpezzo._speedups", ["src/delpezzo/_speedups.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
