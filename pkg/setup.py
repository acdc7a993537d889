import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the compiled kernels if possible, fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernels skipped ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using pure Python")


ext_modules = []
if os.environ.get("SGCONES_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sgcones._kernels", ["src/sgcones/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
