"""Build script: compiles the optional Cython search kernel.

The package works without the extension (a pure-Python kernel is used as a
fallback), so any failure to cythonize or compile is non-fatal.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ipfkit/_kernel_c.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"ipfkit: skipping Cython kernel build ({exc!r}); "
          "the pure-Python kernel will be used")

setup(ext_modules=ext_modules)
