"""Build hook: compile the optional integer-geometry kernel.

The package is pure Python and fully functional without the extension.
If Cython (or a C compiler) is unavailable the build silently degrades
to the pure backend; onebridge.kernel picks whichever imported.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/onebridge/_kernel_c.pyx"],
        language_level=3,
        quiet=True,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
