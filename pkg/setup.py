"""Build script: compiles the optional extension with the hot iteration kernels.

If Cython is unavailable the package still installs; fiberdyn.kernels then
selects the pure-Python backend at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "fiberdyn._kernels_cy",
                ["src/fiberdyn/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
