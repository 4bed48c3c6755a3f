"""Build script. The compiled interval kernel is optional: if Cython or a C
compiler is missing the package installs with the pure-Python backend only."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "bubbleproof._kernel",
                ["src/bubbleproof/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
