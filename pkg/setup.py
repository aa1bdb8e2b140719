from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "catx._biclosed_cy",
                ["src/catx/_biclosed_cy.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install the pure-Python package only.
    # catx.kernels falls back to the interpreted sweep at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
