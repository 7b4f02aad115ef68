import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CONDCHROM_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "condchrom._kernel_cy",
                    ["src/condchrom/_kernel_cy.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: the pure-Python kernel is used at runtime.
        pass

setup(ext_modules=ext_modules)
