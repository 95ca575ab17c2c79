from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install the pure-Python kernels only.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "cleanring._gfpoly_c",
                ["src/cleanring/_gfpoly_c.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
