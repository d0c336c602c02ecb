"""Build script: compiles the optional primality-kernel extension.

The package is fully functional without it (the pure-Python kernels are
selected at import time), so the extension is marked optional and any build
failure degrades to the pure implementation.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "expseq._kernels._speedups",
                ["src/expseq/_kernels/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    for ext in extensions:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=extensions)
