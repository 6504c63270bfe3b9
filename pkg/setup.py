"""Build script for the optional compiled kernel.

The package is pure Python; the Cython extension only accelerates the
dense complex matrix kernels.  If no compiler (or no Cython) is
available the build falls through and the pure-Python kernels are used.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "diracsplit.kernels._cykernel",
                ["src/diracsplit/kernels/_cykernel.pyx"],
                # keep results bit-compatible with the pure kernels: no
                # fused multiply-adds, no fast-math reassociation
                extra_compile_args=["-O2", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
