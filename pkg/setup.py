"""Build script: compiles the optional Cython kernel module.

The package is fully functional without the extension; `cubicmaps._kernels`
falls back to the pure-Python reference kernels when the compiled module is
missing (or when CUBICMAPS_PURE_PYTHON=1 is set).
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
                "cubicmaps._kernels._speedups",
                ["src/cubicmaps/_kernels/_speedups.pyx"],
                # -ffp-contract=off keeps the float kernels bit-identical to
                # the pure-Python reference (no FMA contraction).
                extra_compile_args=["-O2", "-ffp-contract=off"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
