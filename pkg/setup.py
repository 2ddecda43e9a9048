import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    compile_args = []
    if not sys.platform.startswith("win"):
        # -ffp-contract=off keeps the compiled kernels bit-compatible with
        # the pure-Python fallback (no fused multiply-adds).
        compile_args = ["-O3", "-ffp-contract=off"]
    ext_modules = cythonize(
        [
            Extension(
                "coquat._kernels",
                ["src/coquat/_kernels.pyx"],
                extra_compile_args=compile_args,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install pure-Python only; the backend
    # selector falls back automatically.
    pass

setup(ext_modules=ext_modules)
