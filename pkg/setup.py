"""Build script: compiles the optional elimination-kernel extension.

The package is fully functional without the extension (pure-Python kernels
are selected at import time); any Cython or compiler failure just skips it.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/cotorlab/_ckernels.pyx",
        compiler_directives={"language_level": 3},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"cotorlab: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
