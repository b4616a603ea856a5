"""Build script: compiles the signature-rule kernel when Cython is available.

The package is fully functional without the extension; affsat._backend falls
back to the pure-Python kernel at import time.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("affsat._kernels", ["src/affsat/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("affsat: Cython not available, building pure-Python only", file=sys.stderr)

setup(ext_modules=ext_modules)
