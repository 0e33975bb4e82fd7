"""Build script: compiles the optional coloring-search kernel.

The package is pure Python except for ksgeom._solver, a Cython twin of
ksgeom._solver_py. The extension is marked optional: if Cython or a C
compiler is unavailable the build proceeds and the package falls back to
the pure backend at import time (see ksgeom.kernels).
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KSGEOM_NO_EXT") != "1":
    pyx = os.path.join("src", "ksgeom", "_solver.pyx")
    c_src = os.path.join("src", "ksgeom", "_solver.c")
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("ksgeom._solver", [pyx])],
            language_level="3",
            quiet=True,
        )
    except ImportError:
        if os.path.exists(c_src):
            ext_modules = [Extension("ksgeom._solver", [c_src])]

for ext in ext_modules:
    ext.optional = True

setup(ext_modules=ext_modules)
