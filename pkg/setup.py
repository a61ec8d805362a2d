# Builds the optional compiled grid-evaluation kernel. The package works
# without it (a numpy fallback is selected at import), so the extension is
# skipped rather than fatal when Cython is unavailable.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "angmom._gridkernel",
                ["src/angmom/_gridkernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
