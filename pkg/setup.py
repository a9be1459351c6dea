from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("spinelab._fermat", ["src/spinelab/_fermat.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython: install pure-Python only, the kernel dispatcher falls back.
    ext_modules = []

setup(ext_modules=ext_modules)
