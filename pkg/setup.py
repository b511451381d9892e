from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("acmcurves._corec", ["src/acmcurves/_corec.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python kernel is selected at import time when the extension
    # is missing; the package stays fully functional.
    extensions = []

setup(ext_modules=extensions)
