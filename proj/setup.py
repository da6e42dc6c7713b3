from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "_hamex",
    sources=[
        "python/module.cpp",
        "src/graph.cpp",
        "src/spectral.cpp",
        "src/hamilton.cpp",
        "src/parameters.cpp",
        "src/families.cpp",
        "src/reduction.cpp",
        "src/sweep.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
