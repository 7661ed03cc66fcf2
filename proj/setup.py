import os
from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    candidates = [
        os.environ.get("EIGEN3_INCLUDE_DIR"),
        "/usr/include/eigen3",
        "/usr/local/include/eigen3",
    ]
    for c in candidates:
        if c and Path(c, "Eigen", "Core").is_file():
            return c
    raise RuntimeError("Eigen headers not found; set EIGEN3_INCLUDE_DIR")


sources = sorted(str(p) for p in Path("src").glob("*.cpp")) + ["python/bindings.cpp"]

ext = Pybind11Extension(
    "splitkit._core",
    sources,
    include_dirs=["include", eigen_include()],
    cxx_std=20,
    extra_compile_args=["-pthread"],
    extra_link_args=["-pthread"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
