"""Builds the pybind11 extension through the project's CMake configuration."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir=""):
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        package_dir = ext_fullpath.parent.resolve()
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)
        config = "Debug" if self.debug else "Release"
        configure = [
            "cmake",
            ext.sourcedir,
            f"-DCMAKE_BUILD_TYPE={config}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            f"-DJMEXPAND_PYTHON_OUTPUT_DIR={package_dir}",
            "-DJMEXPAND_BUILD_TESTS=OFF",
        ]
        subprocess.run(configure, cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_jmexpand", "--parallel"],
            cwd=build_temp,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("jmexpand._jmexpand")],
    cmdclass={"build_ext": CMakeBuild},
)
