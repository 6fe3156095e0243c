# Copyright 2026 the sqptlab authors
# SPDX-License-Identifier: Apache-2.0
"""Builds the _core pybind11 module by driving the project's CMake build."""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)

        subprocess.check_call(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DSQPTLAB_PYTHON=ON",
                "-DSKBUILD=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ]
        )
        subprocess.check_call(
            [
                "cmake", "--build", str(build_dir), "--target", "_core",
                "-j", str(min(4, os.cpu_count() or 1)),
            ]
        )

        built = sorted(build_dir.glob("_core*.so"))
        if not built:
            raise RuntimeError("cmake build produced no _core module")
        shutil.copy2(built[-1], Path(self.get_ext_fullpath(ext.name)))


setup(
    ext_modules=[CMakeExtension("sqptlab._core")],
    cmdclass={"build_ext": CMakeBuild},
)
