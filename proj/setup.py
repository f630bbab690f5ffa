"""Build the _floorq extension through the project's CMakeLists so the wheel
and the standalone CMake build share one source of truth."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_dir = ext_path.parent
        ext_dir.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).parent.resolve()

        cmake_args = [
            f"-DFLOORQ_EXT_OUTPUT_DIR={ext_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DFLOORQ_BUILD_TESTS=OFF",
        ]
        subprocess.run(["cmake", "-S", str(source_dir), "-B", str(build_dir)] + cmake_args,
                       check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_floorq",
             "-j", str(os.cpu_count() or 2)],
            check=True)


setup(
    ext_modules=[CMakeExtension("floorq._floorq")],
    cmdclass={"build_ext": CMakeBuild},
)
