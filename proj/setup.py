"""Builds the pybind11 extension through the project's CMake tree."""

import pathlib
import shutil
import subprocess

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = pathlib.Path(__file__).resolve().parent
        build_dir = pathlib.Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_dir),
             "-DCMAKE_BUILD_TYPE=Release"],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "--parallel"],
            check=True,
        )
        target_dir = pathlib.Path(self.get_ext_fullpath(ext.name)).resolve().parent
        target_dir.mkdir(parents=True, exist_ok=True)
        built = list((build_dir / "python" / "dirconv").glob("_core.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core extension module")
        for module in built:
            shutil.copy2(module, target_dir / module.name)


setup(
    ext_modules=[CMakeExtension("dirconv._core")],
    cmdclass={"build_ext": CMakeBuild},
)
