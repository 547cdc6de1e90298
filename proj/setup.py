"""CMake-driven build of the _orthkit extension module.

The C++ core and the pybind11 module are built by the project's CMake tree;
this shim points setuptools at it so `pip install` (including editable
installs with --no-build-isolation) works without a second build system.
"""

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
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DORTHKIT_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_orthkit", "--parallel"],
            cwd=build_dir,
            check=True,
        )
        staged = sorted((build_dir / "python" / "orthkit").glob("_orthkit.*"))
        if not staged:
            raise RuntimeError("CMake did not stage the _orthkit module")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        self.copy_file(str(staged[0]), str(target))
        # editable installs resolve the package from python/orthkit directly
        self.copy_file(str(staged[0]), str(source_dir / "python" / "orthkit" / staged[0].name))


setup(
    ext_modules=[CMakeExtension("orthkit._orthkit")],
    cmdclass={"build_ext": CMakeBuild},
)
