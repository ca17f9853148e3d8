"""Builds the daml._daml extension with the pre-installed pybind11 toolchain.

The starter models under models/ are embedded into the extension the same way
the CMake build embeds them: by substituting their text into
src/templates.cpp.in. The generated file lands under build/py_generated/.
"""

from pathlib import Path

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ROOT = Path(__file__).resolve().parent


def generated_templates() -> str:
    source = (ROOT / "src" / "templates.cpp.in").read_text()
    for name in ("dosm", "lambda", "kappa", "pipeline"):
        text = (ROOT / "models" / f"{name}.daml").read_text()
        source = source.replace(f"@DAML_TEMPLATE_{name.upper()}@", text)
    out = ROOT / "build" / "py_generated" / "templates.cpp"
    out.parent.mkdir(parents=True, exist_ok=True)
    if not out.exists() or out.read_text() != source:
        out.write_text(source)
    return str(out.relative_to(ROOT))


CORE_SOURCES = [
    "src/analysis.cpp",
    "src/diagnostics.cpp",
    "src/export.cpp",
    "src/lexer.cpp",
    "src/model.cpp",
    "src/parser.cpp",
    "src/printer.cpp",
    "src/validator.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "daml._daml",
            CORE_SOURCES + [generated_templates(), "python/bindings.cpp"],
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
