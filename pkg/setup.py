import os
from pathlib import Path

from setuptools import setup

root = Path(os.path.dirname(os.path.abspath(__file__)))

with open(str(root / "requirements.txt"), encoding="utf-8") as fr:
    requirements = [line.strip() for line in fr
                    if line.strip() and not line.startswith("#") and not line.startswith(("hypothesis", "pytest"))]

setup(
    name="skewspan",
    version="0.1.0",
    description="Skew monoidales in Span over finite sets",
    package_dir={'': 'src'},
    packages=["logic", "serialization", "static", "utils"],
    py_modules=["main", "customlogger", "exceptions"],
    install_requires=requirements,
    python_requires=">=3.7",
)
