"""
deepind
Deep induction rules, predicate liftings and soundness witnesses for GADTs.
"""
import sys

from setuptools import find_packages, setup

short_description = __doc__.split("\n")

# from https://github.com/pytest-dev/pytest-runner#conditional-requirement
needs_pytest = {"pytest", "test", "ptr"}.intersection(sys.argv)
pytest_runner = ["pytest-runner"] if needs_pytest else []

try:
    with open("README.md", "r") as handle:
        long_description = handle.read()
except IOError:
    long_description = "\n".join(short_description[2:])


setup(
    # Self-descriptive entries which should always be present
    name="deepind",
    description=short_description[1],
    long_description=long_description,
    long_description_content_type="text/markdown",
    version="0.1.0",
    license="MIT",
    packages=find_packages(),
    # The prelude, example corpus and output templates.
    package_data={"deepind": ["data/*.gdt", "data/corpus/*.gdt", "data/jinja/*.txt"]},
    include_package_data=True,
    python_requires=">=3.7",
    install_requires=[
        "click",
        "click-option-group",
        "jinja2",
        "pydantic<2",
        "pyparsing>=3",
    ],
    # Allows `setup.py test` to work correctly with pytest
    setup_requires=[] + pytest_runner,
    # Set up the main CLI entry points
    entry_points={
        "console_scripts": [
            "deepind=deepind.cli:cli",
        ],
    },
)
