#!/usr/bin/env python3

import io
import os
from typing import List

from jinja2 import Template
from setuptools import setup


def get_base_dir():
    return os.path.abspath(os.path.dirname(__file__))


def join_path(*paths):
    return os.path.join(get_base_dir(), *paths)


def get_ea2hg_version():
    # first read from environment variable
    version = os.getenv("EA2HG_VERSION")
    if not version:
        # then read from version file
        with open(join_path("version.txt"), "r") as f:
            version = f.read().strip()

    # strip the leading 'v' if present
    if version and version.startswith("v"):
        version = version[1:]

    if not version:
        raise RuntimeError("Unable to find version string.")
    return version


def gen_version_file(version):
    # read the template file
    with open(join_path("ea2hg", "version.py.jinja"), "r") as fin:
        template_str = fin.read()
    # render the template
    rendered = Template(template_str).render(
        {
            "VERSION": version,
        }
    )
    # write the rendered content to version.py
    with open(join_path("ea2hg", "version.py"), "w") as fout:
        fout.write(rendered)


def read_readme() -> str:
    p = join_path("README.md")
    if os.path.isfile(p):
        return io.open(p, "r", encoding="utf-8").read()
    else:
        return ""


def read_requirements() -> List[str]:
    file = join_path("requirements.txt")
    with open(file) as f:
        return [line for line in f.read().splitlines() if line.strip()]


if __name__ == "__main__":
    version = get_ea2hg_version()
    # generate version file
    gen_version_file(version)

    setup(
        name="ea2hg",
        version=version,
        license="Apache 2.0",
        description="Exact computations on closed subsets of elementary abelian 2-hypergroups.",
        long_description=read_readme(),
        long_description_content_type="text/markdown",
        classifiers=[
            "Development Status :: 3 - Alpha",
            "Intended Audience :: Science/Research",
            "Intended Audience :: Education",
            "Programming Language :: Python :: 3 :: Only",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            "Programming Language :: Python :: 3.11",
            "Programming Language :: Python :: 3.12",
            "Operating System :: OS Independent",
            "License :: OSI Approved :: Apache Software License",
            "Topic :: Scientific/Engineering :: Mathematics",
        ],
        packages=["ea2hg", "ea2hg/cli"],
        package_data={
            "ea2hg": ["version.py.jinja"],
        },
        entry_points={
            "console_scripts": ["ea2hg = ea2hg.cli.main:main"],
        },
        zip_safe=False,
        python_requires=">=3.9",
        install_requires=read_requirements(),
    )
