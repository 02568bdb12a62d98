from os.path import dirname, realpath, exists
from setuptools import setup, find_packages
import sys


author = u"The schurdim developers"
authors = [author]
description = 'filtration and global dimensions of Schur algebras ' \
    + 'from alcove combinatorics'
name = 'schurdim'
year = "2026"

sys.path.insert(0, realpath(dirname(__file__))+"/"+name)
from _version import version  # noqa: E402


setup(
    name=name,
    author=author,
    version=version,
    packages=find_packages(exclude=["tests"]),
    package_dir={name: name},
    package_data={"schurdim": ['resources/*.json']},
    license="MIT",
    description=description,
    long_description=open('README.rst').read() if exists('README.rst') else '',
    install_requires=["networkx>=2.4",
                      "numpy>=1.12.0",
                      "sympy>=1.5",
                      ],
    python_requires='>=3.8, <4',
    entry_points={
        "console_scripts": ["schurdim = schurdim.cli:main"],
    },
    keywords=["affine Weyl group",
              "alcove geometry",
              "algebraic groups",
              "quasi-hereditary algebras",
              "Schur algebras",
              ],
    classifiers=[
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Intended Audience :: Science/Research'
                 ],
    platforms=['ALL'],
    )
