"""
To install odengine:

    python setup.py install
"""
from setuptools import setup


DESCRIPTION = "Order dependency checking, implication, proofs and rewrites"

try:
    LONG_DESCRIPTION = open('README.rst').read()
except IOError:
    LONG_DESCRIPTION = DESCRIPTION


setup(
    name="odengine",
    version="0.1.0",
    author="odengine contributors",
    packages=("odengine",),
    license="MIT License",
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    classifiers=(
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Developers",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Database",
    ),
    install_requires=(
        'six',
        'pyparsing>=3.0',
        'typer',
    ),
    tests_require=(
        'nose2',
        'coverage',
        'hypothesis',
    ),
    entry_points={
        'console_scripts': (
            'odengine=odengine.cli:main',
        ),
    },
    zip_safe=True,
)
