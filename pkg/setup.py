"""Install the fundom package and its command line tool.

Install with:
    $ pip install .

Run the tests with:
    $ pytest fundom

"""

from setuptools import setup

setup(
    name="fundom",
    version="1.0.0",
    description=(
        "Fixed-point combinatorics of the GL_3 fundamental domain of affine "
        "Springer fibers"
    ),
    license="BSD-3-Clause",
    packages=["fundom"],
    package_data={"fundom": ["test_data/*"]},
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "scipy",
        "matplotlib",
        "tabulate",
        "sympy",
    ],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["fundom=fundom.cli:run"]},
)
