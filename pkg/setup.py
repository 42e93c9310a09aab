from setuptools import setup, find_packages

setup(
    name="bihilbert",
    version="0.1",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    package_data={"config": ["*.yaml", "tolerances/*.yaml", "sampling/*.yaml"]},
    entry_points={"console_scripts": ["bihilbert=cli:main"]},
)
