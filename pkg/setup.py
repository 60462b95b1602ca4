from setuptools import find_packages, setup

setup(
    name="tra-spectra",
    version="1.0.0",
    description="Tridiagonal representation spectra of singular hyperbolic potentials",
    packages=find_packages(exclude=("tests", "tests.*")),
    python_requires=">=3.8",
    install_requires=["numpy>=1.22", "scipy>=1.8", "mpmath>=1.2"],
    extras_require={"test": ["pytest>=7"]},
    entry_points={"console_scripts": ["tra-spectra = tra_spectra.cli.app:main"]},
)
