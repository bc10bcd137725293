"""
Setup script for spa-outage package.

Configuration is in pyproject.toml
"""

from setuptools import find_packages, setup

setup(
    name="spa-outage",
    version="1.0.0",
    description="SINR outage probabilities by saddle point approximation with normal and NIG bases",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.24.0",
        "scipy>=1.11.0",
        "pydantic>=2.5.3",
        "pydantic-settings>=2.1.0",
        "python-dotenv>=1.0.0",
        "structlog>=24.1.0",
    ],
    entry_points={"console_scripts": ["spa-outage=spa_outage.main:main"]},
)
