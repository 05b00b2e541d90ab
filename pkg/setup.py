from setuptools import setup, find_packages

setup(
    name="sieve_lab",
    version="1.0.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.17",
    ],
    extras_require={
        "test": [
            "pytest",
            "hypothesis",
            "sympy",
        ]
    },
    entry_points={
        'console_scripts': [
            'sieve_lab=sieve_lab.main:main'
        ]
    }
)
