from setuptools import setup, find_packages

setup(
    name="cblocks_divisors",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"config": ["bases/*.json", "reference/*.json"]},
    install_requires=[
        "pydantic>=2.3.0,<3.0.0",
        "python-dotenv==1.0.0",
        "pandas>=2.2.3,<3.0.0",
        "tqdm==4.66.1",
        "loguru==0.7.0",
    ],
    extras_require={
        "dev": [
            "pytest==7.4.2",
            "pytest-cov==4.1.0",
            "hypothesis>=6.82.0,<7.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "cblocks=app.main:main",
        ],
    },
)
