from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

requirements = []
with open("requirements.txt", "r", encoding="utf-8") as fh:
    for line in fh:
        if line.startswith("# Development"):
            break
        if line.strip() and not line.startswith("#"):
            requirements.append(line.strip())

setup(
    name="randic-energy-toolkit",
    version="1.0.0",
    author="Your Name",
    author_email="your.email@example.com",
    description="Graph energy, Randić energy and permanents of cubic graphs and windmill families",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/yourusername/randic-energy-toolkit",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={
        "dev": [
            "pytest>=8.2.2",
            "pytest-cov>=5.0.0",
            "black>=24.4.2",
            "flake8>=7.1.0",
            "mypy>=1.10.1",
        ],
    },
    entry_points={
        "console_scripts": [
            "randic=src.cli:main",
        ],
    },
    data_files=[("data", ["data/published_tables.json", "data/cubic10.g6"])],
    include_package_data=True,
    zip_safe=False,
)
