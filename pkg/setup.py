import setuptools

with open('requirements.txt') as f:
    requirements = [r for r in f.read().splitlines() if r and not r.startswith('#')]

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="two-zero-workbench",
    version="1.0.0",
    description="Exhaustive verification workbench for two-zero cyclic code families",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(include=["twozero_workbench", "twozero_workbench.*"]),
    install_requires=requirements,
    extras_require={
        "test": ["pytest", "hypothesis", "galois"],
    },
    scripts=["app/workbench.py"],
    include_package_data=True,
    package_data={"twozero_workbench": ["etc/*.yml"]},
    python_requires=">=3.8",
    classifiers=[
        "Programming Language :: Python :: 3.8",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ]
)
