"""Setup configuration for extscope package"""

import setuptools

with open("README.md", "r") as fh:
    LONG_DESC = fh.read()

setuptools.setup(
    name="extscope",
    version="1.0.0",
    description="Ext modules, grades and supports of finitely generated graded modules",
    long_description=LONG_DESC,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(include=["extscope", "extscope.*"]),
    python_requires=">=3.8",
    install_requires=[
        "python_json_logger",
        "sympy",
        "numpy",
        "tomli; python_version < '3.11'",
    ],
    entry_points={"console_scripts": ["extscope=extscope.cli:main"]},
)
