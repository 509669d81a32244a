import setuptools

with open("rpbis/__init__.py", "r") as version_file:
    VERSION = version_file.read()
    VERSION = VERSION.split("__version__ = ")[1].split('"')[1]

with open("README.md", "r", encoding="utf-8") as fh:
    LONG_DESCRIPTION = fh.read()

NAME = "rpbis"
AUTHOR = "Gabriel Abrahao"
AUTHOR_EMAIL = "gabrielabrahaorr@gmail.com"
DESCRIPTION = "Probabilistic bisimilarity and distinguishing formulas for reactive probabilistic systems"
LONG_DESCRIPTION_CONTENT_TYPE = "text/markdown"
URL = 'https://github.com/GabrielAbra/rpbis'
REQUIRES_PYTHON = ">=3.9.0"

# Package requirements
INSTALL_REQUIRES = ['numpy', 'pandas']

# Optional requirements
EXTRAS_REQUIRE = {
    "test": ['pytest', 'hypothesis'],
}


setuptools.setup(
    name=NAME,
    version=VERSION,
    author=AUTHOR,
    author_email=AUTHOR_EMAIL,
    description=DESCRIPTION,
    long_description=LONG_DESCRIPTION,
    long_description_content_type=LONG_DESCRIPTION_CONTENT_TYPE,
    url=URL,

    project_urls={
        "Bug Tracker": "https://github.com/GabrielAbra/rpbis/issues",
    },
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],

    license='MIT',
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={"rpbis.fixtures": ["*.rplts"]},
    entry_points={
        "console_scripts": ["rpbis=rpbis.cli.main:main"],
    },
    python_requires=REQUIRES_PYTHON,
)
