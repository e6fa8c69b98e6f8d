from setuptools import setup, find_packages

setup(
    name='regdepth',
    version='0.1.0',

    description="Exact regression depth of flats, deep-flat constructions and Tverberg partitions",
    license="MIT",
    classifiers=[
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        'Programming Language :: Python :: 3'
    ],

  # package
    packages=find_packages(where='src'),

    package_dir={'' : 'src'},

    include_package_data=True,

    python_requires='>=3.8',

    entry_points = {
        'console_scripts': ['regdepth = regdepth.cli:main'],
    },

    install_requires=[
        'numpy',
        'scipy',
        'pandas>=1.5',
        'matplotlib'
    ],

    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
)
