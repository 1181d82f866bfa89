import os

from setuptools import setup, find_packages

from samuel import __version__

with open(os.path.join(os.path.dirname(__file__), 'README.md')) as readme_file:
    long_description = readme_file.read()

with open(os.path.join(os.path.dirname(__file__), 'requirements.txt')) as f:
    required = f.read().splitlines()

test_required = ['pytest']

dev_requirements = ['mkdocs', 'mkdocs-material']

setup(
    name='samuel',
    version=__version__,
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=required,
    extras_require={
        'dev': dev_requirements,
        'test': test_required,
    },
    tests_require=test_required,
    test_suite='pytest',
    include_package_data=True,
    python_requires='>=3.8',
    license='MIT License',
    description='Hilbert coefficients, Sally modules and Ratliff-Rush closures of m-primary ideals',
    long_description=long_description,
    long_description_content_type='text/markdown',
    entry_points={
        'console_scripts': [
            'samuel=samuel.cli:main',
        ]
    },
    classifiers=[
        'Environment :: Console',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
