from os.path import dirname, join, abspath
from setuptools import setup, find_packages

source_dir = dirname(abspath(__file__))

setup(
    name = "wbsense",
    version = "0.1.0",

    install_requires = ['numpy>=1.17', 'scipy>=1.0'],
    extras_require = {'test': ['pytest']},
    tests_require = ['pytest'],
    python_requires = '>=3.6',
    platforms = ['GNU/Linux','Unix','Mac OS-X'],

    zip_safe = False,
    description = "Multiband joint detection for wideband spectrum sensing",
    license = "MIT",
    packages = find_packages('python'),
    package_dir = {'': 'python'},
    package_data = {'wbsense.api.scenarios': ['*.json']},
    include_package_data=True,
    entry_points = {
        'console_scripts': ['wbsense = wbsense.api.cli.main:run'],
    },

    keywords= "cognitive radio, spectrum sensing, energy detection, convex optimization",
    classifiers = [
         'Development Status :: 3 - Alpha',
         'Intended Audience :: Science/Research',
         'License :: OSI Approved :: MIT License',
         'Operating System :: OS Independent',
         'Programming Language :: Python :: 3',
         'Topic :: Scientific/Engineering',
         'Topic :: Scientific/Engineering :: Mathematics',
    ],
    long_description = open(join(source_dir, 'README'), 'r').read()
)
