from setuptools import setup


with open("README.md", "r") as fh:
    long_description = fh.read()

__version__ = "0.1.0"

requires = ['numpy', 'joblib', 'sympy>=1.10']

setup(
    name='aohs',
    version=__version__,
    description='Exact-arithmetic aligned ordered Hilbert schemes of line sections of projective varieties.',
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=['aohs'],
    author="Romain Mormont",
    author_email="romain.mormont@gmail.com",
    classifiers=[
        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',
        'License :: OSI Approved',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Operating System :: POSIX',
        'Operating System :: Unix',
        'Operating System :: MacOS',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10'
    ],
    python_requires='>=3.8',
    install_requires=requires,
    entry_points={
        'console_scripts': ['aohs=aohs.cli:main']
    }
)
