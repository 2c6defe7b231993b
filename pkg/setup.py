from setuptools import setup, find_packages

setup(
    name='fractional_wright',
    version='0.1.0',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    install_requires=[
        'numpy',
        'scipy',
        'mpmath',
    ],
    entry_points={
        'console_scripts': [
            'fracwright = src.main:main_function',
        ],
    },
    description='Wright-function laws of time-fractional transport: evaluation, simulation and verification',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
    ],
)
