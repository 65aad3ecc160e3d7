# -*- coding: utf-8 -*-
from setuptools import setup

setup(
    name='pystemlm',
    version='0.1.0',
    description='n-gram language models and suffix splitting for agglutinative languages',
    license='LICENSE.txt',
    packages=['stemlm'],
    package_data={'stemlm': ['data/*.tsv']},
    install_requires=[
        'numpy',
        'networkx',
    ],
    entry_points={
        'console_scripts': [
            'stemlm = stemlm.cli:main',
        ],
    },
    keywords=[
        'stemlm',
        'language model',
        'n-gram',
        'arpa',
        'smoothing',
        'stemming',
        'telugu',
        'speech recognition'
    ],
    python_requires='>=3.8',
    zip_safe=False
)
