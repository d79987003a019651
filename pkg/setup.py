'''
sidki-x setup: sidki-x is a toolkit for weak commutativity groups X(G).

It reduces the construction and checking of X(G) to simple commands
like `sidki-x verify -p "< a | a^2 >"` and `sidki-x verify --suite`
'''

from setuptools import setup, find_packages
import glob
import os

setup(name='sidki-x',
      version='0.1',
      packages=find_packages(exclude=['tests']),
      scripts=[f for f in glob.glob('scripts/*') if not os.path.isdir(f)],
      install_requires=['numpy', 'sympy', 'ply', 'joblib', 'six'],
      extras_require={'test': ['pytest', 'hypothesis']})
