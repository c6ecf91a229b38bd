from setuptools import setup, find_packages

with open('README.md') as f:
    readme = f.read()

setup(
    name='quiver_rank',
    version='0.1.0',
    description='Exact rank functions, tensor products and decompositions of quiver representations',
    long_description=readme,
    author='Redacted for blind review',
    author_email='go-file-an-issue@on-github.instead',
    url='Redacted for blind review',
    packages=find_packages(exclude=('tests', 'tests.*')),
    install_requires=['numpy', 'dataclasses_json', 'lark'],
)
