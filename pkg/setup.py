from setuptools import setup
from distutils.util import convert_path


# get __version__ before building https://stackoverflow.com/a/24517154
main_ns = {}
ver_path = convert_path('teleportsim/version.py')
with open(ver_path) as ver_file:
    exec(ver_file.read(), main_ns)


setup(
    name='teleportsim',
    version=main_ns['__version__'],
    description='Closed-form general quantum teleportation with a state-vector oracle',
    author='Andrew Lapp',
    author_email='andrew@nixgui.rew.la',
    url='',
    packages=[
        'teleportsim',
        'teleportsim.protocol',
        'teleportsim.harness',
        'teleportsim.utils',
    ],
    package_data={
        'teleportsim': [
            'tests/sample/*'
        ],
    },
    include_package_data=True,
    install_requires=[
        'numpy',
    ],
    extras_require={
        'test': [
            'pytest',
            'pytest-mock',
            'pytest-datafiles',
            'pytest-env',
            'hypothesis',
        ],
    },
    entry_points={
        'console_scripts': [
            'teleportsim=teleportsim.main:main',
        ],
    }
)
