from setuptools import setup, find_packages
import sys

if sys.version_info < (3, 8):
    error = """
dyck-tools does not support Python 2.x or 3.0 through 3.7.
Python 3.8 and above is required. Check your Python version like so:
python --version
This may be due to an out-of-date pip. Make sure you have pip >= 9.0.1.
Upgrade pip like so:
pip install --upgrade pip
"""
    sys.exit(error)


setup(
    name='dyck-tools',
    version='0.1.0',
    packages=find_packages(include=['dyck_tools', 'dyck_tools.*']),
    package_data={'dyck_tools.recurrence_tables': ['fixtures/*.csv']},
    install_requires=open('requirements.txt').read().split(),
    entry_points={'console_scripts': ['dyck-tools=dyck_tools.cli.cli:main']},
    license='Apache License',
    long_description=open('README.md').read(),
)
