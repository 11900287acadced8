import os
from setuptools import setup


r_file = open(os.path.join(os.path.dirname(__file__), 'README.rst'))
readme = r_file.read()
r_file.close()

setup(name='ppt',
      version='0.1.0',
      description='Optimal transport distances and bounds between point '
                  'processes',
      author='The PPT Authors',
      long_description=readme,
      packages=["ppt",
                "ppt.concentration",
                "ppt.processes",
                "ppt.transport"],
      install_requires=["numpy>=1.17",
                        "scipy>=1.6"],
      extras_require={"test": ["pytest"],
                      "docs": ["sphinx"]},
      entry_points={"console_scripts": ["ppt = ppt.cli:main"]},
      license="GPLv3"
      )
