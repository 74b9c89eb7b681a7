"""Setup for the kflip package."""

import setuptools

setuptools.setup(
    name="kflip",
    version="1.0.0",
    author="Emily Bentley",
    author_email="ebentley@scripps.edu",
    description="K-ring presentations of flip Stiefel manifolds, with exact verification of every step.",
    long_description=open('README.md').read(),
    packages=setuptools.find_packages(),
    # testing packages not listed here
    install_requires=["pandas", "numpy", "sympy>=1.13"],
    classifiers=[
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8.8',
    ],
    include_package_data=True,
    package_data={"kflip.koszul": ["*.json"]},
    entry_points={"console_scripts": ["kflip=kflip.cli:main"]},
    use_scm_version=True,
    setup_requires=['setuptools_scm'],
)
