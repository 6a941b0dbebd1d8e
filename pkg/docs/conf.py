# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Project information -----------------------------------------------------

project = "SciKit-Chaos-Coded-Modulation"
copyright = "2026, skccm developers"
author = "skccm developers"

# read the version from the build manifest, the package does not need to be installed
with open("../pyproject.toml", "r") as f:
    version = next(
        ln.split(" = ")[1].strip('"\n') for ln in f if ln.startswith("version = ")
    )
release = version

# -- General configuration ---------------------------------------------------

needs_sphinx = "4.0.0"

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.autosummary",
    "numpydoc",
    "sphinx_panels",
]

# see https://github.com/numpy/numpydoc/issues/69
numpydoc_class_members_toctree = False

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"

# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"
html_theme_options = {
    "show_toc_level": 2,
}
html_title = f"{project} Documentation"
htmlhelp_basename = f"{project.lower()}doc"

# -----------------------------------------------------------------------------
# Intersphinx configuration
# -----------------------------------------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/dev", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/reference", None),
    "pandas": ("https://pandas.pydata.org/pandas-docs/stable", None),
}

# -----------------------------------------------------------------------------
# Autosummary / Autodoc
# -----------------------------------------------------------------------------
autosummary_generate = True

autodoc_default_options = {
    "members": True,
    "inherited-members": True,
}

# -----------------------------------------------------------------------------
# Sphinx Panels
# -----------------------------------------------------------------------------
panels_add_bootstrapp_css = False
