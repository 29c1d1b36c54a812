# workaround for `pylint tests/*`
# > F0010: error while code parsing: Unable to load file tests/graph/__init__.py
