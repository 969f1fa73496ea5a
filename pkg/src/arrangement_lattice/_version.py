from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("arrangement_lattice")
except PackageNotFoundError:
    # package not installed
    __version__ = "0.0.0"
__version_tuple__ = tuple(int(part) for part in __version__.split(".")[:3] if part.isdigit())
