"""Finite rack and quandle computations: colorings, homology, state sums."""

from pathlib import Path

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from ._core import Diagram, Rack
except ImportError:  # build-tree layout: _core sits next to the package on sys.path
    from _core import *  # noqa: F401,F403
    from _core import Diagram, Rack


def load_diagram(path):
    """Parse a PD code file into a Diagram."""
    return Diagram.parse(Path(path).read_text())


def load_rack(spec):
    """Build a Rack from a family spec like "dihedral:3" or a table file path."""
    return Rack.from_spec(str(spec))
