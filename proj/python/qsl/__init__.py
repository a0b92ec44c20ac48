"""Python interface to the signless-Laplacian spectral verification toolkit.

The compiled extension lives at ``qsl._qsl`` in installed layouts and as a
top-level ``_qsl`` next to the build tree (the test harness points
``PYTHONPATH`` at the binary directory).
"""

try:
    from qsl._qsl import *  # noqa: F401,F403
    from qsl._qsl import __version__  # noqa: F401
except ImportError:  # build-tree layout
    from _qsl import *  # noqa: F401,F403
    from _qsl import __version__  # noqa: F401
