"""Double-null evolution and reconstruction for timelike minimal surface graphs.

The heavy lifting lives in the compiled extension ``minsurf._core``; this
package re-exports its operations.
"""

from minsurf._core import (  # noqa: F401
    MinsurfError,
    convert,
    evolve,
    evolve_graph,
    reconstruct,
)

__all__ = ["MinsurfError", "convert", "evolve", "evolve_graph", "reconstruct"]
