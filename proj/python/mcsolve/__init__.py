"""Maximum common (induced) subgraph solvers with checkable certificates."""

from ._core import *  # noqa: F401,F403
from ._core import ContractError, ParseError, ResourceError, __doc__  # noqa: F401
