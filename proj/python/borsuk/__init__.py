from ._borsuk import *  # noqa: F401,F403
from ._borsuk import __doc__  # noqa: F401
