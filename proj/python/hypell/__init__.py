from ._hypell import *  # noqa: F401,F403
from ._hypell import __doc__  # noqa: F401
