from ._pfq import *  # noqa: F401,F403
from ._pfq import __version__  # noqa: F401
