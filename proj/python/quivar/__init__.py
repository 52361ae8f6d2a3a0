from ._quivar import *  # noqa: F401,F403
