"""Coverage-maximising deployment of heterogeneous mobile/static sensor networks."""

from ._core import *  # noqa: F401,F403
from ._core import ValidationError, load_scenario, simulate, summarize

__all__ = ["ValidationError", "load_scenario", "simulate", "summarize"]
