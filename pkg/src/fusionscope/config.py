"""Size limits shared by the whole library.

The defaults keep every computation at desk scale.  They can be changed
process-wide through ``limits`` or temporarily with ``limits.override``;
``FUSIONSCOPE_CAP_ORDER`` in the environment replaces the default order cap.
"""

from __future__ import annotations

import contextlib
import os
from dataclasses import dataclass

DEFAULT_ORDER_CAP = 20_000
DEFAULT_SUBGROUP_CAP = 512

# Groups up to this order get a full Cayley table; larger ones multiply lazily.
TABLE_LIMIT = 2048


def _env_order_cap() -> int:
    raw = os.environ.get("FUSIONSCOPE_CAP_ORDER")
    if not raw:
        return DEFAULT_ORDER_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"FUSIONSCOPE_CAP_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("FUSIONSCOPE_CAP_ORDER must be positive")
    return value


@dataclass
class Limits:
    order: int
    subgroups: int

    @contextlib.contextmanager
    def override(self, order: int | None = None, subgroups: int | None = None):
        saved = (self.order, self.subgroups)
        if order is not None:
            self.order = order
        if subgroups is not None:
            self.subgroups = subgroups
        try:
            yield self
        finally:
            self.order, self.subgroups = saved


limits = Limits(order=_env_order_cap(), subgroups=DEFAULT_SUBGROUP_CAP)
