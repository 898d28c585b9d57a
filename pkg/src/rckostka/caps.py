"""Global enumeration cap.

Every exhaustive search in the library counts the objects (or search states)
it touches against a single cap, read from the RK_CAP environment variable.
Hitting the cap is a hard error, never a silent truncation.
"""

import os

from .errors import EnumerationCapExceeded

DEFAULT_CAP = 10**7


def enumeration_cap():
    raw = os.environ.get("RK_CAP")
    if raw is None:
        return DEFAULT_CAP
    return int(raw)


class Counter:
    """Mutable tick counter checked against the cap."""

    __slots__ = ("count", "cap")

    def __init__(self, cap=None):
        self.count = 0
        self.cap = enumeration_cap() if cap is None else cap

    def tick(self, k=1):
        self.count += k
        if self.count > self.cap:
            raise EnumerationCapExceeded(
                "enumeration exceeded cap of %d objects (set RK_CAP to raise)" % self.cap
            )
