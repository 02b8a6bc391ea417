"""Deliberate table corruption, used to prove the verification suite has teeth.

Setting the environment variable ``APPELL_FAULT_INJECT`` perturbs one entry of
a cached table at build time:

    APPELL_FAULT_INJECT="sum-moments:K,N"   adds 1 to the iid-sum moment table
                                            entry [k=K][n=N]
    APPELL_FAULT_INJECT="stirling:N,M"      adds 1 to the classical Stirling
                                            triangle entry (n=N, m=M)

The variable is read when a table is first built, so it is meant for
subprocess-level tests (a fresh process per setting).  Unset, this module does
nothing.
"""

from __future__ import annotations

import os

ENV_VAR = "APPELL_FAULT_INJECT"

_KINDS = ("sum-moments", "stirling")


def fault_entry(kind: str) -> tuple[int, int] | None:
    """Return the (row, column) to corrupt for ``kind``, or None."""
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return None
    target, _, coords = raw.partition(":")
    if target != kind:
        if target not in _KINDS:
            raise ValueError(
                f"{ENV_VAR} must start with one of {_KINDS}, got {raw!r}"
            )
        return None
    try:
        first, second = coords.split(",")
        return int(first), int(second)
    except ValueError:
        raise ValueError(f"{ENV_VAR} coordinates must be 'i,j', got {raw!r}") from None
