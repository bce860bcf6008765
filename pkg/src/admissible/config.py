"""Enumeration budgets, overridable through ``ADMISSIBLE_BUDGET``.

The variable holds either a bare integer (the partial-path budget) or
comma-separated ``key=value`` pairs with keys ``paths``, ``oracle_n`` and
``exhaustive_n``, e.g. ``ADMISSIBLE_BUDGET="paths=1e9,exhaustive_n=8"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its budget."""


@dataclass(frozen=True)
class Budgets:
    paths: int = 10**8  # partial paths per oracle call
    oracle_n: int = 16  # largest graph the oracle enumerates
    exhaustive_n: int = 7  # largest n for labeled exhaustive campaigns


def _parse_int(text: str) -> int:
    return int(float(text)) if any(c in text for c in ".eE") else int(text)


def budgets() -> Budgets:
    raw = os.environ.get("ADMISSIBLE_BUDGET", "").strip()
    b = Budgets()
    if not raw:
        return b
    if "=" not in raw:
        return replace(b, paths=_parse_int(raw))
    for item in raw.split(","):
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in ("paths", "oracle_n", "exhaustive_n"):
            raise ValueError(f"unknown ADMISSIBLE_BUDGET key {key!r}")
        b = replace(b, **{key: _parse_int(val.strip())})
    return b
