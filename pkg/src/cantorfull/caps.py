"""Configurable computation caps.

All open-ended searches in the package are bounded by a cap from this module.
The environment variable CANTORFULL_CAPS overrides defaults with a
comma-separated list of key=value pairs, e.g. ``CANTORFULL_CAPS=dbound=32,orbit=128``.
Documented keys: dbound, order, orbit, lef_n, lef_p.
"""

import os
from dataclasses import dataclass, replace, fields


@dataclass(frozen=True)
class Caps:
    dbound: int = 64          # max |displacement| of any constructed cocycle
    order: int = 4096         # order() iteration cap
    orbit: int = 64           # clopen_orbit iteration cap
    lef_n: int = 8            # lef_certificate approximation-order cap
    lef_p: int = 12           # lef_certificate period cap
    period_scan: int = 12     # aperiodicity scan: periods checked
    seed_power: int = 12      # substitution fixed-point seed: powers tried
    word_store: int = 500_000  # enumeration guard (words, ball elements)
    radius_search: int = 64   # cover-refinement radius guard


def parse_caps(text, base=None):
    base = base if base is not None else Caps()
    if not text:
        return base
    names = {f.name for f in fields(Caps)}
    updates = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in names:
            raise ValueError(f"unknown cap {key!r}")
        updates[key] = int(value)
    return replace(base, **updates)


def caps_from_env():
    return parse_caps(os.environ.get("CANTORFULL_CAPS", ""))


DEFAULT = caps_from_env()
