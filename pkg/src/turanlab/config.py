"""Every tolerance used by the verify suites, in one table.

A config file overrides entries with flat ``key = value`` lines; ``#`` starts
a comment.
"""

from __future__ import annotations

from pathlib import Path

DEFAULT_TOLERANCES: dict[str, float] = {
    "thm4.ratio_min": 0.9,
    "thm7.ratio_min": 0.8,
    "lemma51.halfwidth": 0.02,
    "lemma52.sigmas": 3.0,
    "walk.eps": 1e-6,
    "spectral.tol": 1e-13,
    "spectral.abs": 1e-8,
}


def load_config(path: str | Path | None = None) -> dict[str, float]:
    table = dict(DEFAULT_TOLERANCES)
    if path is None:
        return table
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in table:
            raise ValueError(f"{path}:{lineno}: unknown or malformed entry {raw!r}")
        table[key] = float(value)
    return table
