"""
Disk cache for expensive per-(type, rank) results (weak order graphs and
divided-difference representatives).  Files are JSON, keyed by kind, group,
rank and package version; writes go through a temp file and an atomic
replace so concurrent invocations never see partial data.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional

from . import __version__
from .bgg import ExactPolynomial
from .weyl import SignedPermutation, parse_signed

ENV_CACHE_DIR = "CLANCALC_CACHE_DIR"


def resolve_cache_dir(override: Optional[str] = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "clancalc"


def cache_path(cache_dir: Path, kind: str, group: str, rank: int) -> Path:
    return cache_dir / f"{kind}-{group}{rank}-v{__version__}.json"


def read_json(path: Path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, ValueError):
        return None


def write_json_atomic(path: Path, data) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(data, handle, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def representatives_to_json(
    reps: Mapping[SignedPermutation, ExactPolynomial]
) -> dict:
    elements = []
    for w in sorted(reps, key=lambda w: (w.length, w.images)):
        poly = reps[w]
        terms = {
            ",".join(str(p) for p in exps): str(coeff)
            for exps, coeff in poly.terms.items()
        }
        elements.append({"w": str(w), "terms": terms})
    return {"elements": elements}


def representatives_from_json(
    group: str, rank: int, data
) -> Optional[dict[SignedPermutation, ExactPolynomial]]:
    if not isinstance(data, dict) or "elements" not in data:
        return None
    reps = {}
    try:
        for item in data["elements"]:
            w = parse_signed(group, rank, item["w"])
            terms = {
                tuple(int(p) for p in exps.split(",")): Fraction(coeff)
                for exps, coeff in item["terms"].items()
            }
            reps[w] = ExactPolynomial(rank, terms)
    except (KeyError, ValueError):
        return None
    return reps


def load_representatives(
    group: str, rank: int, cache_dir: Path
) -> Optional[dict[SignedPermutation, ExactPolynomial]]:
    data = read_json(cache_path(cache_dir, "bgg-representatives", group, rank))
    if data is None:
        return None
    return representatives_from_json(group, rank, data)


def store_representatives(
    group: str, rank: int, cache_dir: Path, reps: Mapping[SignedPermutation, ExactPolynomial]
) -> None:
    write_json_atomic(
        cache_path(cache_dir, "bgg-representatives", group, rank),
        representatives_to_json(reps),
    )
