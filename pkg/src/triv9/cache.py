"""Disk cache for expensive fixed computations.

Everything is keyed by a content hash of the structure-constant table, so a
cache entry can never survive a change to the algebra.  Default location is
~/.cache/triv9, overridable with the TRIV9_CACHE environment variable or the
CLI --cache flag.
"""

from __future__ import annotations

import hashlib
import os
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

_CACHE_DIR: Optional[Path] = None


def set_cache_dir(path: Optional[str]) -> None:
    global _CACHE_DIR
    _CACHE_DIR = Path(path) if path else None


def cache_dir() -> Path:
    if _CACHE_DIR is not None:
        d = _CACHE_DIR
    elif os.environ.get("TRIV9_CACHE"):
        d = Path(os.environ["TRIV9_CACHE"])
    else:
        d = Path.home() / ".cache" / "triv9"
    d.mkdir(parents=True, exist_ok=True)
    return d


def structure_hash() -> str:
    from . import e8

    _, alg = e8.build()
    dump = e8.dump_structure(alg)
    return hashlib.sha256(dump.encode()).hexdigest()[:16]


def _frac_to_str(q) -> str:
    return f"{q.numerator}/{q.denominator}"


def _str_to_frac(s: str):
    from fractions import Fraction

    n, d = s.split("/")
    return Fraction(int(n), int(d))


def _cyc_to_strs(c) -> List[str]:
    return [_frac_to_str(q) for q in c.c]


def _strs_to_cyc(ls):
    from .scalar import Cyc

    return Cyc([_str_to_frac(s) for s in ls])


def load_cartan_cache():
    import json

    path = cache_dir() / f"cartan2-{structure_hash()}.json"
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except Exception:
        return None
    return data


def store_cartan_cache(reflections, c_minus, kappa, hexads) -> None:
    import json

    data = {
        "reflections": [
            {
                "root": [_cyc_to_strs(c) for c in r.root],
                "p_alpha": [_cyc_to_strs(c) for c in r.p_alpha],
                "matrix": [[_cyc_to_strs(x) for x in row] for row in r.matrix],
            }
            for r in reflections
        ],
        "c_minus": [
            {str(i): _frac_to_str(c.rational_value()) for i, c in el.coords.items()}
            for el in c_minus
        ],
        "kappa": [[_frac_to_str(x) for x in row] for row in kappa],
        "hexads": [
            {"W2": [[_cyc_to_strs(x) for x in row] for row in h.W2],
             "E2": _cyc_to_strs(h.E2)}
            for h in hexads
        ],
    }
    path = cache_dir() / f"cartan2-{structure_hash()}.json"
    path.write_text(json.dumps(data))


def load_gen4_cache():
    import json

    path = cache_dir() / f"gen4-{structure_hash()}.json"
    if not path.exists():
        return None
    try:
        return json.loads(path.read_text())
    except Exception:
        return None


def store_gen4_cache(subset) -> None:
    import json

    path = cache_dir() / f"gen4-{structure_hash()}.json"
    path.write_text(json.dumps([int(x) for x in subset]))


def load_weyl_cache():
    from .weylgroup import MatrixGroup, _key

    path = cache_dir() / f"weyl-{structure_hash()}.npz"
    if not path.exists():
        return None
    try:
        data = np.load(path)
        elements = data["elements"]
        dens = data["dens"]
        inverse = data["inverse"]
        refl = data["refl"]
    except Exception:
        return None
    index = {}
    for i in range(elements.shape[0]):
        index[_key(elements[i], int(dens[i]))] = i
    G = MatrixGroup(dim=elements.shape[1], elements=elements, dens=dens,
                    index=index, inverse=inverse)
    return G, [int(r) for r in refl]


def store_weyl_cache(G, refl_indices: List[int]) -> None:
    path = cache_dir() / f"weyl-{structure_hash()}.npz"
    np.savez_compressed(
        path,
        elements=G.elements,
        dens=G.dens,
        inverse=G.inverse,
        refl=np.array(refl_indices, dtype=np.int64),
    )
