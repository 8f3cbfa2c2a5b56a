"""The .hopf file format: UTF-8 JSON text with canonical coefficient
rendering, sorted sparse triples, and whole-file atomic writes.

import(export(H)) reproduces H bit-exactly; import re-runs verify_hopf
before returning.
"""

from __future__ import annotations

import json
import os
import tempfile

from .cyclo import parse as cparse, render
from .errors import ParseError, VerificationFailed
from .hopf import ClaimSet, FinHopf, embed_hopf, verify_hopf
from .linalg import SparseTensor3

FORMAT_VERSION = "hopf-v1"


def _vec_strs(v):
    return [render(c) for c in v]


def _triples(t: SparseTensor3):
    return [[i, j, k, render(c)] for (i, j, k), c in t.entries]


def to_obj(H: FinHopf, rmatrix: dict | None = None) -> dict:
    obj = {
        "format_version": FORMAT_VERSION,
        "label": H.label,
        "dim": H.dim,
        "conductor": H.conductor,
        "mult": _triples(H.mult),
        "unit": _vec_strs(H.unit),
        "comult": _triples(H.comult),
        "counit": _vec_strs(H.counit),
        "antipode": [_vec_strs(row) for row in H.antipode],
        "claims": {
            "grouplikes": [_vec_strs(g) for g in H.claims.grouplikes],
            "characters": [_vec_strs(c) for c in H.claims.characters],
            "iso_fixtures": [
                [list(key), [_vec_strs(row) for row in mat]]
                for key, mat in H.claims.iso_fixtures
            ],
        },
    }
    if rmatrix is not None:
        obj["rmatrix"] = [[i, j, render(c)]
                          for (i, j), c in sorted(rmatrix.items())]
    return obj


def dumps(H: FinHopf, rmatrix: dict | None = None) -> str:
    return json.dumps(to_obj(H, rmatrix), indent=1, sort_keys=True) + "\n"


def export_hopf(H: FinHopf, path: str, rmatrix: dict | None = None) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    text = dumps(H, rmatrix)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".hopf.tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def from_obj(obj: dict, conductor: int | None = None,
             verify: bool = True) -> tuple[FinHopf, dict | None]:
    try:
        ver = obj["format_version"]
        if ver != FORMAT_VERSION:
            raise ParseError(f"unknown format version {ver!r}")
        n = int(obj["dim"])
        M = int(obj["conductor"])

        def num(s):
            return cparse(M, s)

        def vec(ss):
            if len(ss) != n:
                raise ParseError(f"vector of length {len(ss)}, expected {n}")
            return tuple(num(s) for s in ss)

        def tens(triples):
            d = {}
            for i, j, k, s in triples:
                if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
                    raise ParseError(f"tensor index out of range: {(i, j, k)}")
                if (i, j, k) in d:
                    raise ParseError(f"duplicate tensor entry {(i, j, k)}")
                d[(i, j, k)] = num(s)
            return SparseTensor3.from_dict((n, n, n), d)

        claims = obj.get("claims", {})
        fixtures = []
        for key, mat in claims.get("iso_fixtures", []):
            fixtures.append((tuple(key), tuple(vec(row) for row in mat)))
        H = FinHopf(
            n, M, tens(obj["mult"]), vec(obj["unit"]), tens(obj["comult"]),
            vec(obj["counit"]), tuple(vec(row) for row in obj["antipode"]),
            ClaimSet([vec(g) for g in claims.get("grouplikes", [])],
                     [vec(c) for c in claims.get("characters", [])],
                     fixtures),
            str(obj.get("label", "")))
        rmat = None
        if "rmatrix" in obj:
            rmat = {}
            for i, j, s in obj["rmatrix"]:
                rmat[(i, j)] = num(s)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed .hopf object: {exc}") from exc

    if conductor is not None and conductor != M:
        from .cyclo import embed
        H = embed_hopf(H, conductor)
        if rmat is not None:
            rmat = {k: embed(c, conductor) for k, c in rmat.items()}
    if verify:
        rep = verify_hopf(H)
        if not rep.ok:
            bad = ", ".join(f"{c.name} at {c.first_failure}" for c in rep.failures)
            raise VerificationFailed(f"imported algebra fails axioms: {bad}")
    return H, rmat


def loads(text: str, conductor: int | None = None,
          verify: bool = True) -> tuple[FinHopf, dict | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"JSON error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_obj(obj, conductor, verify)


def import_hopf(path: str, conductor: int | None = None,
                verify: bool = True) -> tuple[FinHopf, dict | None]:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), conductor, verify)
