"""JSON encodings shared by the library and the command line.

Coloring: ``{"n": N, "blue": HEX}``.  HEX has exactly ``ceil(2^N / 4)``
lowercase digits; character ``i`` holds vertices ``4i .. 4i+3`` with vertex
``4i + j`` in bit ``j`` of that digit (little-endian by vertex mask).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .chains import ChainCover, ChainDecomposition
from .constructions import AntichainCheck, BoundReport, CubeCheck
from .embeddings import BlueChainWitness, CanonicalEmbedding
from .lattice import LatticeColoring, check_dim
from .pipeline import PipelineTrace
from .search import RamseyResult, RamseyWitness


def _hex_digits(n: int) -> int:
    return max(1, -(-(1 << n) // 4))


def coloring_to_json(c: LatticeColoring) -> dict:
    bits = c.to_int()
    digits = []
    for i in range(_hex_digits(c.n)):
        digits.append("0123456789abcdef"[bits >> (4 * i) & 0xF])
    return {"n": c.n, "blue": "".join(digits)}


def coloring_from_json(obj: Any) -> LatticeColoring:
    if not isinstance(obj, dict) or "n" not in obj or "blue" not in obj:
        raise ValueError("coloring object needs 'n' and 'blue'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    check_dim(n)
    text = obj["blue"]
    if not isinstance(text, str) or len(text) != _hex_digits(n):
        raise ValueError(f"'blue' must be a hex string of {_hex_digits(n)} digits")
    bits = 0
    for i, ch in enumerate(text):
        try:
            d = int(ch, 16)
        except ValueError:
            raise ValueError(f"bad hex digit {ch!r}") from None
        bits |= d << (4 * i)
    if bits >> (1 << n):
        raise ValueError("hex string sets bits beyond 2^n vertices")
    return LatticeColoring.from_int(n, bits)


def chains_to_json(n: int, chains) -> dict:
    return {"n": n, "chains": [list(map(int, ch)) for ch in chains]}


def decomposition_to_json(d: ChainDecomposition) -> dict:
    return chains_to_json(d.n, d.chains)


def cover_to_json(n: int, cover: ChainCover) -> dict:
    return chains_to_json(n, cover.chains)


def chains_from_json(obj: Any) -> tuple[int, list[tuple[int, ...]]]:
    if not isinstance(obj, dict) or "chains" not in obj:
        raise ValueError("chain object needs 'chains'")
    n = int(obj.get("n", 0))
    return n, [tuple(int(v) for v in ch) for ch in obj["chains"]]


def embedding_to_json(e: CanonicalEmbedding) -> dict:
    return {"ground": e.ground, "tail": [[x, e.tail[x]] for x in sorted(e.tail)]}


def embedding_from_json(obj: Any) -> CanonicalEmbedding:
    return CanonicalEmbedding(int(obj["ground"]), {int(x): int(t) for x, t in obj["tail"]})


def blue_chain_to_json(w: BlueChainWitness) -> dict:
    return {"y_order": list(w.y_order), "x_parts": list(w.x_parts)}


def antichain_check_to_json(chk: AntichainCheck) -> dict:
    out = {"claim": f"no blue A_{chk.t}", "certified": chk.certified}
    if chk.certified:
        out["chains"] = [list(ch) for ch in chk.cover]
    else:
        out["antichain"] = sorted(chk.antichain)
    return out


def cube_check_to_json(chk: CubeCheck) -> dict:
    out = {"claim": f"no red Q_{chk.n}", "certified": chk.certified, "kind": chk.kind,
           "red_height": chk.red_height}
    if chk.embedding is not None:
        out["embedding"] = embedding_to_json(chk.embedding)
    return out


def bounds_to_json(rep: BoundReport) -> dict:
    return rep.as_dict()


def witness_to_json(w: RamseyWitness) -> dict:
    return {"kind": w.kind,
            "coloring": coloring_to_json(w.coloring) if w.coloring is not None else None,
            "t": w.t, "n": w.n, "N": w.N, "nodes": w.nodes, "classes": w.classes}


def witness_from_json(obj: Any) -> RamseyWitness:
    col = obj.get("coloring")
    return RamseyWitness(obj["kind"], int(obj["N"]), int(obj["t"]), int(obj["n"]),
                         coloring_from_json(col) if col is not None else None,
                         int(obj.get("nodes", 0)), int(obj.get("classes", 0)))


def ramsey_result_to_json(res: RamseyResult) -> dict:
    return {"t": res.t, "n": res.n, "value": res.value, "lower": res.lower,
            "witness": witness_to_json(res.witness) if res.witness else None,
            "runs": [witness_to_json(w) for w in res.runs]}


def trace_to_json(tr: PipelineTrace) -> dict:
    return {
        "t": tr.t, "n": tr.n,
        "chain_cover": [list(ch) for ch in tr.chain_cover],
        "full_chains": [list(ch) for ch in tr.full_chains],
        "orderings": [list(o) for o in tr.orderings],
        "triple": list(tr.triple),
        "x_ground": tr.x_ground,
        "y_order": list(tr.y_order),
        "precondition_met": tr.precondition_met,
        "result": embedding_to_json(tr.result),
    }


def dump(obj: dict, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=None, separators=(",", ":"))
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def load(path: str | Path) -> Any:
    return json.loads(Path(path).read_text())


def load_coloring(path: str | Path) -> LatticeColoring:
    return coloring_from_json(load(path))
