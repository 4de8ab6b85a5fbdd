"""Line-oriented text format for explicit codes.

First line: ``space <kind> q=<q> n=<n> [m=<m>] [blocks=<n1>x<m1>,...]
[metric=<sub>] [v=<v>]``.  One codeword per line after that: vectors as
space-separated integers, matrices with rows joined by ``;``, sum-rank
blocks joined by ``|``, permutations as image lists, subspaces as basis
matrices (canonicalized on load).  Comments start with ``#``.
"""

from __future__ import annotations

from .oracles import ExplicitCode
from .spaces import (
    CoverMetric,
    Hamming,
    Insdel,
    PairMetric,
    Permutation,
    Rank,
    SpaceSpec,
    Subspace,
    SumRank,
    canonical_subspace,
    subspace_dim,
)

KINDS = ("hamming", "rank", "sumrank", "subspace", "cover", "pair",
         "insdel", "permutation")


def _parse_header(line: str):
    parts = line.split()
    if len(parts) < 2 or parts[0] != "space" or parts[1] not in KINDS:
        raise ValueError(f"bad header line: {line!r}")
    kind = parts[1]
    opts = {}
    for tok in parts[2:]:
        if "=" not in tok:
            raise ValueError(f"bad header option: {tok!r}")
        key, val = tok.split("=", 1)
        opts[key] = val
    return kind, opts


def _parse_matrix(text: str):
    return tuple(tuple(int(v) for v in row.split()) for row in text.split(";"))


def _parse_word(kind: str, line: str):
    if kind in ("hamming", "pair", "insdel", "permutation"):
        return tuple(int(v) for v in line.split())
    if kind in ("rank", "cover", "subspace"):
        return _parse_matrix(line)
    if kind == "sumrank":
        return tuple(_parse_matrix(block) for block in line.split("|"))
    raise ValueError(f"unknown kind {kind!r}")


def _check_matrix(mat, rows: int, cols: int, q: int, what: str) -> None:
    if len(mat) != rows or any(len(r) != cols for r in mat):
        raise ValueError(f"{what}: expected a {rows}x{cols} matrix, got {mat!r}")
    if any(v < 0 or v >= q for r in mat for v in r):
        raise ValueError(f"{what}: entries must lie in 0..{q - 1}, got {mat!r}")


def _validate_word(space: SpaceSpec, word) -> None:
    if isinstance(space, (Hamming, PairMetric)):
        if len(word) != space.n:
            raise ValueError(f"codeword length {len(word)} != n={space.n}")
        if any(v < 0 or v >= space.q for v in word):
            raise ValueError(f"symbols must lie in 0..{space.q - 1}: {word!r}")
    elif isinstance(space, Insdel):
        if len(word) != space.n:
            raise ValueError(f"codeword length {len(word)} != n={space.n}")
        if any(v < 0 or v >= space.v for v in word):
            raise ValueError(f"symbols must lie in 0..{space.v - 1}: {word!r}")
    elif isinstance(space, (Rank, CoverMetric)):
        _check_matrix(word, space.m, space.n, space.q, "codeword")
    elif isinstance(space, SumRank):
        if len(word) != len(space.blocks):
            raise ValueError(f"expected {len(space.blocks)} blocks: {word!r}")
        for blk, (ni, mi) in zip(word, space.blocks):
            _check_matrix(blk, mi, ni, space.q, "block")
    elif isinstance(space, Subspace):
        if subspace_dim(word) not in space.dims:
            raise ValueError(f"subspace dimension {subspace_dim(word)} not in "
                             f"{space.dims}")
        for row in word:
            if len(row) != space.n or any(v < 0 or v >= space.q for v in row):
                raise ValueError(f"bad basis row {row!r} for F_{space.q}^{space.n}")
    elif isinstance(space, Permutation):
        if sorted(word) != list(range(1, space.n + 1)):
            raise ValueError(f"not a permutation of 1..{space.n}: {word!r}")


def parse_code(text: str) -> ExplicitCode:
    """Parse the text format into an ExplicitCode."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    kind, opts = _parse_header(lines[0])
    words = [_parse_word(kind, ln) for ln in lines[1:]]
    if not words:
        raise ValueError("code file has no codewords")

    if kind == "hamming":
        space = Hamming(int(opts["q"]), int(opts["n"]))
    elif kind == "rank":
        space = Rank(int(opts["q"]), int(opts["m"]), int(opts["n"]))
    elif kind == "cover":
        space = CoverMetric(int(opts["q"]), int(opts["m"]), int(opts["n"]))
    elif kind == "pair":
        space = PairMetric(int(opts["q"]), int(opts["n"]))
    elif kind == "insdel":
        space = Insdel(int(opts["v"]), int(opts["n"]))
    elif kind == "permutation":
        space = Permutation(int(opts["n"]), opts.get("metric", "hamming"))
    elif kind == "sumrank":
        blocks = tuple(
            tuple(int(x) for x in b.split("x")) for b in opts["blocks"].split(",")
        )
        space = SumRank(int(opts["q"]), blocks)
    elif kind == "subspace":
        dims = tuple(sorted({len(w) for w in words}))
        space = Subspace(int(opts["q"]), int(opts["n"]), dims,
                         opts.get("metric", "S"))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "subspace":
        words = [canonical_subspace(w, space.q) for w in words]
    for w in words:
        _validate_word(space, w)
    return ExplicitCode(space, tuple(words))


def load_code(path: str) -> ExplicitCode:
    with open(path) as fh:
        return parse_code(fh.read())


def _format_matrix(mat) -> str:
    return ";".join(" ".join(str(v) for v in row) for row in mat)


def _space_header(s: SpaceSpec) -> str:
    if isinstance(s, Hamming):
        return f"space hamming q={s.q} n={s.n}"
    if isinstance(s, Rank):
        return f"space rank q={s.q} n={s.n} m={s.m}"
    if isinstance(s, CoverMetric):
        return f"space cover q={s.q} n={s.n} m={s.m}"
    if isinstance(s, PairMetric):
        return f"space pair q={s.q} n={s.n}"
    if isinstance(s, Insdel):
        return f"space insdel v={s.v} n={s.n}"
    if isinstance(s, Permutation):
        return f"space permutation n={s.n} metric={s.metric}"
    if isinstance(s, SumRank):
        blocks = ",".join(f"{n}x{m}" for n, m in s.blocks)
        return f"space sumrank q={s.q} blocks={blocks}"
    if isinstance(s, Subspace):
        return f"space subspace q={s.q} n={s.n} metric={s.metric}"
    raise TypeError(f"unknown space {s!r}")


def format_code(code: ExplicitCode) -> str:
    """Serialize an ExplicitCode back to the text format."""
    s = code.space
    out = [_space_header(s)]
    for w in code.codewords:
        if isinstance(s, (Hamming, PairMetric, Insdel, Permutation)):
            out.append(" ".join(str(v) for v in w))
        elif isinstance(s, (Rank, CoverMetric, Subspace)):
            out.append(_format_matrix(w))
        elif isinstance(s, SumRank):
            out.append("|".join(_format_matrix(b) for b in w))
    return "\n".join(out) + "\n"


def save_code(code: ExplicitCode, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(format_code(code))
