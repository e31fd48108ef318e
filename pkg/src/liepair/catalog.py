"""Built-in Lie pairs and coefficient algebras, addressable by name.

Pairs: ``b3`` (upper-triangular 3x3 matrices with the first-row subalgebra),
``sl2_borel``, ``aff1``, ``heis3_center``, ``abelian_<n>_<r>``, and
``gl2_diag`` (diagonal subalgebra of gl2, whose splitting complement is not
bracket-closed, so the cubic bracket has nonzero witnesses).

Algebras: ``dual``, ``t^k`` for K[t]/(t^k), ``m2x<r>`` for the square-zero
algebra on r variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .artin import ArtinAlgebra, build_truncated
from .liealg import LieAlgebra, LiePair
from .scalars import ONE, ZERO


@dataclass
class CatalogEntry:
    name: str
    pair: LiePair
    note: str
    golden: dict = field(default_factory=dict)


def _matrix_lie(size, positions, basis_labels, name):
    """Lie algebra spanned by elementary matrices E_ab at the given positions."""
    index = {pos: i for i, pos in enumerate(positions)}
    n = len(positions)
    f = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, (a, b) in enumerate(positions):
        for j, (c, d) in enumerate(positions):
            # [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
            if b == c:
                f[i][j][index[(a, d)]] += ONE
            if d == a:
                f[i][j][index[(c, b)]] -= ONE
    return LieAlgebra(f, basis=basis_labels, name=name)


def _b3_pair():
    positions = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    labels = ["e11", "e12", "e13", "e22", "e23", "e33"]
    lie = _matrix_lie(3, positions, labels, "b3")
    return LiePair(lie, 3, name="b3")


def _sl2_borel_pair():
    # basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    lie = LieAlgebra.from_sparse(
        3,
        [(0, 1, 1, ONE * 2), (0, 2, 2, -ONE * 2), (1, 2, 0, ONE)],
        basis=["h", "e", "f"],
        name="sl2",
    )
    return LiePair(lie, 2, name="sl2_borel")


def _aff1_pair():
    # basis (y, x) with [x, y] = y, i.e. [y, x] = -y
    lie = LieAlgebra.from_sparse(2, [(0, 1, 0, -ONE)], basis=["y", "x"], name="aff1")
    return LiePair(lie, 1, name="aff1")


def _heis3_center_pair():
    # basis (z, x, y) with [x, y] = z and z central
    lie = LieAlgebra.from_sparse(3, [(1, 2, 0, ONE)], basis=["z", "x", "y"], name="heis3")
    return LiePair(lie, 1, name="heis3_center")


def _gl2_diag_pair():
    positions = [(0, 0), (1, 1), (0, 1), (1, 0)]
    labels = ["e11", "e22", "e12", "e21"]
    lie = _matrix_lie(2, positions, labels, "gl2")
    return LiePair(lie, 2, name="gl2_diag")


def _abelian_pair(n, r):
    f = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    lie = LieAlgebra(f, basis=[f"x{i}" for i in range(n)], name=f"abelian_{n}")
    return LiePair(lie, r, name=f"abelian_{n}_{r}")


_FIXED_PAIRS = {
    "b3": (
        _b3_pair,
        "upper-triangular 3x3 matrices, subalgebra spanned by the first row",
        {"ce": 3, "weak": 2},
    ),
    "sl2_borel": (
        _sl2_borel_pair,
        "sl2 with its Borel subalgebra span(h, e)",
        {},
    ),
    "aff1": (
        _aff1_pair,
        "affine line algebra [x,y] = y with subalgebra span(y)",
        {},
    ),
    "heis3_center": (
        _heis3_center_pair,
        "Heisenberg algebra with its center as subalgebra (not matched)",
        {},
    ),
    "gl2_diag": (
        _gl2_diag_pair,
        "gl2 with the diagonal subalgebra; complement not bracket-closed",
        {},
    ),
}

_ABELIAN_RE = re.compile(r"^abelian_(\d+)_(\d+)$")


def pair_names():
    return list(_FIXED_PAIRS) + ["abelian_4_2", "abelian_3_1"]


def get_entry(name: str) -> CatalogEntry:
    if name in _FIXED_PAIRS:
        build, note, golden = _FIXED_PAIRS[name]
        return CatalogEntry(name, build(), note, dict(golden))
    m = _ABELIAN_RE.match(name)
    if m:
        n, r = int(m.group(1)), int(m.group(2))
        return CatalogEntry(name, _abelian_pair(n, r), f"abelian of dim {n}, rank {r}", {})
    raise KeyError(f"unknown catalog pair {name!r}")


def get_pair(name: str) -> LiePair:
    return get_entry(name).pair


_TRUNC_RE = re.compile(r"^t\^(\d+)$")
_SQZ_RE = re.compile(r"^m2x(\d+)$")


def algebra_names():
    return ["dual", "t^3", "t^4", "t^5", "m2x2", "m2x3"]


def get_algebra(name: str) -> ArtinAlgebra:
    if name == "dual":
        return build_truncated(1, 2, name="dual")
    m = _TRUNC_RE.match(name)
    if m:
        k = int(m.group(1))
        if k < 2:
            raise KeyError(f"truncation order in {name!r} must be >= 2")
        return build_truncated(1, k, name=name)
    m = _SQZ_RE.match(name)
    if m:
        r = int(m.group(1))
        if r < 1:
            raise KeyError(f"variable count in {name!r} must be >= 1")
        return build_truncated(r, 2, name=name)
    raise KeyError(f"unknown catalog algebra {name!r}")
