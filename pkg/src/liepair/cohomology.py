"""Exact cohomology: kernels, images, dimensions, and representative bases.

Three complexes are exposed in degree 1, matching the three deformation
functors' tangent spaces:

* ``CE``: the Chevalley-Eilenberg cohomology of the Bott module, any degree;
* ``H_ext``: cocycles in degree 1 modulo the combined degree-0 image of the
  full derivation algebra (through the unary bracket) and of B (through the
  differential) -- the tangent space of the weak functor;
* ``H0_ext``: the same with derivations restricted to inner ones -- the
  tangent space of the semistrict functor.

All ranks come from fraction-free reduced echelon forms with deterministic
pivoting, so representative bases are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .liealg import LiePair, derivation_space, inner_derivation_space
from .omega import OmegaElement, b1_der, d_ce
from .scalars import ONE, ZERO


@dataclass
class CohomologyReport:
    pair_name: str
    complex_name: str  # "CE" | "H_ext" | "H0_ext"
    degree: int
    dimension: int
    representatives: list = field(default_factory=list)  # OmegaElement cocycles
    image_basis: list = field(default_factory=list)  # OmegaElement boundaries
    kernel_dim: int = 0
    image_dim: int = 0


def omega_dim(pair, k):
    return len(OmegaElement.zero(pair, k).flat())


def d_matrix(pair, k):
    """Matrix of d: Omega^k -> Omega^(k+1) in flat coordinates (rows = target)."""
    src = omega_dim(pair, k)
    dst = omega_dim(pair, k + 1)
    cols = []
    for i in range(src):
        flat = [ONE if t == i else ZERO for t in range(src)]
        cols.append(d_ce(OmegaElement.from_flat(pair, k, flat)).flat())
    return [[cols[j][i] for j in range(src)] for i in range(dst)]


def kernel_basis(pair, k):
    """Flat basis of the degree-k cocycles."""
    src = omega_dim(pair, k)
    mat = d_matrix(pair, k)
    if not mat:  # target space is zero: everything is a cocycle
        return linalg.identity(src)
    return linalg.nullspace(mat, n_cols=src)


def _image_rows_ce(pair, k):
    """Flat spanning rows of the image of d: Omega^(k-1) -> Omega^k."""
    if k == 0:
        return []
    src = omega_dim(pair, k - 1)
    rows = []
    for i in range(src):
        flat = [ONE if t == i else ZERO for t in range(src)]
        img = d_ce(OmegaElement.from_flat(pair, k - 1, flat)).flat()
        if not linalg.is_zero_vec(img):
            rows.append(img)
    return rows


def _degree0_image_rows(pair, complex_name):
    """Image of the degree-0 differential of the chosen complex inside Omega^1."""
    rows = _image_rows_ce(pair, 1)
    if complex_name == "CE":
        return rows
    if complex_name == "H_ext":
        ders = derivation_space(pair.lie)
    elif complex_name == "H0_ext":
        ders = inner_derivation_space(pair.lie)
    else:
        raise ValueError(f"unknown complex {complex_name!r}")
    for d in ders:
        img = b1_der(pair, d).flat()
        if not linalg.is_zero_vec(img):
            rows.append(img)
    return rows


def _quotient_report(pair, pair_name, complex_name, degree, kernel_rows, image_rows):
    image_rank = linalg.rank(image_rows) if image_rows else 0
    chosen = linalg.complete_basis(image_rows, kernel_rows)
    reps = [OmegaElement.from_flat(pair, degree, kernel_rows[i]) for i in chosen]
    img_echelon = (
        linalg.rref(image_rows)[0][:image_rank] if image_rows else []
    )
    image_els = [OmegaElement.from_flat(pair, degree, v) for v in img_echelon]
    return CohomologyReport(
        pair_name=pair_name,
        complex_name=complex_name,
        degree=degree,
        dimension=len(kernel_rows) - image_rank,
        representatives=reps,
        image_basis=image_els,
        kernel_dim=len(kernel_rows),
        image_dim=image_rank,
    )


def h_ce(pair: LiePair, k: int, pair_name: str = "") -> CohomologyReport:
    """Chevalley-Eilenberg cohomology of the Bott module in degree k."""
    if not 0 <= k <= pair.rank:
        raise ValueError("degree out of range for the complex")
    return _quotient_report(
        pair, pair_name or (pair.name or ""), "CE", k,
        kernel_basis(pair, k), _image_rows_ce(pair, k),
    )


def h1_weak(pair: LiePair, pair_name: str = "") -> CohomologyReport:
    """Tangent space of the weak deformation functor (degree-1 cohomology)."""
    return _quotient_report(
        pair, pair_name or (pair.name or ""), "H_ext", 1,
        kernel_basis(pair, 1), _degree0_image_rows(pair, "H_ext"),
    )


def h1_semistrict(pair: LiePair, pair_name: str = "") -> CohomologyReport:
    """Tangent space of the semistrict deformation functor."""
    return _quotient_report(
        pair, pair_name or (pair.name or ""), "H0_ext", 1,
        kernel_basis(pair, 1), _degree0_image_rows(pair, "H0_ext"),
    )


def in_degree0_image(pair, complex_name, el: OmegaElement) -> bool:
    """Whether a degree-1 element is a boundary of the chosen complex."""
    if el.degree != 1:
        raise ValueError("class membership is defined for degree-1 elements")
    return linalg.row_space_contains(_degree0_image_rows(pair, complex_name), el.flat())


def classes_equal(pair, complex_name, x: OmegaElement, y: OmegaElement) -> bool:
    """Whether two degree-1 cocycles define the same cohomology class."""
    return in_degree0_image(pair, complex_name, x - y)
