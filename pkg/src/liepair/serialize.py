"""Canonical JSON serialization for every file format the CLI accepts.

Rationals travel as strings "p/q" (reduced, positive denominator), never as
floats, so round trips are bit-exact.  Canonical output uses sorted keys and
compact separators; identical inputs serialize to identical bytes.
"""

from __future__ import annotations

import json

from .artin import ArtinAlgebra
from .cohomology import CohomologyReport
from .liealg import Derivation, LieAlgebra, LiePair
from .mc import GaugeParameter, MCElement
from .omega import OmegaElement
from .scalars import format_scalar, parse_scalar


class FormatError(ValueError):
    pass


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- Artinian algebras -------------------------------------------------------

def artin_to_obj(algebra: ArtinAlgebra):
    return {
        "dim": algebra.dim,
        "basis": list(algebra.basis),
        "table": [
            [[format_scalar(x) for x in vec] for vec in row] for row in algebra.table
        ],
    }


def artin_from_obj(obj) -> ArtinAlgebra:
    try:
        table = [[[parse_scalar(x) for x in vec] for vec in row] for row in obj["table"]]
        basis = obj.get("basis")
        if obj["dim"] != len(table):
            raise FormatError("declared dim does not match table size")
        return ArtinAlgebra(table, basis=basis, name=obj.get("name"))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed Artinian algebra document: {exc}") from exc


# -- Lie algebras and pairs --------------------------------------------------

def lie_to_obj(lie: LieAlgebra):
    brackets = []
    for i in range(lie.dim):
        for j in range(i + 1, lie.dim):
            for k, c in enumerate(lie.f[i][j]):
                if c:
                    brackets.append({"i": i, "j": j, "k": k, "coeff": format_scalar(c)})
    return {"dim": lie.dim, "basis": list(lie.basis), "brackets": brackets}


def lie_from_obj(obj) -> LieAlgebra:
    try:
        entries = [
            (rec["i"], rec["j"], rec["k"], parse_scalar(rec["coeff"]))
            for rec in obj["brackets"]
        ]
        return LieAlgebra.from_sparse(
            obj["dim"], entries, basis=obj.get("basis"), name=obj.get("name")
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed Lie algebra document: {exc}") from exc


def pair_to_obj(pair: LiePair):
    obj = lie_to_obj(pair.lie)
    obj["subalgebra_rank"] = pair.rank
    return obj


def pair_from_obj(obj) -> LiePair:
    lie = lie_from_obj(obj)
    try:
        rank = obj["subalgebra_rank"]
    except KeyError as exc:
        raise FormatError("missing subalgebra_rank") from exc
    return LiePair(lie, rank, name=obj.get("name"))


# -- Omega elements ----------------------------------------------------------

def omega_to_obj(el: OmegaElement):
    return {
        "degree": el.degree,
        "terms": [
            {"indices": list(idxs), "b_index": b, "coeff": format_scalar(c)}
            for idxs, b, c in el.terms()
        ],
    }


def omega_from_obj(pair: LiePair, obj) -> OmegaElement:
    try:
        terms = [
            (tuple(rec["indices"]), rec["b_index"], parse_scalar(rec["coeff"]))
            for rec in obj["terms"]
        ]
        return OmegaElement.from_terms(pair, obj["degree"], terms)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed Omega element document: {exc}") from exc


# -- Maurer-Cartan elements and gauge parameters ------------------------------

def _algebra_ref_to_obj(algebra: ArtinAlgebra):
    if algebra.name:
        return algebra.name
    return artin_to_obj(algebra)


def resolve_algebra(ref) -> ArtinAlgebra:
    from .catalog import get_algebra

    if isinstance(ref, str):
        return get_algebra(ref)
    return artin_from_obj(ref)


def mc_to_obj(xi: MCElement):
    return {
        "algebra": _algebra_ref_to_obj(xi.algebra),
        "terms": [
            {"m_index": i, "element": omega_to_obj(c)}
            for i, c in enumerate(xi.comps)
            if i > 0 and not c.is_zero()
        ],
    }


def mc_from_obj(pair: LiePair, obj, algebra: ArtinAlgebra | None = None) -> MCElement:
    try:
        alg = algebra if algebra is not None else resolve_algebra(obj["algebra"])
        terms = [
            (rec["m_index"], omega_from_obj(pair, rec["element"]))
            for rec in obj["terms"]
        ]
        for idx, el in terms:
            if el.degree != 1:
                raise FormatError("Maurer-Cartan components must have degree 1")
            if not 0 < idx < alg.dim:
                raise FormatError(f"m_index {idx} out of range for the algebra")
        return MCElement.from_terms(pair, alg, terms)
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"malformed Maurer-Cartan document: {exc}") from exc


def gauge_to_obj(delta: GaugeParameter):
    return {
        "mode": delta.mode,
        "algebra": _algebra_ref_to_obj(delta.algebra),
        "matrices": [
            {
                "m_index": i,
                "matrix": [[format_scalar(x) for x in row] for row in d.matrix],
            }
            for i, d in enumerate(delta.comps)
            if i > 0 and not d.is_zero()
        ],
    }


def gauge_from_obj(pair: LiePair, obj, algebra: ArtinAlgebra | None = None) -> GaugeParameter:
    try:
        alg = algebra if algebra is not None else resolve_algebra(obj["algebra"])
        mode = obj.get("mode", "weak")
        comps = [Derivation.zero(pair.lie) for _ in range(alg.dim)]
        for rec in obj["matrices"]:
            idx = rec["m_index"]
            if not 0 < idx < alg.dim:
                raise FormatError(f"m_index {idx} out of range for the algebra")
            matrix = [[parse_scalar(x) for x in row] for row in rec["matrix"]]
            comps[idx] = comps[idx] + Derivation(pair.lie, matrix, check=True)
        return GaugeParameter(pair, alg, comps, mode=mode, check=True)
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"malformed gauge parameter document: {exc}") from exc


def small_aut_to_obj(pi):
    return {
        "algebra": _algebra_ref_to_obj(pi.algebra),
        "blocks": [
            {
                "m_index": i,
                "matrix": [[format_scalar(x) for x in row] for row in b],
            }
            for i, b in enumerate(pi.blocks)
            if i > 0 and any(any(row) for row in b)
        ],
    }


# -- Cohomology reports --------------------------------------------------------

def report_to_obj(report: CohomologyReport):
    return {
        "pair": report.pair_name,
        "complex": report.complex_name,
        "degree": report.degree,
        "dimension": report.dimension,
        "kernel_dim": report.kernel_dim,
        "image_dim": report.image_dim,
        "representatives": [omega_to_obj(el) for el in report.representatives],
        "image_basis": [omega_to_obj(el) for el in report.image_basis],
    }
