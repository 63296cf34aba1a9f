"""MatrixFile JSON documents.

Every rational number is a ``[num, den]`` pair of decimal strings, and
polynomial data is stored coefficient-major as ``coeffs[degree][row][col]``.
Documents are written with sorted keys, so equal objects serialize to equal
bytes.

Kinds:

``poly_matrix``    rows, cols, coeffs
``rat_matrix``     rows, cols, num_coeffs, den_coeffs (entry = num/den)
``pencil``         rows, cols, coeffs with exactly two slices [M0, M1]
``system_matrix``  rows, cols, coeffs, n, layout, state_rows, state_cols, role
``family_spec``    family plus the family's own fields (see ``load_family``)
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .constructors import BlockKroneckerSpec, CorkSpec, PreconditionError, RecurrenceBasis, Realization
from .exactalg import RatFunc, UniPoly
from .polymat import Pencil, PolyMatrix, RatMatrix, q_shape
from .rosenbrock import SystemMatrix

KINDS = ("poly_matrix", "rat_matrix", "pencil", "system_matrix", "family_spec")
FAMILIES = ("frobenius", "comrade", "cork", "blockkron", "extblockkron", "rational")


class ParseError(ValueError):
    """Malformed MatrixFile document."""


# -- scalars ----------------------------------------------------------------
def enc_q(x) -> list:
    x = Fraction(x)
    return [str(x.numerator), str(x.denominator)]


def dec_q(v) -> Fraction:
    try:
        if isinstance(v, list) and len(v) == 2:
            num, den = (int(s) if isinstance(s, str) else _int_only(s) for s in v)
            if den == 0:
                raise ParseError("zero denominator")
            return Fraction(num, den)
        if isinstance(v, str):
            return Fraction(v)
        if isinstance(v, int) and not isinstance(v, bool):
            return Fraction(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {v!r}: {exc}") from None
    raise ParseError(f"bad rational {v!r}")


def _int_only(v):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"expected an integer or decimal string, got {v!r}")
    return v


def enc_qmat(a) -> list:
    return [[enc_q(x) for x in row] for row in a]


def dec_qmat(v, rows: int | None = None, cols: int | None = None) -> tuple:
    if not isinstance(v, list) or any(not isinstance(r, list) for r in v):
        raise ParseError("constant matrix must be a list of rows")
    out = tuple(tuple(dec_q(x) for x in row) for row in v)
    if out and len({len(r) for r in out}) != 1:
        raise ParseError("ragged constant matrix")
    if rows is not None and q_shape(out, cols) != (rows, cols if cols is not None else q_shape(out)[1]):
        raise ParseError(f"constant matrix has shape {q_shape(out)}, expected {(rows, cols)}")
    return out


def enc_poly(p: UniPoly) -> list:
    return [enc_q(c) for c in p.coeffs]


def dec_poly(v) -> UniPoly:
    if not isinstance(v, list):
        raise ParseError("polynomial must be a coefficient list")
    return UniPoly([dec_q(c) for c in v])


# -- matrices ---------------------------------------------------------------
def _coeff_slices(M: PolyMatrix, min_len: int = 1) -> list:
    d = max(M.degree(), min_len - 1)
    return [enc_qmat(M.coeff(k)) for k in range(d + 1)]


def _dec_slices(doc: dict, key: str = "coeffs") -> PolyMatrix:
    rows, cols = _dims(doc)
    slices = doc.get(key)
    if not isinstance(slices, list) or not slices:
        raise ParseError(f"missing or empty {key!r}")
    mats = [dec_qmat(s) for s in slices]
    for m in mats:
        if q_shape(m, cols) != (rows, cols):
            raise ParseError(f"coefficient slice of shape {q_shape(m, cols)}, declared {(rows, cols)}")
    return PolyMatrix.from_coeffs(mats, rows=rows, cols=cols)


def _dims(doc: dict) -> tuple:
    try:
        rows, cols = doc["rows"], doc["cols"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from None
    if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in (rows, cols)):
        raise ParseError("rows and cols must be nonnegative integers")
    return rows, cols


def to_doc(obj: Any, role: str | None = None) -> dict:
    """In-memory object -> MatrixFile dictionary."""
    if isinstance(obj, SystemMatrix):
        S = obj.S
        doc = {"kind": "system_matrix", "rows": S.rows, "cols": S.cols, "coeffs": _coeff_slices(S, 2),
               "n": obj.n, "layout": obj.layout, "state_rows": list(obj.state_rows),
               "state_cols": list(obj.state_cols)}
        if role:
            doc["role"] = role
        return doc
    if isinstance(obj, Pencil):
        r, c = obj.shape
        return {"kind": "pencil", "rows": r, "cols": c, "coeffs": [enc_qmat(obj.M0), enc_qmat(obj.M1)]}
    if isinstance(obj, PolyMatrix):
        return {"kind": "poly_matrix", "rows": obj.rows, "cols": obj.cols, "coeffs": _coeff_slices(obj)}
    if isinstance(obj, RatMatrix):
        num = PolyMatrix([[f.num for f in row] for row in obj.entries], rows=obj.rows, cols=obj.cols)
        den = PolyMatrix([[f.den for f in row] for row in obj.entries], rows=obj.rows, cols=obj.cols)
        return {"kind": "rat_matrix", "rows": obj.rows, "cols": obj.cols,
                "num_coeffs": _coeff_slices(num), "den_coeffs": _coeff_slices(den)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_doc(doc: dict):
    """MatrixFile dictionary -> in-memory object."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}")
    if kind == "poly_matrix":
        return _dec_slices(doc)
    if kind == "rat_matrix":
        num, den = _dec_slices(doc, "num_coeffs"), _dec_slices(doc, "den_coeffs")
        try:
            ents = [[RatFunc(num.entries[i][j], den.entries[i][j]) for j in range(num.cols)]
                    for i in range(num.rows)]
        except ZeroDivisionError:
            raise ParseError("zero denominator polynomial") from None
        return RatMatrix(ents, rows=num.rows, cols=num.cols)
    if kind == "pencil":
        M = _dec_slices(doc)
        if len(doc["coeffs"]) != 2:
            raise ParseError("a pencil has exactly two coefficient slices")
        return Pencil.from_polymatrix(M)
    if kind == "system_matrix":
        S = _dec_slices(doc)
        try:
            sm = SystemMatrix(S, doc["state_rows"], doc["state_cols"], doc.get("layout", "custom"))
        except KeyError as exc:
            raise ParseError(f"missing field {exc}") from None
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParseError(str(exc)) from None
        if "n" in doc and doc["n"] != sm.n:
            raise ParseError(f"declared n = {doc['n']} but {sm.n} state indices given")
        return sm
    return load_family(doc)


def dumps(obj: Any, role: str | None = None) -> str:
    doc = obj if isinstance(obj, dict) else to_doc(obj, role)
    return json.dumps(doc, sort_keys=True, indent=1)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_doc(doc)


def load_doc(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from None


def read(path: str):
    return from_doc(load_doc(path))


def write(path: str, obj: Any, role: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj, role) + "\n")


# -- family specs -----------------------------------------------------------
@dataclass(frozen=True)
class FamilySpec:
    """A parsed ``family_spec`` document.

    ``data`` depends on the family: frobenius -> PolyMatrix; comrade ->
    (coeffs, RecurrenceBasis); cork -> CorkSpec; blockkron/extblockkron ->
    BlockKroneckerSpec; rational -> (Realization, polynomial part,
    strictly proper part or None).
    """

    family: str
    data: Any


def _req(doc: dict, key: str):
    if key not in doc:
        raise ParseError(f"family spec missing field {key!r}")
    return doc[key]


def _int_field(doc: dict, key: str) -> int:
    v = _req(doc, key)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{key!r} must be an integer")
    return v


def _sub(doc: dict, key: str, kind: str):
    sub = _req(doc, key)
    obj = from_doc(sub)
    if sub.get("kind") != kind:
        raise ParseError(f"{key!r} must be a {kind} document")
    return obj


def load_family(doc: dict) -> FamilySpec:
    fam = doc.get("family")
    if fam not in FAMILIES:
        raise ParseError(f"unknown family {fam!r}")
    try:
        if fam == "frobenius":
            return FamilySpec(fam, _sub(doc, "P", "poly_matrix"))
        if fam == "comrade":
            coeffs = [dec_qmat(c) for c in _req(doc, "coeffs")]
            basis = RecurrenceBasis([dec_q(x) for x in _req(doc, "alphas")], [dec_q(x) for x in _req(doc, "betas")],
                                    [dec_q(x) for x in _req(doc, "gammas")])
            return FamilySpec(fam, (coeffs, basis))
        if fam == "cork":
            spec = CorkSpec([dec_qmat(a) for a in _req(doc, "A")], [dec_qmat(b) for b in _req(doc, "B")],
                            dec_qmat(_req(doc, "X")), dec_qmat(_req(doc, "Y")),
                            [dec_poly(p) for p in _req(doc, "basis")])
            return FamilySpec(fam, spec)
        if fam in ("blockkron", "extblockkron"):
            spec = BlockKroneckerSpec(dec_qmat(_req(doc, "M0")), dec_qmat(_req(doc, "M1")), _int_field(doc, "eps"),
                                      _int_field(doc, "eta"), _int_field(doc, "p"), _int_field(doc, "m"),
                                      dec_qmat(doc["Y"]) if "Y" in doc else None,
                                      dec_qmat(doc["Z"]) if "Z" in doc else None)
            return FamilySpec(fam, spec)
        rd = _req(doc, "realization")
        real = Realization(dec_qmat(_req(rd, "A_s")), dec_qmat(_req(rd, "B_s")), dec_qmat(_req(rd, "C_s")))
        if "R" in doc:
            from .constructors import split_poly_sp

            P, Rsp = split_poly_sp(_sub(doc, "R", "rat_matrix"))
            return FamilySpec(fam, (real, P, Rsp))
        return FamilySpec(fam, (real, _sub(doc, "poly", "poly_matrix"), None))
    except (ParseError, PreconditionError):
        raise
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise ParseError(f"bad {fam} spec: {exc}") from None


def family_doc(family: str, data) -> dict:
    """Inverse of :func:`load_family`."""
    doc = {"kind": "family_spec", "family": family}
    if family == "frobenius":
        doc["P"] = to_doc(data)
    elif family == "comrade":
        coeffs, basis = data
        doc.update(coeffs=[enc_qmat(c) for c in coeffs], alphas=[enc_q(x) for x in basis.alphas],
                   betas=[enc_q(x) for x in basis.betas], gammas=[enc_q(x) for x in basis.gammas])
    elif family == "cork":
        doc.update(A=[enc_qmat(a) for a in data.A], B=[enc_qmat(b) for b in data.B], X=enc_qmat(data.X),
                   Y=enc_qmat(data.Y), basis=[enc_poly(p) for p in data.basis])
    elif family in ("blockkron", "extblockkron"):
        doc.update(M0=enc_qmat(data.M0), M1=enc_qmat(data.M1), eps=data.eps, eta=data.eta, p=data.p, m=data.m)
        if data.Yext is not None:
            doc["Y"] = enc_qmat(data.Yext)
        if data.Zext is not None:
            doc["Z"] = enc_qmat(data.Zext)
    elif family == "rational":
        real, P, Rsp = data
        doc["realization"] = {"A_s": enc_qmat(real.A_s), "B_s": enc_qmat(real.B_s), "C_s": enc_qmat(real.C_s)}
        if Rsp is None:
            doc["poly"] = to_doc(P)
        else:
            doc["R"] = to_doc(P.to_ratmatrix() + Rsp)
    else:
        raise ValueError(f"unknown family {family!r}")
    return doc
