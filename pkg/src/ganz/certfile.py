"""Reading and writing certificate documents.

A document is one JSON object::

    {"version": 1, "nvars": n,
     "set": {"p": [expr, ...], "g": [expr, ...]},
     "kind": "cone" | "radical",
     "cone": [{"subset": [i, ...], "sos": [expr, ...]}, ...],
     "radical": {"h": expr,
                 "generators": [[{"subset": ..., "sos": ...}, ...], ...],
                 "coeffs": [{"poly": [{"monomial": [k, ...], "coeff": expr}, ...],
                             "t_m": expr,
                             "t_a": [{"monomial": ..., "coeff": ...}, ...]}, ...]}}

``cone`` appears only for kind "cone" and ``radical`` only for kind
"radical".  Every expression uses the parser grammar; unknown fields are
rejected.
"""

from __future__ import annotations

import json

from ganz.certificates import (
    SOS,
    AlgebraElem,
    ConeCert,
    LocalizedElem,
    RadicalCert,
    SetDescription,
)
from ganz.errors import CertificateFormatError, DivisionByZero, ParseError
from ganz.ovf_core import KElem
from ganz.parser import parse

VERSION = 1


def _fields(obj, required, optional=(), where="document"):
    if not isinstance(obj, dict):
        raise CertificateFormatError(f"{where} must be an object")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise CertificateFormatError(f"unknown field(s) in {where}: {sorted(unknown)}")
    missing = [k for k in required if k not in obj]
    if missing:
        raise CertificateFormatError(f"missing field(s) in {where}: {missing}")


def _expr(text, nvars, where):
    if not isinstance(text, str):
        raise CertificateFormatError(f"{where} must be an expression string")
    try:
        return parse(text, nvars)
    except (ParseError, DivisionByZero) as exc:
        raise CertificateFormatError(f"{where}: {exc}") from exc


def _kelem(text, where):
    return _expr(text, 0, where).constant_value()


def _poly(text, nvars, where):
    f = _expr(text, nvars, where)
    if not f.is_polynomial():
        raise CertificateFormatError(f"{where} must be a polynomial")
    return f.as_poly()


def _list(xs, where):
    if not isinstance(xs, list):
        raise CertificateFormatError(f"{where} must be a list")
    return xs


def _ints(xs, where):
    if not isinstance(xs, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in xs):
        raise CertificateFormatError(f"{where} must be a list of integers")
    return xs


# encoding ---------------------------------------------------------------------


def _enc_cone(cert: ConeCert):
    return [{"subset": list(J), "sos": [str(q) for q in sos.parts]} for J, sos in cert.terms]


def _enc_poly(a: AlgebraElem):
    return [{"monomial": list(e), "coeff": str(c)} for e, c in a.poly]


def encode(s: SetDescription, cert) -> dict:
    doc = {
        "version": VERSION,
        "nvars": s.nvars,
        "set": {"p": [str(p) for p in s.p], "g": [str(g) for g in s.g]},
    }
    if isinstance(cert, ConeCert):
        doc["kind"] = "cone"
        doc["cone"] = _enc_cone(cert)
    elif isinstance(cert, RadicalCert):
        doc["kind"] = "radical"
        doc["radical"] = {
            "h": str(cert.h),
            "generators": [_enc_cone(g) for g in cert.generators],
            "coeffs": [
                {"poly": _enc_poly(c.a), "t_m": str(c.t_m), "t_a": _enc_poly(c.t_a)}
                for c in cert.coeffs
            ],
        }
    else:
        raise TypeError(f"cannot encode {type(cert).__name__}")
    return doc


def dumps(s: SetDescription, cert) -> str:
    return json.dumps(encode(s, cert), indent=2, ensure_ascii=False) + "\n"


# decoding ---------------------------------------------------------------------


def _dec_cone(items, nvars, where):
    if not isinstance(items, list):
        raise CertificateFormatError(f"{where} must be a list")
    mapping = {}
    for k, item in enumerate(items):
        w = f"{where}[{k}]"
        _fields(item, ("subset", "sos"), where=w)
        J = tuple(_ints(item["subset"], w + ".subset"))
        if not isinstance(item["sos"], list) or not item["sos"]:
            raise CertificateFormatError(f"{w}.sos must be a nonempty list")
        parts = [_expr(t, nvars, w + ".sos") for t in item["sos"]]
        if J in mapping:
            mapping[J] = SOS(mapping[J].parts + tuple(parts))
        else:
            mapping[J] = SOS(tuple(parts))
    return ConeCert.from_mapping(mapping)


def _dec_poly(items, where):
    if not isinstance(items, list):
        raise CertificateFormatError(f"{where} must be a list")
    terms = {}
    for k, item in enumerate(items):
        w = f"{where}[{k}]"
        _fields(item, ("monomial", "coeff"), where=w)
        e = tuple(_ints(item["monomial"], w + ".monomial"))
        c = _kelem(item["coeff"], w + ".coeff")
        terms[e] = terms.get(e, KElem.coerce(0)) + c
    return AlgebraElem.from_mapping(terms)


def decode(doc: dict):
    """Return ``(SetDescription, ConeCert | RadicalCert)``."""
    _fields(doc, ("version", "nvars", "set", "kind"), ("cone", "radical"))
    if doc["version"] != VERSION:
        raise CertificateFormatError(f"unsupported version {doc['version']!r}")
    n = doc["nvars"]
    if not isinstance(n, int) or n < 0:
        raise CertificateFormatError("nvars must be a nonnegative integer")
    _fields(doc["set"], ("p", "g"), where="set")
    p = [_poly(t, n, "set.p") for t in _list(doc["set"]["p"], "set.p")]
    g = [_expr(t, n, "set.g") for t in _list(doc["set"]["g"], "set.g")]
    s = SetDescription(tuple(p), tuple(g), n)
    kind = doc["kind"]
    if kind == "cone":
        if "radical" in doc or "cone" not in doc:
            raise CertificateFormatError("kind 'cone' needs a 'cone' field and no 'radical' field")
        return s, _dec_cone(doc["cone"], n, "cone")
    if kind == "radical":
        if "cone" in doc or "radical" not in doc:
            raise CertificateFormatError("kind 'radical' needs a 'radical' field and no 'cone' field")
        r = doc["radical"]
        _fields(r, ("h", "generators", "coeffs"), where="radical")
        h = _expr(r["h"], n, "radical.h")
        gens = tuple(_dec_cone(gc, n, f"radical.generators[{k}]") for k, gc in enumerate(_list(r["generators"], "radical.generators")))
        coeffs = []
        if not isinstance(r["coeffs"], list):
            raise CertificateFormatError("radical.coeffs must be a list")
        for k, c in enumerate(r["coeffs"]):
            w = f"radical.coeffs[{k}]"
            _fields(c, ("poly", "t_m", "t_a"), where=w)
            coeffs.append(
                LocalizedElem(_dec_poly(c["poly"], w + ".poly"), _kelem(c["t_m"], w + ".t_m"), _dec_poly(c["t_a"], w + ".t_a"))
            )
        return s, RadicalCert(h, gens, tuple(coeffs))
    raise CertificateFormatError(f"unknown kind {kind!r}")


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"not a JSON document: {exc}") from exc
    return decode(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
