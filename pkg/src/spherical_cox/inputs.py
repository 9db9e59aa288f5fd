"""Reading space/embedding descriptions from TOML files.

Layout::

    [space]            dims, m, h_connected
    [[space.relations]] poly = "<polynomial>"
    [embedding]        rays = [[...], ...], labels (optional)
    [bold]             d_matrix, xc_rank, mu_restriction, bold_rays, h_connected (optional)
    [wonderful]        vars, z_sections, roots, relations, correspondence (optional)

With a ``[bold]`` table the ``[space]`` table describes the lift with
trivial class group; its rays default to the lift of ``bold_rays``.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .brion import BrionError, WonderfulPresentation
from .data import BoldSpaceDatum, DatumError, EmbeddingDatum, SphericalDatum
from .descent import lift_fan
from .multipoly import PolynomialError, Var, VarTable, parse


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class Problem:
    space: SphericalDatum
    embedding: EmbeddingDatum
    bold: BoldSpaceDatum | None = None
    wonderful: WonderfulPresentation | None = None
    source: str = ""
    rays_given: bool = True
    correspondence: dict = field(default_factory=dict)


FIXTURES = ("sl2_torus", "sl2_ntorus", "sl3_horospherical", "sl_d", "toric")


def fixture_path(name: str) -> Path:
    """Path of a bundled example description."""
    if name not in FIXTURES:
        raise InputError(f"no bundled fixture {name!r}")
    return Path(str(resources.files("spherical_cox") / "fixtures" / f"{name}.toml"))


def _int_matrix(rows, what: str) -> tuple[tuple[int, ...], ...]:
    try:
        return tuple(tuple(int(x) for x in row) for row in rows)
    except (TypeError, ValueError):
        raise InputError(f"{what} must be a list of integer lists") from None


def _parse_var(token: str) -> Var:
    f = parse(token)
    if len(f) != 1:
        raise InputError(f"{token!r} is not a variable")
    (mono, c), = f.items()
    if c != 1 or len(mono) != 1 or mono[0][1] != 1:
        raise InputError(f"{token!r} is not a variable")
    return mono[0][0]


def problem_from_dict(doc: dict, source: str = "") -> Problem:
    try:
        return _build(doc, source)
    except (DatumError, PolynomialError, BrionError) as exc:
        raise InputError(str(exc)) from None
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed input: {exc}") from None


def _build(doc: dict, source: str) -> Problem:
    if "space" not in doc:
        raise InputError("missing [space] table")
    sp = doc["space"]
    dims = _int_matrix([sp.get("dims", ())], "space.dims")[0]
    if "r" in sp and int(sp["r"]) != len(dims):
        raise InputError("space.r does not match the length of space.dims")
    m = _int_matrix([[sp.get("m", 0)]], "space.m")[0][0]
    table = VarTable.standard(dims, m)
    rels = []
    for entry in sp.get("relations", ()):
        text = entry["poly"] if isinstance(entry, dict) else entry
        rels.append(parse(str(text), table))
    space = SphericalDatum(dims, m, tuple(rels), bool(sp.get("h_connected", True)))

    bold = None
    if "bold" in doc:
        bd = doc["bold"]
        d = _int_matrix(bd["d_matrix"], "bold.d_matrix")
        mu = _int_matrix(bd.get("mu_restriction", ()), "bold.mu_restriction")
        bold = BoldSpaceDatum(
            d, int(bd.get("xc_rank", len(mu))), mu, _int_matrix(bd.get("bold_rays", ()), "bold.bold_rays"),
            weight_rank=len(d[0]) if d else m, h_connected=bool(bd.get("h_connected", space.h_connected)),
        )

    emb_doc = doc.get("embedding")
    rays_given = emb_doc is not None and "rays" in emb_doc
    if rays_given:
        emb = EmbeddingDatum(_int_matrix(emb_doc["rays"], "embedding.rays"), tuple(emb_doc.get("labels", ())))
        emb.check_rank(space.rank)
    elif bold is not None:
        emb = lift_fan(bold)
    else:
        emb = EmbeddingDatum(())

    wonderful = None
    if "wonderful" in doc:
        wd = doc["wonderful"]
        variables = tuple(_parse_var(str(t)) for t in wd.get("vars", ()))
        wonderful = WonderfulPresentation(
            variables,
            tuple(parse(str(z)) for z in wd.get("z_sections", ())),
            _int_matrix(wd.get("roots", ()), "wonderful.roots"),
            tuple(parse(str(z)) for z in wd.get("relations", ())),
        )
        corr = {_parse_var(str(a)): _parse_var(str(b)) for a, b in wd.get("correspondence", {}).items()}
    else:
        corr = {}
    return Problem(space, emb, bold, wonderful, source, rays_given, corr)


def load(path: str | Path) -> Problem:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc.strerror or exc}") from None
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise InputError(f"{p}: {exc}") from None
    return problem_from_dict(doc, str(p))


def load_fixture(name: str) -> Problem:
    return load(fixture_path(name))
