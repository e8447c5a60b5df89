"""Sectioned key-value configuration files.

The format is deliberately small: ``[geometry]`` holds the lattice data,
each ``[curve NAME]`` one constraint curve, each ``[object NAME]`` one
Chern vector with optional class tag and effectivity flags, and
``[defaults]`` the run parameters.  Rationals are written ``p/q`` or as
integers, vectors as ``[r, r, ...]``, matrices as ``[[...], [...]]``.
Syntax problems raise ``ConfigParseError`` (exit code 2), semantic ones
``ConfigValidationError`` (exit code 1); both carry line and field
information.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curves import OneDimCurve, TiltCurve
from .errors import ConfigurationError, EllstabError
from .ring import BaseGeometry, ChernVector, DivisorB
from .verify import ClassTag, NumericClass


class ConfigParseError(EllstabError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ConfigValidationError(EllstabError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass
class ObjectSpec:
    vector: ChernVector
    numeric_class: NumericClass | None = None
    curve: str | None = None


@dataclass
class Defaults:
    precision_bits: int = 64
    order: int = 8
    cases: int = 200
    seed: int = 0

    @property
    def precision(self) -> Fraction:
        return Fraction(1, 2**self.precision_bits)


@dataclass
class Config:
    geometry: BaseGeometry
    curves: dict = field(default_factory=dict)
    objects: dict = field(default_factory=dict)
    defaults: Defaults = field(default_factory=Defaults)


def _parse_fraction(text: str, line: int) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigParseError(line, f"expected a rational, got {text!r}")


def _split_top_level(body: str, line: int) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in body:
        if ch == "[":
            depth += 1
            current.append(ch)
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ConfigParseError(line, "unbalanced brackets")
            current.append(ch)
        elif ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ConfigParseError(line, "unbalanced brackets")
    if current or parts:
        parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def _parse_vector(text: str, line: int) -> list[Fraction]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ConfigParseError(line, f"expected a bracketed vector, got {text!r}")
    return [_parse_fraction(p, line) for p in _split_top_level(text[1:-1], line)]


def _parse_matrix(text: str, line: int) -> list[list[Fraction]]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ConfigParseError(line, f"expected a bracketed matrix, got {text!r}")
    rows = _split_top_level(text[1:-1], line)
    return [_parse_vector(row, line) for row in rows]


def _parse_bool(text: str, line: int) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise ConfigParseError(line, f"expected a boolean, got {text!r}")


def _parse_sections(text: str):
    sections = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ConfigParseError(lineno, "malformed section header")
            header = stripped[1:-1].strip()
            if not header:
                raise ConfigParseError(lineno, "empty section header")
            current = {"header": header, "line": lineno, "entries": {}}
            sections.append(current)
            continue
        if "=" not in stripped:
            raise ConfigParseError(lineno, f"expected key = value, got {stripped!r}")
        if current is None:
            raise ConfigParseError(lineno, "entry outside of any section")
        key, _, value = stripped.partition("=")
        key = key.strip()
        if not key:
            raise ConfigParseError(lineno, "empty key")
        if key in current["entries"]:
            raise ConfigParseError(lineno, f"duplicate key {key!r}")
        current["entries"][key] = (value.strip(), lineno)
    return sections


def _take(entries: dict, key: str, path: str):
    if key not in entries:
        raise ConfigValidationError(f"{path}.{key}", "missing required key")
    return entries.pop(key)


def parse_config(text: str) -> Config:
    sections = _parse_sections(text)
    geometry = None
    curves: dict = {}
    objects_raw: list = []
    defaults = Defaults()

    for sec in sections:
        header, entries = sec["header"], dict(sec["entries"])
        parts = header.split(None, 1)
        kind = parts[0].lower()

        if kind == "geometry":
            value, line = _take(entries, "rank", "geometry")
            rank = int(_parse_fraction(value, line))
            value, line = _take(entries, "gram", "geometry")
            gram = _parse_matrix(value, line)
            value, line = _take(entries, "hb", "geometry")
            hb = _parse_vector(value, line)
            value, line = _take(entries, "h", "geometry")
            h = _parse_fraction(value, line)
            vprime = Fraction(0)
            if "vprime" in entries:
                value, line = entries.pop("vprime")
                vprime = _parse_fraction(value, line)
            m0 = Fraction(1)
            if "m0" in entries:
                value, line = entries.pop("m0")
                m0 = _parse_fraction(value, line)
            _reject_extras(entries, "geometry")
            try:
                geometry = BaseGeometry(rank, gram, hb, h, vprime, m0)
            except ConfigurationError as exc:
                raise ConfigValidationError(str(exc).split(":")[0], str(exc)) from exc
            continue

        if kind == "curve":
            if len(parts) != 2:
                raise ConfigParseError(sec["line"], "curve section needs a name")
            name = parts[1]
            value, line = _take(entries, "kind", f"curve.{name}")
            ckind = value.lower()
            if ckind == "tilt":
                a_v, a_l = _take(entries, "a", f"curve.{name}")
                b_v, b_l = _take(entries, "b", f"curve.{name}")
                params = (_parse_fraction(a_v, a_l), _parse_fraction(b_v, b_l))
            elif ckind == "onedim":
                y_v, y_l = _take(entries, "y", f"curve.{name}")
                z_v, z_l = _take(entries, "z", f"curve.{name}")
                params = (_parse_fraction(y_v, y_l), _parse_fraction(z_v, z_l))
            else:
                raise ConfigValidationError(f"curve.{name}.kind", f"unknown curve kind {ckind!r}")
            _reject_extras(entries, f"curve.{name}")
            curves[name] = (ckind, params)
            continue

        if kind == "object":
            if len(parts) != 2:
                raise ConfigParseError(sec["line"], "object section needs a name")
            name = parts[1]
            value, line = _take(entries, "vector", f"object.{name}")
            objects_raw.append((name, value, line, entries))
            continue

        if kind == "defaults":
            if "precision" in entries:
                value, line = entries.pop("precision")
                defaults.precision_bits = int(_parse_fraction(value, line))
            if "order" in entries:
                value, line = entries.pop("order")
                defaults.order = int(_parse_fraction(value, line))
            if "cases" in entries:
                value, line = entries.pop("cases")
                defaults.cases = int(_parse_fraction(value, line))
            if "seed" in entries:
                value, line = entries.pop("seed")
                defaults.seed = int(_parse_fraction(value, line))
            _reject_extras(entries, "defaults")
            continue

        raise ConfigParseError(sec["line"], f"unknown section {header!r}")

    if geometry is None:
        raise ConfigValidationError("geometry", "missing [geometry] section")

    cfg = Config(geometry=geometry)
    for name, (ckind, params) in curves.items():
        try:
            if ckind == "tilt":
                cfg.curves[name] = TiltCurve(geometry.h, *params)
            else:
                cfg.curves[name] = OneDimCurve(geometry.h, *params)
        except ConfigurationError as exc:
            raise ConfigValidationError(f"curve.{name}", str(exc)) from exc

    for name, value, line, entries in objects_raw:
        vector = parse_vector_literal(value, geometry.rank, line)
        tag = None
        if "class" in entries:
            tval, tline = entries.pop("class")
            try:
                tag = ClassTag(tval.strip())
            except ValueError:
                raise ConfigValidationError(f"object.{name}.class", f"unknown class {tval!r}")
        eta_eff = s_eff = False
        if "eta-effective" in entries:
            bval, bline = entries.pop("eta-effective")
            eta_eff = _parse_bool(bval, bline)
        if "s-effective" in entries:
            bval, bline = entries.pop("s-effective")
            s_eff = _parse_bool(bval, bline)
        curve_ref = None
        if "curve" in entries:
            cval, cline = entries.pop("curve")
            curve_ref = cval.strip()
            if curve_ref not in cfg.curves:
                raise ConfigValidationError(
                    f"object.{name}.curve", f"references undeclared curve {curve_ref!r}"
                )
        _reject_extras(entries, f"object.{name}")
        ncls = (
            NumericClass(tag, eta_effective=eta_eff, s_effective=s_eff) if tag is not None else None
        )
        cfg.objects[name] = ObjectSpec(vector=vector, numeric_class=ncls, curve=curve_ref)

    cfg.defaults = defaults
    return cfg


def _reject_extras(entries: dict, path: str) -> None:
    for key, (_, line) in entries.items():
        raise ConfigValidationError(f"{path}.{key}", f"unknown key (line {line})")


def parse_vector_literal(text: str, rank: int, line: int = 0) -> ChernVector:
    """Parse ``n x [S...] [eta...] a s`` into a Chern vector."""
    tokens = _tokenize_vector(text, line)
    if len(tokens) != 6:
        raise ConfigParseError(line, "vector literal needs six fields: n x [S] [eta] a s")
    n = _parse_fraction(tokens[0], line)
    x = _parse_fraction(tokens[1], line)
    s_div = DivisorB(_parse_vector(tokens[2], line))
    eta_div = DivisorB(_parse_vector(tokens[3], line))
    a = _parse_fraction(tokens[4], line)
    s = _parse_fraction(tokens[5], line)
    if s_div.rank != rank or eta_div.rank != rank:
        raise ConfigValidationError("vector", f"divisor parts must have rank {rank}")
    return ChernVector(n, x, s_div, eta_div, a, s)


def _tokenize_vector(text: str, line: int) -> list[str]:
    tokens, depth, current = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ConfigParseError(line, "unbalanced brackets in vector literal")
        if ch.isspace() and depth == 0:
            if current:
                tokens.append("".join(current))
                current = []
            continue
        current.append(ch)
    if depth != 0:
        raise ConfigParseError(line, "unbalanced brackets in vector literal")
    if current:
        tokens.append("".join(current))
    return tokens


def format_vector(v: ChernVector) -> str:
    """Inverse of ``parse_vector_literal``; round-trips exactly."""

    def fmt_div(d: DivisorB) -> str:
        return "[" + ",".join(str(c) for c in d.coords) + "]"

    return f"{v.n} {v.x} {fmt_div(v.S)} {fmt_div(v.eta)} {v.a} {v.s}"
