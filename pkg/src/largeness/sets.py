"""Decidable sets A over a semigroup, given as a small JSON-serializable DSL.

Kinds::

    {"kind": "list", "values": [...]}
    {"kind": "residues", "mod": 6, "residues": [0]}
    {"kind": "fs", "generators": [2, 4, 8]}
    {"kind": "interval-union", "intervals": [[lo, hi], ...]}
    {"kind": "union" | "intersect" | "difference", "of": [spec, spec, ...]}
    {"kind": "complement-finite", "excluded": [...]}

Every spec may carry ``"semigroup": "<key>"`` (default ``"nat"``).  Only
``list``, ``fs``, the boolean combinators and ``complement-finite`` make
sense outside N; ``residues`` and ``interval-union`` are N-only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from .errors import DepthCapError, SetSpecError
from .semigroups import NAT, Naturals, Semigroup, semigroup_from_key

KINDS = (
    "list",
    "residues",
    "fs",
    "interval-union",
    "union",
    "intersect",
    "difference",
    "complement-finite",
)
NAT_ONLY = ("residues", "interval-union")
FS_DEPTH_CAP = 16


@dataclass(frozen=True, eq=False)
class SetSpec:
    kind: str
    semigroup_key: str = "nat"
    values: tuple = ()
    modulus: int = 0
    residues: tuple = ()
    generators: tuple = ()
    intervals: tuple = ()
    children: tuple = ()
    excluded: tuple = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @cached_property
    def semigroup(self) -> Semigroup:
        return semigroup_from_key(self.semigroup_key)

    @cached_property
    def _finite_values(self) -> frozenset:
        if self.kind == "list":
            return frozenset(self.values)
        if self.kind == "complement-finite":
            return frozenset(self.excluded)
        if self.kind == "fs":
            return frozenset(_fs_values(self.semigroup, self.generators))
        raise AssertionError(self.kind)

    def __contains__(self, x) -> bool:
        k = self.kind
        if k in ("list", "fs"):
            return x in self._finite_values
        if k == "complement-finite":
            return self.semigroup.is_element(x) and x not in self._finite_values
        if k == "residues":
            return _is_nat(x) and x % self.modulus in self.residues
        if k == "interval-union":
            return _is_nat(x) and any(lo <= x <= hi for lo, hi in self.intervals)
        if k == "union":
            return any(x in c for c in self.children)
        if k == "intersect":
            return all(x in c for c in self.children)
        if k == "difference":
            first, *rest = self.children
            return x in first and not any(x in c for c in rest)
        raise AssertionError(k)

    def mask(self, limit: int) -> np.ndarray:
        """Boolean array ``m`` of length ``limit + 1`` with ``m[v] = (v in A)``.

        Only meaningful over N; ``m[0]`` is always False.
        """
        limit = int(limit)
        cached = self._cache.get("mask")
        if cached is not None and len(cached) > limit:
            return cached[: limit + 1]
        k = self.kind
        if k in ("list", "fs"):
            m = np.zeros(limit + 1, dtype=bool)
            vals = [v for v in self._finite_values if _is_nat(v) and v <= limit]
            m[vals] = True
        elif k == "complement-finite":
            m = np.ones(limit + 1, dtype=bool)
            m[[v for v in self._finite_values if _is_nat(v) and v <= limit]] = False
        elif k == "residues":
            m = np.isin(np.arange(limit + 1) % self.modulus, list(self.residues))
        elif k == "interval-union":
            m = np.zeros(limit + 1, dtype=bool)
            for lo, hi in self.intervals:
                m[max(lo, 0) : min(hi, limit) + 1] = True
        elif k == "union":
            m = np.zeros(limit + 1, dtype=bool)
            for c in self.children:
                m |= c.mask(limit)
        elif k == "intersect":
            m = np.ones(limit + 1, dtype=bool)
            for c in self.children:
                m &= c.mask(limit)
        elif k == "difference":
            m = self.children[0].mask(limit).copy()
            for c in self.children[1:]:
                m &= ~c.mask(limit)
        else:
            raise AssertionError(k)
        m[0] = False
        self._cache["mask"] = m
        return m

    def members(self, horizon: int) -> list:
        """Members among the first ``horizon`` enumerated semigroup elements."""
        if isinstance(self.semigroup, Naturals):
            return np.flatnonzero(self.mask(horizon)).tolist()
        return [x for x in self.semigroup.enumerate(horizon) if x in self]

    def to_json(self) -> dict:
        s = self.semigroup
        d: dict = {"kind": self.kind}
        if self.semigroup_key != "nat":
            d["semigroup"] = self.semigroup_key
        if self.kind == "list":
            d["values"] = [s.encode(v) for v in sorted(self.values, key=s.key)]
        elif self.kind == "residues":
            d["mod"] = self.modulus
            d["residues"] = sorted(self.residues)
        elif self.kind == "fs":
            d["generators"] = [s.encode(v) for v in self.generators]
        elif self.kind == "interval-union":
            d["intervals"] = [list(iv) for iv in self.intervals]
        elif self.kind in ("union", "intersect", "difference"):
            d["of"] = [c.to_json() for c in self.children]
        elif self.kind == "complement-finite":
            d["excluded"] = [s.encode(v) for v in sorted(self.excluded, key=s.key)]
        return d

    def describe(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _is_nat(x) -> bool:
    return NAT.is_element(x)


def _fs_values(s: Semigroup, gens: tuple) -> set:
    if len(gens) > FS_DEPTH_CAP:
        raise DepthCapError(f"fs set with {len(gens)} generators exceeds depth cap {FS_DEPTH_CAP}")
    if isinstance(s, Naturals):
        sums = kernels.fs_sums(gens)
        if sums is not None:
            return set(sums[1:].tolist())
    vals: list = []
    for x in gens:
        vals = vals + [x] + [s.add(v, x) for v in vals]
    return set(vals)


# -- constructors -----------------------------------------------------------

def naturals() -> SetSpec:
    return SetSpec("complement-finite")


def cofinite(excluded) -> SetSpec:
    return SetSpec("complement-finite", excluded=tuple(sorted(set(excluded))))


def finite(values, semigroup: str = "nat") -> SetSpec:
    return SetSpec("list", semigroup_key=semigroup, values=tuple(set(values)))


def residues(mod: int, res) -> SetSpec:
    return SetSpec("residues", modulus=mod, residues=tuple(sorted({r % mod for r in res})))


def multiples(d: int) -> SetSpec:
    return residues(d, [0])


def fs_set_spec(generators, semigroup: str = "nat") -> SetSpec:
    return SetSpec("fs", semigroup_key=semigroup, generators=tuple(generators))


def intervals(pairs) -> SetSpec:
    return SetSpec("interval-union", intervals=tuple((int(a), int(b)) for a, b in pairs))


def union(*specs) -> SetSpec:
    return SetSpec("union", children=tuple(specs))


def intersect(*specs) -> SetSpec:
    return SetSpec("intersect", children=tuple(specs))


def difference(*specs) -> SetSpec:
    return SetSpec("difference", children=tuple(specs))


# -- parsing ----------------------------------------------------------------

def parse_setspec(text_or_obj) -> SetSpec:
    """Parse a JSON document (string or already-decoded object) into a SetSpec.

    Raises SetSpecError carrying a JSON path such as ``$.of[1].mod``.
    """
    if isinstance(text_or_obj, (str, bytes)):
        try:
            obj = json.loads(text_or_obj)
        except json.JSONDecodeError as exc:
            raise SetSpecError("$", f"invalid JSON: {exc.msg}") from exc
    else:
        obj = text_or_obj
    return _parse(obj, "$", "nat")


def _parse(obj, path: str, inherited_sg: str) -> SetSpec:
    if not isinstance(obj, dict):
        raise SetSpecError(path, "expected an object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise SetSpecError(f"{path}.kind", f"unknown kind {kind!r}")
    sg_key = obj.get("semigroup", inherited_sg)
    if not isinstance(sg_key, str):
        raise SetSpecError(f"{path}.semigroup", "expected a string key")
    try:
        sg = semigroup_from_key(sg_key)
    except Exception as exc:
        raise SetSpecError(f"{path}.semigroup", str(exc)) from exc
    if kind in NAT_ONLY and not isinstance(sg, Naturals):
        raise SetSpecError(f"{path}.kind", f"{kind!r} is only defined over nat")

    def need(name, typ=list):
        if name not in obj:
            raise SetSpecError(f"{path}.{name}", "missing field")
        val = obj[name]
        if not isinstance(val, typ) or isinstance(val, bool):
            raise SetSpecError(f"{path}.{name}", f"expected {typ.__name__}")
        return val

    def elements(name):
        out = []
        for i, raw in enumerate(need(name)):
            try:
                out.append(sg.decode(raw))
            except Exception as exc:
                raise SetSpecError(f"{path}.{name}[{i}]", str(exc)) from exc
        return tuple(out)

    if kind == "list":
        return SetSpec(kind, sg_key, values=tuple(set(elements("values"))))
    if kind == "complement-finite":
        return SetSpec(kind, sg_key, excluded=tuple(sorted(set(elements("excluded")), key=sg.key)))
    if kind == "fs":
        gens = elements("generators")
        if not gens:
            raise SetSpecError(f"{path}.generators", "need at least one generator")
        if len(gens) > FS_DEPTH_CAP:
            raise SetSpecError(f"{path}.generators", f"more than {FS_DEPTH_CAP} generators")
        return SetSpec(kind, sg_key, generators=gens)
    if kind == "residues":
        mod = need("mod", int)
        if mod < 1:
            raise SetSpecError(f"{path}.mod", "modulus must be >= 1")
        res = need("residues")
        for i, r in enumerate(res):
            if not isinstance(r, int) or isinstance(r, bool):
                raise SetSpecError(f"{path}.residues[{i}]", "expected int")
        return SetSpec(kind, sg_key, modulus=mod, residues=tuple(sorted({r % mod for r in res})))
    if kind == "interval-union":
        ivs = []
        for i, iv in enumerate(need("intervals")):
            if (
                not isinstance(iv, list)
                or len(iv) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in iv)
                or iv[0] > iv[1]
            ):
                raise SetSpecError(f"{path}.intervals[{i}]", "expected [lo, hi] with lo <= hi")
            ivs.append((iv[0], iv[1]))
        return SetSpec(kind, sg_key, intervals=tuple(ivs))
    # combinators
    kids = need("of")
    if not kids:
        raise SetSpecError(f"{path}.of", "need at least one operand")
    children = tuple(_parse(c, f"{path}.of[{i}]", sg_key) for i, c in enumerate(kids))
    return SetSpec(kind, sg_key, children=children)


def load_setspec(path) -> SetSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_setspec(fh.read())
