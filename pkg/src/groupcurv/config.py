"""Build group specs, elements, and kernels from shorthands and JSON files.

Shorthands cover the bundled families:

    zn:N       free abelian group of rank N
    free:K     free group of rank K
    heis3      integer Heisenberg group, generators a, b
    dinf       infinite dihedral group, reflections a, b
    z2xdinf    Z/2 x infinite dihedral, with the fibre-and-lift generators

Anything else is described by a JSON config file with a "family" key; nested
families (direct products, dihedral extensions) nest configs. Elements are
written either as words in the generator letters (capitals are inverses) or
as JSON literals in the family's coordinates.
"""

from __future__ import annotations

import json
import os
from typing import Any

from .balls import KernelSpec
from .errors import ConfigError, FamilyMismatchError, GroupCurvError
from .gensets import dinf_extension_genset
from .groups import (
    DirectProductGroup,
    Element,
    FiniteByDihedralGroup,
    FiniteTableGroup,
    FreeAbelianGroup,
    FreeGroup,
    GeneratingSet,
    Group,
    GroupSpec,
    HeisenbergGroup,
    InfiniteDihedralGroup,
    IntegerMatrixGroup,
)

SHORTHANDS = ("zn:N", "free:K", "heis3", "dinf", "z2xdinf")


def _positive_int(value: Any, what: str) -> int:
    try:
        out = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{what} must be an integer, got {value!r}")
    if out < 1:
        raise ConfigError(f"{what} must be >= 1, got {out}")
    return out


def z2xdinf_spec() -> GroupSpec:
    """Z/2 x infinite dihedral as a trivial dihedral extension of Z/2."""
    finite = FiniteTableGroup(((0, 1), (1, 0)), names=("e", "g"))
    group = FiniteByDihedralGroup(
        finite, alpha=(0, 1), beta=(0, 1), a_squared=0, b_squared=0
    )
    seed = GroupSpec(group)
    return GroupSpec(group, dinf_extension_genset(seed))


def _spec_from_shorthand(text: str) -> GroupSpec:
    name, _, arg = text.partition(":")
    if name == "zn":
        return GroupSpec(FreeAbelianGroup(_positive_int(arg, "zn rank")))
    if name == "free":
        return GroupSpec(FreeGroup(_positive_int(arg, "free rank")))
    if arg:
        raise ConfigError(f"shorthand {name!r} takes no parameter, got {text!r}")
    if name == "heis3":
        return GroupSpec(HeisenbergGroup())
    if name == "dinf":
        return GroupSpec(InfiniteDihedralGroup())
    if name == "z2xdinf":
        return z2xdinf_spec()
    raise ConfigError(
        f"unknown group {text!r}; use one of {', '.join(SHORTHANDS)} or a JSON config file"
    )


def group_from_config(cfg: Any) -> Group:
    """Instantiate a group from a (possibly nested) config mapping."""
    if not isinstance(cfg, dict):
        raise ConfigError(f"group config must be a mapping, got {type(cfg).__name__}")
    family = cfg.get("family")
    try:
        if family == "free_abelian":
            return FreeAbelianGroup(_positive_int(cfg["rank"], "rank"))
        if family == "free":
            return FreeGroup(_positive_int(cfg["rank"], "rank"))
        if family == "heisenberg3":
            return HeisenbergGroup()
        if family == "infinite_dihedral":
            return InfiniteDihedralGroup()
        if family == "finite_table":
            return FiniteTableGroup(cfg["table"], cfg.get("names"))
        if family == "direct_product":
            return DirectProductGroup(
                group_from_config(cfg["left"]), group_from_config(cfg["right"])
            )
        if family == "finite_by_dihedral":
            finite = group_from_config(cfg["finite"])
            if not isinstance(finite, FiniteTableGroup):
                raise ConfigError(
                    "finite_by_dihedral needs a finite_table group under 'finite'"
                )
            return FiniteByDihedralGroup(
                finite,
                cfg["alpha"],
                cfg["beta"],
                cfg.get("a_squared"),
                cfg.get("b_squared"),
            )
        if family == "integer_matrix":
            return IntegerMatrixGroup(
                _positive_int(cfg["dimension"], "dimension"),
                cfg.get("matrix_generators", []),
            )
    except KeyError as exc:
        raise ConfigError(f"family {family!r} config is missing key {exc.args[0]!r}")
    raise ConfigError(f"unknown family {family!r} in group config")


def _spec_from_config(cfg: dict) -> GroupSpec:
    group = group_from_config(cfg)
    literals = cfg.get("generators")
    if literals is None:
        return GroupSpec(group)
    elements = [group.element(lit) for lit in literals]
    symmetrize = cfg.get("symmetrize", True)
    return GroupSpec(group, GeneratingSet(group, elements, symmetrize=symmetrize))


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}")


def build_spec(source: Any) -> GroupSpec:
    """Resolve a shorthand string, config mapping, or JSON path to a spec."""
    if isinstance(source, GroupSpec):
        return source
    if isinstance(source, dict):
        return _spec_from_config(source)
    if not isinstance(source, str):
        raise ConfigError(f"cannot build a group from {source!r}")
    text = source.strip()
    if text.endswith(".json") or os.path.sep in text or os.path.isfile(text):
        cfg = _load_json(text)
        return _spec_from_config(cfg)
    return _spec_from_shorthand(text)


def parse_element(spec: GroupSpec, text: str) -> Element:
    """Parse a CLI element argument: a word, a JSON literal, or a name.

    Words use the spec's generator letters, one lowercase letter per
    generator in set order (inverses reuse their generator's letter as a
    capital). "1" is the identity. Structured literals are JSON arrays in
    the family's own coordinates; table-backed groups also accept element
    names.
    """
    t = text.strip()
    if not t:
        raise ConfigError("empty element")
    if t == "1":
        return spec.group.identity()
    if t[0] in "[-0123456789":
        try:
            literal = json.loads(t)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"element {text!r} is not valid JSON: {exc}")
        return spec.group.element(literal)
    if all(ch.isalpha() for ch in t) and all(ch.lower() in spec.letters for ch in t):
        return spec.word(t)
    try:
        return spec.group.element(t)
    except GroupCurvError:
        raise ConfigError(
            f"cannot parse element {text!r}: not a word over letters "
            f"{''.join(sorted(spec.letters))}, a JSON literal, or a known name"
        )


def load_genset(source: Any, spec: GroupSpec) -> GeneratingSet:
    """Load a generating set for an existing group from a JSON description.

    The config holds "generators", a list of element literals in the group's
    coordinates, and optionally "symmetrize" (default true) to append missing
    inverses rather than reject the set.
    """
    cfg = _load_json(source) if isinstance(source, str) else source
    if not isinstance(cfg, dict) or "generators" not in cfg:
        raise ConfigError("generating-set config must be a mapping with 'generators'")
    elements = [spec.group.element(lit) for lit in cfg["generators"]]
    return GeneratingSet(spec.group, elements, symmetrize=cfg.get("symmetrize", True))


def load_kernel(source: Any, spec: GroupSpec) -> KernelSpec:
    """Load a kernel description: a quotient group plus generator images.

    The config maps each generator letter to the image of that generator in
    the quotient; images of inverse generators are derived. Whether the
    images actually define a homomorphism is certified later, on the ball.
    """
    cfg = _load_json(source) if isinstance(source, str) else source
    if not isinstance(cfg, dict):
        raise ConfigError("kernel config must be a mapping")
    try:
        quotient = group_from_config(cfg["quotient"])
        images_cfg = cfg["images"]
    except KeyError as exc:
        raise ConfigError(f"kernel config is missing key {exc.args[0]!r}")
    if not isinstance(images_cfg, dict):
        raise ConfigError("kernel 'images' must map generator letters to literals")
    unknown = set(images_cfg) - set(spec.letters)
    if unknown:
        raise ConfigError(
            f"kernel images name unknown letters {sorted(unknown)}; "
            f"the generating set has letters {''.join(sorted(spec.letters))}"
        )
    by_letter = {}
    for letter, literal in images_cfg.items():
        try:
            by_letter[letter] = quotient.element(literal)
        except FamilyMismatchError as exc:
            raise ConfigError(f"kernel image for letter {letter!r}: {exc}")
    letter_of = {payload: letter for letter, payload in spec.letters.items()}
    images = []
    for g in spec.gens.elements:
        letter = letter_of.get(g)
        if letter is not None:
            if letter not in by_letter:
                raise ConfigError(f"kernel images are missing letter {letter!r}")
            images.append(by_letter[letter])
            continue
        partner = letter_of.get(spec.group.invert(g))
        if partner is None:
            raise ConfigError(
                f"generator {spec.group.render(g)} has no letter; "
                f"kernel images cannot cover it"
            )
        if partner not in by_letter:
            raise ConfigError(f"kernel images are missing letter {partner!r}")
        images.append(quotient.invert(by_letter[partner]))
    return KernelSpec(quotient, images, label=str(cfg.get("label", "kernel")))


__all__ = [
    "SHORTHANDS",
    "build_spec",
    "group_from_config",
    "parse_element",
    "load_genset",
    "load_kernel",
    "z2xdinf_spec",
]
