"""JSON input parsing and exact-value encoding.

Inputs are small hand-written documents, so the schema is strict: any
unknown key is rejected with a message naming it, and every number that is
not a plain integer travels as a ["numerator", "denominator"] pair of
decimal strings so that round trips are bit-exact.  No floats are accepted
or produced anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclonum import CyclotomicNumber
from .errors import ValidationError
from .eulerlab import CurveStrata, FormalProduct, GSetStrata
from .groupoidstack import (
    FiniteGSet,
    gset_from_generator_action,
    gset_from_table,
    natural_gset,
)
from .grouptheory import FiniteGroup, group_from_permutations, group_from_table
from .orbicurve import FracDivisor, OrbifoldCurve


def _require_keys(data: dict, allowed: set[str], where: str) -> None:
    unknown = set(data) - allowed
    if unknown:
        raise ValidationError(
            f"unknown key(s) {sorted(unknown)} in {where}; allowed: {sorted(allowed)}"
        )


def fraction_to_json(q: Fraction):
    q = Fraction(q)
    if q.denominator == 1:
        return int(q)
    return [str(q.numerator), str(q.denominator)]


def fraction_from_json(value, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ValidationError(f"{where}: booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValidationError(
            f"{where}: floats are not accepted; use [\"num\", \"den\"] strings"
        )
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(s, (str, int)) for s in value)
    ):
        try:
            return Fraction(int(value[0]), int(value[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"{where}: bad rational {value!r}: {exc}") from None
    raise ValidationError(f"{where}: expected integer or [num, den], got {value!r}")


def cyclo_to_json(v: CyclotomicNumber):
    if v.is_rational:
        return fraction_to_json(v.rational_value())
    return v.to_dict()


def cyclo_from_json(value, where: str) -> CyclotomicNumber:
    if isinstance(value, dict):
        _require_keys(value, {"conductor", "coeffs"}, where)
        return CyclotomicNumber.from_dict(value)
    return CyclotomicNumber.from_rational(fraction_from_json(value, where))


# -- domain object parsing ---------------------------------------------------


def group_from_json(data, presets=None) -> FiniteGroup:
    """{"permutations": [...]} | {"table": [...]} | {"preset": name} | name."""
    if isinstance(data, str):
        return _preset_group(data, presets)
    if not isinstance(data, dict):
        raise ValidationError(f"group spec must be an object or name, got {data!r}")
    _require_keys(data, {"permutations", "table", "preset"}, "group spec")
    given = [k for k in ("permutations", "table", "preset") if k in data]
    if len(given) != 1:
        raise ValidationError(
            f"group spec needs exactly one of permutations/table/preset, got {given}"
        )
    if "preset" in data:
        return _preset_group(data["preset"], presets)
    if "permutations" in data:
        return group_from_permutations(data["permutations"])
    return group_from_table(data["table"])


def _preset_group(name: str, presets) -> FiniteGroup:
    from . import presets as preset_mod

    table = presets if presets is not None else preset_mod.GROUP_BUILDERS
    if name not in table:
        raise ValidationError(
            f"unknown group preset {name!r}; available: {sorted(table)}"
        )
    return table[name]()


def gset_from_json(data) -> FiniteGSet:
    """{"group": spec, "points": s, "action": rows} with [point][element] rows.

    "action_generators" may replace "action" when the group is built from
    permutations; "natural": true uses the defining permutation action.
    """
    if isinstance(data, str):
        from . import presets as preset_mod

        return preset_mod.gset_preset(data)
    if not isinstance(data, dict):
        raise ValidationError(f"gset spec must be an object or name, got {data!r}")
    _require_keys(
        data, {"group", "points", "action", "action_generators", "natural"}, "gset spec"
    )
    group = group_from_json(data.get("group"))
    if data.get("natural"):
        extra = set(data) & {"points", "action", "action_generators"}
        if extra:
            raise ValidationError(f"natural action excludes keys {sorted(extra)}")
        return natural_gset(group)
    if "points" not in data:
        raise ValidationError("gset spec needs a 'points' count")
    points = data["points"]
    if not isinstance(points, int) or points < 0:
        raise ValidationError(f"'points' must be a non-negative integer, got {points!r}")
    if ("action" in data) == ("action_generators" in data):
        raise ValidationError("gset spec needs exactly one of action/action_generators")
    if "action" in data:
        rows = data["action"]
        if len(rows) != points:
            raise ValidationError(
                f"action has {len(rows)} rows for {points} points"
            )
        return gset_from_table(group, rows)
    cols = data["action_generators"]
    for col in cols:
        if len(col) != points:
            raise ValidationError("generator column length differs from 'points'")
    return gset_from_generator_action(group, cols)


def curve_from_json(data) -> OrbifoldCurve:
    """{"genus": g, "stacky": [{"label": ..., "order": ...}, ...]}"""
    if isinstance(data, str):
        from . import presets as preset_mod

        return preset_mod.curve_preset(data)
    if not isinstance(data, dict):
        raise ValidationError(f"curve spec must be an object or name, got {data!r}")
    _require_keys(data, {"genus", "stacky"}, "curve spec")
    if "genus" not in data or not isinstance(data["genus"], int):
        raise ValidationError("curve spec needs an integer 'genus'")
    pts = []
    for i, entry in enumerate(data.get("stacky", [])):
        if not isinstance(entry, dict):
            raise ValidationError(f"stacky[{i}] must be an object")
        _require_keys(entry, {"label", "order"}, f"stacky[{i}]")
        if "label" not in entry or "order" not in entry:
            raise ValidationError(f"stacky[{i}] needs 'label' and 'order'")
        pts.append((entry["label"], entry["order"]))
    return OrbifoldCurve(data["genus"], tuple(pts))


def divisor_from_json(data, curve: OrbifoldCurve) -> FracDivisor:
    """[{"label": ..., "num": ..., "den": ...}, ...]"""
    if isinstance(data, str):
        from . import presets as preset_mod

        return preset_mod.divisor_preset(data, curve)
    if not isinstance(data, list):
        raise ValidationError(f"divisor spec must be a list, got {data!r}")
    pairs = []
    for i, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise ValidationError(f"divisor[{i}] must be an object")
        _require_keys(entry, {"label", "num", "den"}, f"divisor[{i}]")
        if "label" not in entry or "num" not in entry:
            raise ValidationError(f"divisor[{i}] needs 'label' and 'num'")
        num = entry["num"]
        den = entry.get("den", 1)
        if not isinstance(num, int) or not isinstance(den, int):
            raise ValidationError(f"divisor[{i}] num/den must be integers")
        pairs.append((entry["label"], Fraction(num, den)))
    return FracDivisor.from_pairs(curve, pairs)


def curve_strata_from_json(data, curve: OrbifoldCurve) -> CurveStrata:
    """{"open": w, "points": {label: w, ...}}"""
    if isinstance(data, str):
        from . import presets as preset_mod

        return preset_mod.weights_preset(data, curve)
    if not isinstance(data, dict):
        raise ValidationError(f"weights spec must be an object, got {data!r}")
    _require_keys(data, {"open", "points"}, "weights spec")
    if "open" not in data:
        raise ValidationError("weights spec needs an 'open' weight")
    open_w = fraction_from_json(data["open"], "weights.open")
    pts = tuple(
        (label, fraction_from_json(w, f"weights.points[{label!r}]"))
        for label, w in sorted(data.get("points", {}).items())
    )
    return CurveStrata(curve, open_w, pts)


def gset_strata_from_json(data, gset: FiniteGSet) -> GSetStrata:
    """{"points": [w per point]}"""
    if not isinstance(data, dict):
        raise ValidationError(f"weights spec must be an object, got {data!r}")
    _require_keys(data, {"points"}, "weights spec")
    weights = data.get("points")
    if not isinstance(weights, list):
        raise ValidationError("gset weights need a 'points' list")
    parsed = [fraction_from_json(w, f"weights.points[{i}]") for i, w in enumerate(weights)]
    return GSetStrata.from_point_weights(gset, parsed)


def bundle_from_json(data, gset: FiniteGSet | None = None):
    """{"gset": ref, "orbit_characters": [{"orbit": i, "values_on_stab_classes": [...]}]}

    The base may be embedded under "gset" or supplied by the caller; values
    are integers, ["num", "den"] pairs or cyclotomic objects.  Orbits left
    unlisted get the zero virtual character.
    """
    from .chartheory import ClassFunction, VirtualEqBundle
    from .groupoidstack import orbits
    from .grouptheory import conjugacy_classes

    if not isinstance(data, dict):
        raise ValidationError(f"bundle spec must be an object, got {data!r}")
    _require_keys(data, {"gset", "orbit_characters"}, "bundle spec")
    if gset is None:
        if "gset" not in data:
            raise ValidationError("bundle spec needs a 'gset' base")
        gset = gset_from_json(data["gset"])
    dec = orbits(gset)
    entries = data.get("orbit_characters", [])
    by_orbit = {}
    for i, entry in enumerate(entries):
        _require_keys(entry, {"orbit", "values_on_stab_classes"}, f"orbit_characters[{i}]")
        if entry["orbit"] in by_orbit:
            raise ValidationError(f"orbit {entry['orbit']} listed twice")
        by_orbit[entry["orbit"]] = entry["values_on_stab_classes"]
    chars = []
    for o, rep in enumerate(dec.representatives):
        stab_group, _ = gset.stabilizer(rep).as_group()
        count = conjugacy_classes(stab_group).count
        if o in by_orbit:
            raw = by_orbit.pop(o)
            if len(raw) != count:
                raise ValidationError(
                    f"orbit {o} needs {count} class values, got {len(raw)}"
                )
            vals = tuple(
                cyclo_from_json(v, f"orbit {o} value {j}") for j, v in enumerate(raw)
            )
            chars.append(ClassFunction(stab_group, vals))
        else:
            from .cyclonum import ZERO

            chars.append(ClassFunction(stab_group, (ZERO,) * count))
    if by_orbit:
        raise ValidationError(f"orbit indices {sorted(by_orbit)} out of range")
    return VirtualEqBundle(gset, tuple(chars))


def matrix_rep_from_json(data, group: FiniteGroup):
    """{"generators": [matrix, ...]} with one matrix per recorded generator.

    Entries are integers, ["num", "den"] pairs or cyclotomic objects; the
    images are extended to the whole group and validated as a homomorphism.
    """
    from .chartheory import rep_from_generator_images

    if not isinstance(data, dict):
        raise ValidationError(f"matrix rep spec must be an object, got {data!r}")
    _require_keys(data, {"generators"}, "matrix rep spec")
    if group.generators is None:
        raise ValidationError("matrix rep by generators needs a permutation-built group")
    mats = data.get("generators", [])
    if len(mats) != len(group.generators):
        raise ValidationError(
            f"expected {len(group.generators)} generator matrices, got {len(mats)}"
        )
    images = {}
    for g, raw in zip(group.generators, mats):
        images[g] = tuple(
            tuple(cyclo_from_json(v, f"matrix for generator {g}") for v in row)
            for row in raw
        )
    return rep_from_generator_images(group, images)


# -- report encoding ---------------------------------------------------------


def encode_value(v):
    """Recursively encode report payloads into JSON-safe exact values."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return fraction_to_json(v)
    if isinstance(v, CyclotomicNumber):
        return cyclo_to_json(v)
    if isinstance(v, FormalProduct):
        return {
            "factors": [
                [fraction_to_json(b), fraction_to_json(e)] for b, e in v.factors
            ]
        }
    if isinstance(v, str):
        return v
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    raise ValidationError(f"cannot encode {type(v).__name__} into a report")
