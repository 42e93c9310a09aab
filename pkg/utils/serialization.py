from typing import Any, Dict, Iterator, List
import json
import math
import os
import tempfile

from core import Bicomplex, IdempotentPair, ParseError, from_idempotent, to_idempotent
from hilbert import Ket, ScalarProductSpec
from orthonormal import OrthonormalSystem
from sequences import BicomplexSequence, ZERO_TAIL


def _pair(value: Any, key: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise ParseError(f"{key!r} must be a [re, im] pair of numbers, got {value!r}")
    try:
        return complex(value[0], value[1])
    except OverflowError as e:
        raise ParseError(f"{key!r} does not fit in a float") from e


def _number_pair(z: complex) -> List[float]:
    return [float(z.real), float(z.imag)]


def bicomplex_to_json(w: Bicomplex) -> Dict[str, List[float]]:
    """Cartesian form {"z1": [re, im], "z2": [re, im]}; output is never idempotent."""
    return {"z1": _number_pair(w.z1), "z2": _number_pair(w.z2)}


def idempotent_to_json(w: Bicomplex) -> Dict[str, List[float]]:
    pair = to_idempotent(w)
    return {"h1": _number_pair(pair.h1), "h2": _number_pair(pair.h2)}


def bicomplex_from_json(obj: Any) -> Bicomplex:
    """Reads either the Cartesian {"z1", "z2"} or the idempotent {"h1", "h2"} form."""
    if not isinstance(obj, dict):
        raise ParseError(f"a bicomplex number must be a JSON object, got {obj!r}")
    try:
        if set(obj) == {"z1", "z2"}:
            return Bicomplex(_pair(obj["z1"], "z1"), _pair(obj["z2"], "z2"))
        if set(obj) == {"h1", "h2"}:
            return from_idempotent(IdempotentPair(_pair(obj["h1"], "h1"), _pair(obj["h2"], "h2")))
    except ValueError as e:
        # non-finite coordinates
        raise ParseError(str(e)) from e
    raise ParseError(f"expected keys z1, z2 or h1, h2, got {sorted(obj)}")


def ket_to_json(ket: Ket) -> Dict[str, Any]:
    return {"coeffs": [bicomplex_to_json(c) for c in ket.coeffs]}


def ket_from_json(obj: Any) -> Ket:
    if not isinstance(obj, dict) or not isinstance(obj.get("coeffs"), list):
        raise ParseError("a ket must be an object with a 'coeffs' list")
    return Ket.from_coeffs([bicomplex_from_json(c) for c in obj["coeffs"]])


def spec_to_json(spec: ScalarProductSpec) -> Dict[str, Any]:
    return {"dim": spec.dim, "w1": list(spec.w1), "w2": list(spec.w2)}


def spec_from_json(obj: Any) -> ScalarProductSpec:
    """Reads {"dim": N, "w1": [...], "w2": [...]}; omitted weights default to all ones."""
    if not isinstance(obj, dict) or not isinstance(obj.get("dim"), int):
        raise ParseError("a space spec must be an object with an integer 'dim'")
    try:
        return ScalarProductSpec(obj["dim"], obj.get("w1"), obj.get("w2"))
    except (TypeError, ValueError, OverflowError) as e:
        raise ParseError(f"invalid space spec: {e}") from e


def system_to_json(system: OrthonormalSystem) -> Dict[str, Any]:
    return {
        "space": spec_to_json(system.space),
        "kets": [ket_to_json(ket) for ket in system.kets],
    }


def system_from_json(obj: Any) -> OrthonormalSystem:
    space, kets = kets_from_json(obj)
    return OrthonormalSystem(space, tuple(kets))


def kets_from_json(obj: Any) -> tuple[ScalarProductSpec, List[Ket]]:
    """Reads the {"space": <spec>, "kets": [...]} layout shared by inputs and orthonormal systems."""
    if not isinstance(obj, dict) or "space" not in obj or not isinstance(obj.get("kets"), list):
        raise ParseError("expected an object with 'space' and a 'kets' list")
    return spec_from_json(obj["space"]), [ket_from_json(k) for k in obj["kets"]]


def sequence_to_json(s: BicomplexSequence) -> Dict[str, Any]:
    return {"values": [bicomplex_to_json(v) for v in s.values], "tail": s.tail}


def sequence_from_json(obj: Any) -> BicomplexSequence:
    if not isinstance(obj, dict) or not isinstance(obj.get("values"), list):
        raise ParseError("a sequence must be an object with a 'values' list")
    if obj.get("tail", ZERO_TAIL) != ZERO_TAIL:
        raise ParseError(f"unsupported tail model {obj['tail']!r}, only {ZERO_TAIL!r} is defined")
    return BicomplexSequence.from_values([bicomplex_from_json(v) for v in obj["values"]])


SIGNIFICANT_DIGITS = 17


def _float17(x: float) -> str:
    if not math.isfinite(x):
        return "NaN" if x != x else ("Infinity" if x > 0 else "-Infinity")
    # "#" keeps trailing zeros, so every float carries all its digits
    text = f"{x:#.{SIGNIFICANT_DIGITS}g}"
    return text + "0" if text.endswith(".") else text


class Float17Encoder(json.JSONEncoder):
    """Writes every float with 17 significant digits, which always reads back to the same double."""

    def iterencode(self, o: Any, _one_shot: bool = False) -> Iterator[str]:
        # the C encoder hard-codes float.__repr__, so go through the pure-Python one
        encode = json.encoder._make_iterencode(
            {} if self.check_circular else None,
            self.default,
            json.encoder.encode_basestring_ascii if self.ensure_ascii else json.encoder.encode_basestring,
            self.indent,
            _float17,
            self.key_separator,
            self.item_separator,
            self.sort_keys,
            self.skipkeys,
            _one_shot,
        )
        return encode(o, 0)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, cls=Float17Encoder)


def load_json(path: str) -> Any:
    """Reads a JSON document; OSError propagates, malformed JSON becomes ParseError."""
    with open(path, "r") as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: {e}") from e


def dump_json_atomic(obj: Any, path: str) -> None:
    """Writes JSON through a temporary file in the target directory, so failures leave nothing behind."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(dumps(obj))
            f.write("\n")
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
