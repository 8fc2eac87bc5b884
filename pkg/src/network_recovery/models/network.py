"""
Network File Model - Serialized damaged network (domain, radius, vertices)
"""
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..exceptions import NetworkFileError
from .complex import ComplexKind
from .geometry import Domain, Point2, PointTag, TaggedPoint, round_coord, tag_points

FIELDS = ("a", "r", "kind", "existing", "boundary")


def _number(data: Dict[str, Any], key: str, default: float) -> float:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise NetworkFileError(key, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise NetworkFileError(key, f"must be a positive finite number, got {value}")
    return value


def _point_list(data: Dict[str, Any], key: str, side: float) -> List[Point2]:
    raw = data.get(key, [])
    if not isinstance(raw, list):
        raise NetworkFileError(key, "expected a list of [x, y] pairs")
    points = []
    for i, item in enumerate(raw):
        where = f"{key}[{i}]"
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise NetworkFileError(where, f"expected an [x, y] pair, got {item!r}")
        if any(isinstance(c, bool) or not isinstance(c, (int, float)) for c in item):
            raise NetworkFileError(where, f"coordinates must be numbers, got {item!r}")
        x, y = float(item[0]), float(item[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NetworkFileError(where, "coordinates must be finite")
        if not (0 <= x <= side and 0 <= y <= side):
            raise NetworkFileError(where, f"point ({x}, {y}) lies outside [0, {side}]^2")
        points.append(Point2(x, y))
    return points


@dataclass
class NetworkFile:
    """Inputs of a recovery: domain side, radius, complex kind, vertex lists"""
    a: float = 1.0
    r: float = 0.25
    kind: ComplexKind = ComplexKind.RIPS
    existing: List[Point2] = field(default_factory=list)
    boundary: Optional[List[Point2]] = None

    @property
    def domain(self) -> Domain:
        return Domain(self.a)

    def existing_points(self) -> List[TaggedPoint]:
        return tag_points(self.existing, PointTag.EXISTING)

    def boundary_points(self) -> Optional[List[TaggedPoint]]:
        if self.boundary is None:
            return None
        return tag_points(self.boundary, PointTag.BOUNDARY)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "a": round_coord(self.a),
            "r": round_coord(self.r),
            "kind": self.kind.value,
            "existing": [p.to_list() for p in self.existing],
        }
        if self.boundary is not None:
            data["boundary"] = [p.to_list() for p in self.boundary]
        return data

    @classmethod
    def from_dict(cls, data: Any) -> "NetworkFile":
        """Validate and build; errors name the offending field"""
        if not isinstance(data, dict):
            raise NetworkFileError("<root>", "expected a JSON object")
        unknown = sorted(set(data) - set(FIELDS))
        if unknown:
            raise NetworkFileError(unknown[0], "unknown field")
        a = _number(data, "a", 1.0)
        r = _number(data, "r", 0.25)
        kind_raw = data.get("kind", "rips")
        try:
            kind = ComplexKind(kind_raw)
        except ValueError:
            raise NetworkFileError("kind", f"expected 'rips' or 'cech', got {kind_raw!r}") from None
        existing = _point_list(data, "existing", a)
        boundary = _point_list(data, "boundary", a) if "boundary" in data else None
        return cls(a=a, r=r, kind=kind, existing=existing, boundary=boundary)

    @classmethod
    def load(cls, path: str) -> "NetworkFile":
        try:
            text = Path(path).read_text()
        except OSError as e:
            raise NetworkFileError("<file>", f"cannot read {path}: {e}") from e
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise NetworkFileError("<json>", f"malformed JSON at line {e.lineno}: {e.msg}") from e
        return cls.from_dict(data)

    def save(self, path: str) -> str:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2))
        return str(path)
