"""JSON wire formats, the DOT export, and the classify dispatcher.

Space JSON:  {"points": n, "opens": [[...sorted point indices...], ...]}
             (the empty set appears as [] and the full carrier must be
             listed; the reader canonicalizes through validation)
Group JSON:  {"order": n, "table": [[...], ...]} with identity at index 0
Group-with-topology JSON: {"group": <group JSON or builtin spec string>,
                           "opens": <as in space JSON>}
Map JSON:    {"table": [i0, i1, ...]} with domain/codomain supplied by the
             surrounding context.
"""

from __future__ import annotations

from typing import Any

from finitop.bits import points_of
from finitop.errors import FinitopError
from finitop.groups import FiniteGroup, builtin_group
from finitop.grouptop import (
    GroupWithTopology,
    identity_core,
    inversion_graph_analysis,
)
from finitop.maps import SpaceMap
from finitop.spaces import FiniteSpace, reduction_edges, validate_topology


class MalformedInput(FinitopError):
    pass


def space_to_json(space: FiniteSpace) -> dict:
    return {"points": space.point_count, "opens": space.opens_as_points()}


def space_from_json(obj: Any) -> FiniteSpace:
    if not isinstance(obj, dict) or "points" not in obj or "opens" not in obj:
        raise MalformedInput('space JSON needs "points" and "opens"')
    points = obj["points"]
    opens = obj["opens"]
    if not isinstance(points, int) or not isinstance(opens, list):
        raise MalformedInput('"points" must be an int and "opens" a list')
    for subset in opens:
        if not isinstance(subset, list) or not all(
            isinstance(p, int) for p in subset
        ):
            raise MalformedInput("each open must be a list of point indices")
    return validate_topology(points, opens)


def group_to_json(group: FiniteGroup) -> dict:
    return {"order": group.order, "table": [list(row) for row in group.table]}


def group_from_json(obj: Any) -> FiniteGroup:
    if isinstance(obj, str):
        return builtin_group(obj)
    if not isinstance(obj, dict) or "order" not in obj or "table" not in obj:
        raise MalformedInput('group JSON needs "order" and "table" (or a spec string)')
    table = obj["table"]
    if not isinstance(table, list) or len(table) != obj["order"]:
        raise MalformedInput('"table" must be a list of rows matching "order"')
    return FiniteGroup(table)


def gwt_to_json(gwt: GroupWithTopology) -> dict:
    return {
        "group": group_to_json(gwt.group),
        "opens": gwt.space.opens_as_points(),
    }


def gwt_from_json(obj: Any) -> GroupWithTopology:
    if not isinstance(obj, dict) or "group" not in obj or "opens" not in obj:
        raise MalformedInput('group-with-topology JSON needs "group" and "opens"')
    group = group_from_json(obj["group"])
    space = validate_topology(group.order, obj["opens"])
    return GroupWithTopology(group, space)


def map_to_json(f: SpaceMap) -> dict:
    return {"table": list(f.table)}


def map_from_json(domain: FiniteSpace, codomain: FiniteSpace, obj: Any) -> SpaceMap:
    if not isinstance(obj, dict) or "table" not in obj:
        raise MalformedInput('map JSON needs "table"')
    return SpaceMap(domain, codomain, obj["table"])


def classify_payload(obj: Any) -> dict:
    """Fixed-field-order classification of a space or group-with-topology.

    Keeps the documented output keys E_G (identity core), H (kernel of
    the T0 reflection) and S_G (the inversion graph summary).
    """
    if isinstance(obj, dict) and "group" in obj:
        gwt = gwt_from_json(obj)
        core = identity_core(gwt).by_closures
        closure_e = gwt.identity_closure()
        kernel = closure_e & gwt.group.set_inverse(closure_e)
        graph = inversion_graph_analysis(gwt)
        n = gwt.order
        pairs = [
            [p // n, p % n] for p in points_of(graph.pairs)
        ]
        out: dict[str, Any] = {"type": "group_with_topology", "order": n}
        out.update(gwt.profile().as_dict())
        out["separation"] = gwt.space.separation_profile().as_dict()
        out["E_G"] = points_of(core)
        out["H"] = points_of(kernel)
        out["S_G"] = {"pairs": pairs, "closed": graph.graph_closed}
        return out
    space = space_from_json(obj)
    return {
        "type": "space",
        "points": space.point_count,
        "opens_count": len(space.opens),
        "separation": space.separation_profile().as_dict(),
    }


def space_to_dot(space: FiniteSpace, name: str = "space") -> str:
    """DOT digraph: one node per point, edges from a transitive reduction
    of the strict specialization relation."""
    lines = [f"digraph {name} {{"]
    for p in range(space.point_count):
        lines.append(f'  {p} [label="{p}"];')
    for x, y in reduction_edges(space):
        lines.append(f"  {x} -> {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
